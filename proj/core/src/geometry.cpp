#include "evenquads/geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace evenquads {

bool Gf2Basis::insert(std::uint32_t v) {
  v = reduce(v);
  if (v == 0) {
    return false;
  }
  pivots_[static_cast<std::size_t>(std::bit_width(v) - 1)] = v;
  ++rank_;
  return true;
}

// Fully reduced, so equal residues mean equal cosets.
std::uint32_t Gf2Basis::reduce(std::uint32_t v) const {
  for (int bit = static_cast<int>(kMaxAmbientDim) - 1; bit >= 0; --bit) {
    if (((v >> bit) & 1u) != 0 && pivots_[static_cast<std::size_t>(bit)] != 0) {
      v ^= pivots_[static_cast<std::size_t>(bit)];
    }
  }
  return v;
}

Flat::Flat(Point base, std::vector<Point> basis) : base_(base), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (b.n() != base_.n()) {
      throw std::invalid_argument("flat basis vector has wrong ambient dimension");
    }
    if (!echelon_.insert(b.bits())) {
      throw std::invalid_argument("flat basis vectors must be nonzero and linearly independent");
    }
  }
}

Point Flat::point(std::uint64_t index) const {
  std::uint32_t bits = base_.bits();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if ((index >> i) & 1u) {
      bits ^= basis_[i].bits();
    }
  }
  return Point(n(), bits);
}

std::vector<Point> Flat::point_list() const {
  std::vector<Point> out;
  out.reserve(size());
  for (auto p : points()) {
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Flat::contains(const Point& p) const {
  if (p.n() != n()) {
    throw std::invalid_argument("dimension mismatch in Flat::contains");
  }
  return echelon_.contains(p.bits() ^ base_.bits());
}

bool Flat::same_set(const Flat& other) const {
  if (other.n() != n() || other.dim() != dim() || !contains(other.base())) {
    return false;
  }
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Point& b) { return echelon_.contains(b.bits()); });
}

Flat affine_span(std::span<const Point> points) {
  const int n = common_dimension(points);
  const Point base = points.front();
  Gf2Basis echelon;
  std::vector<Point> basis;
  for (const auto& p : points) {
    const std::uint32_t d = p.bits() ^ base.bits();
    if (echelon.insert(d)) {
      basis.emplace_back(n, d);
    }
  }
  return Flat(base, std::move(basis));
}

int dimension(std::span<const Point> points) {
  common_dimension(points);
  Gf2Basis echelon;
  const auto base = points.front().bits();
  for (const auto& p : points) {
    echelon.insert(p.bits() ^ base);
  }
  return echelon.rank();
}

bool is_affinely_independent(std::span<const Point> points) {
  return dimension(points) == static_cast<int>(points.size()) - 1;
}

std::optional<std::vector<std::size_t>> affine_combination(std::span<const Point> points,
                                                           const Point& target) {
  const int n = common_dimension(points);
  if (target.n() != n) {
    throw std::invalid_argument("dimension mismatch in affine_combination");
  }
  // Each echelon row carries the set of input indices (beyond 0) it was built from.
  struct Row {
    std::uint32_t vec;
    std::vector<bool> combo;
  };
  const std::size_t count = points.size();
  const std::uint32_t base = points.front().bits();
  std::vector<Row> rows;
  auto reduce = [&](Row r) {
    for (const auto& row : rows) {
      if (r.vec & (1u << (std::bit_width(row.vec) - 1))) {
        r.vec ^= row.vec;
        for (std::size_t i = 0; i < count; ++i) {
          r.combo[i] = r.combo[i] != row.combo[i];
        }
      }
    }
    return r;
  };
  for (std::size_t i = 1; i < count; ++i) {
    Row r{points[i].bits() ^ base, std::vector<bool>(count, false)};
    r.combo[i] = true;
    r = reduce(std::move(r));
    if (r.vec != 0) {
      // Keep rows sorted by descending pivot so a single pass reduces fully.
      const auto pivot = std::bit_width(r.vec);
      auto pos = std::find_if(rows.begin(), rows.end(),
                              [&](const Row& x) { return std::bit_width(x.vec) < pivot; });
      rows.insert(pos, std::move(r));
    }
  }
  Row t = reduce(Row{target.bits() ^ base, std::vector<bool>(count, false)});
  if (t.vec != 0) {
    return std::nullopt;
  }
  std::vector<std::size_t> subset;
  for (std::size_t i = 1; i < count; ++i) {
    if (t.combo[i]) {
      subset.push_back(i);
    }
  }
  if (subset.size() % 2 == 0) {
    subset.insert(subset.begin(), 0);
  }
  return subset;
}

std::vector<Flat> partition_into_flats(int ambient_n, int r, const Flat& anchor) {
  if (anchor.n() != ambient_n) {
    throw std::invalid_argument("anchor flat lives in a different ambient space");
  }
  if (anchor.dim() != r) {
    throw std::invalid_argument("anchor has dimension " + std::to_string(anchor.dim()) +
                                ", expected " + std::to_string(r));
  }
  Gf2Basis directions;
  std::vector<Point> basis(anchor.basis().begin(), anchor.basis().end());
  for (const auto& b : basis) {
    directions.insert(b.bits());
  }
  // Cosets are identified by the reduced form of any member.
  std::map<std::uint32_t, std::uint32_t> first_member;
  const std::uint32_t size = 1u << ambient_n;
  for (std::uint32_t x = 0; x < size; ++x) {
    first_member.try_emplace(directions.reduce(x), x);
  }
  const std::uint32_t anchor_key = directions.reduce(anchor.base().bits());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> others;
  for (const auto& [key, member] : first_member) {
    if (key != anchor_key) {
      others.emplace_back(member, key);
    }
  }
  std::sort(others.begin(), others.end());
  std::vector<Flat> out;
  out.reserve(others.size() + 1);
  out.push_back(anchor);
  for (const auto& [member, key] : others) {
    out.emplace_back(Point(ambient_n, member), basis);
  }
  return out;
}

namespace {

bool columns_invertible(std::span<const std::uint32_t> columns) {
  Gf2Basis b;
  for (auto c : columns) {
    if (!b.insert(c)) {
      return false;
    }
  }
  return true;
}

} // namespace

AffineMap::AffineMap(std::vector<std::uint32_t> columns, Point translation)
    : columns_(std::move(columns)), translation_(translation) {
  const int n = translation_.n();
  if (static_cast<int>(columns_.size()) != n) {
    throw std::invalid_argument("affine map needs exactly n columns");
  }
  for (auto c : columns_) {
    if (c >> n != 0) {
      throw std::invalid_argument("affine map column out of range");
    }
  }
  if (!columns_invertible(columns_)) {
    throw std::invalid_argument("affine map matrix is singular");
  }
}

AffineMap AffineMap::identity(int n) {
  std::vector<std::uint32_t> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    cols[static_cast<std::size_t>(j)] = 1u << j;
  }
  return AffineMap(std::move(cols), Point::zero(n));
}

AffineMap AffineMap::from_affine_bases(std::span<const Point> source,
                                       std::span<const Point> target) {
  const int n = common_dimension(source);
  if (common_dimension(target) != n || source.size() != target.size()) {
    throw std::invalid_argument("affine bases must have equal size and ambient dimension");
  }
  if (!is_affinely_independent(source) || !is_affinely_independent(target)) {
    throw std::invalid_argument("affine bases must be affinely independent");
  }
  // Pair each source direction with its required image, then extend both sides
  // to bases of GF(2)^n with unit vectors.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  Gf2Basis src_span;
  Gf2Basis dst_span;
  for (std::size_t i = 1; i < source.size(); ++i) {
    const auto u = source[i].bits() ^ source[0].bits();
    const auto w = target[i].bits() ^ target[0].bits();
    src_span.insert(u);
    dst_span.insert(w);
    pairs.emplace_back(u, w);
  }
  std::vector<std::uint32_t> dst_fill;
  for (int j = 0; j < n; ++j) {
    if (dst_span.insert(1u << j)) {
      dst_fill.push_back(1u << j);
    }
  }
  std::size_t fill = 0;
  for (int j = 0; j < n; ++j) {
    if (src_span.insert(1u << j)) {
      pairs.emplace_back(1u << j, dst_fill.at(fill++));
    }
  }
  // Gauss-Jordan on the source halves, mirroring row operations on the images.
  std::vector<std::uint32_t> columns(static_cast<std::size_t>(n), 0);
  for (int bit = n - 1; bit >= 0; --bit) {
    const std::uint32_t mask = 1u << bit;
    auto pivot = std::find_if(pairs.begin(), pairs.end(), [&](const auto& pr) {
      return (pr.first & mask) && (pr.first >> (bit + 1)) == 0;
    });
    if (pivot == pairs.end()) {
      throw std::logic_error("from_affine_bases: incomplete basis");
    }
    const auto pv = *pivot;
    for (auto& pr : pairs) {
      if (&pr != &*pivot && (pr.first & mask)) {
        pr.first ^= pv.first;
        pr.second ^= pv.second;
      }
    }
  }
  for (const auto& [u, w] : pairs) {
    columns[static_cast<std::size_t>(std::bit_width(u) - 1)] = w;
  }
  AffineMap linear(std::move(columns), Point::zero(n));
  const Point shift = linear.apply(source[0]) ^ target[0];
  return AffineMap(std::vector<std::uint32_t>(linear.columns().begin(), linear.columns().end()),
                   shift);
}

Point AffineMap::apply(const Point& p) const {
  if (p.n() != n()) {
    throw std::invalid_argument("dimension mismatch in AffineMap::apply");
  }
  std::uint32_t out = translation_.bits();
  std::uint32_t bits = p.bits();
  while (bits != 0) {
    const int j = std::countr_zero(bits);
    out ^= columns_[static_cast<std::size_t>(j)];
    bits &= bits - 1;
  }
  return Point(n(), out);
}

std::vector<Point> AffineMap::apply(std::span<const Point> points) const {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    out.push_back(apply(p));
  }
  return out;
}

AffineMap random_invertible_map(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw std::invalid_argument("ambient dimension must be in [1, 16]");
  }
  std::mt19937_64 rng(seed);
  const std::uint32_t mask = (1u << n) - 1u;
  // Rejection sampling column by column is uniform over GL(n, 2).
  std::vector<std::uint32_t> columns;
  Gf2Basis span;
  while (static_cast<int>(columns.size()) < n) {
    const auto c = static_cast<std::uint32_t>(rng()) & mask;
    if (span.insert(c)) {
      columns.push_back(c);
    }
  }
  const auto v = static_cast<std::uint32_t>(rng()) & mask;
  return AffineMap(std::move(columns), Point(n, v));
}

} // namespace evenquads
