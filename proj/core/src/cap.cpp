#include "evenquads/cap.hpp"

#include "evenquads/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace evenquads {

namespace {

void require_distinct_sorted(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw std::invalid_argument("point set contains repeated points");
  }
}

// Bit table over Z_2^n; n <= 16 keeps it at most 1024 words.
class PointTable {
public:
  explicit PointTable(int n) : words_((std::size_t{1} << n) / 64 + 1, 0) {}
  bool test_and_set(std::uint32_t x) {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63u);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  }
  bool test(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63u)) & 1u; }
  void set(std::uint32_t x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63u); }

private:
  std::vector<std::uint64_t> words_;
};

} // namespace

Cap::Cap(int n) : n_(n) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw std::invalid_argument("ambient dimension must be in [1, 16]");
  }
}

Cap::Cap(int n, std::vector<Point> points) : Cap(n) {
  for (const auto& p : points) {
    if (p.n() != n) {
      throw std::invalid_argument("cap point " + p.to_binary() + " not in Z_2^" + std::to_string(n));
    }
  }
  require_distinct_sorted(points);
  if (!is_cap(points)) {
    throw std::invalid_argument("point set contains a quad");
  }
  points_ = std::move(points);
}

bool Cap::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Cap Cap::with(const Point& p) const {
  std::vector<Point> pts = points_;
  pts.push_back(p);
  return Cap(n_, std::move(pts));
}

Cap Cap::without(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) {
    throw std::invalid_argument("point " + p.to_binary() + " is not in the cap");
  }
  std::vector<Point> pts = points_;
  pts.erase(pts.begin() + (it - points_.begin()));
  return Cap(n_, std::move(pts));
}

bool is_cap_bits(std::span<const std::uint32_t> points, int n) {
  if (points.size() < 4) {
    return true;
  }
  PointTable sums(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (sums.test_and_set(points[i] ^ points[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_cap(std::span<const Point> points) {
  if (points.empty()) {
    return true;
  }
  const int n = common_dimension(points);
  std::vector<std::uint32_t> bits;
  bits.reserve(points.size());
  for (const auto& p : points) {
    bits.push_back(p.bits());
  }
  std::vector<std::uint32_t> sorted = bits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("is_cap requires distinct points");
  }
  return is_cap_bits(bits, n);
}

ExcludeMap::ExcludeMap(std::vector<ExcludeEntry> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) {
    for (auto& t : e.triples) {
      std::sort(t.begin(), t.end());
    }
    std::sort(e.triples.begin(), e.triples.end());
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const ExcludeEntry& a, const ExcludeEntry& b) { return a.point < b.point; });
}

const ExcludeEntry* ExcludeMap::find(const Point& p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const ExcludeEntry& e, const Point& q) { return e.point < q; });
  return (it != entries_.end() && it->point == p) ? &*it : nullptr;
}

int ExcludeMap::multiplicity(const Point& p) const {
  const auto* e = find(p);
  return e ? e->multiplicity() : 0;
}

int ExcludeMap::max_multiplicity() const noexcept {
  int best = 0;
  for (const auto& e : entries_) {
    best = std::max(best, e.multiplicity());
  }
  return best;
}

std::size_t ExcludeMap::total_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const auto& e : entries_) {
    total += e.triples.size();
  }
  return total;
}

std::vector<int> ExcludeMap::multiplicity_multiset() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    out.push_back(e.multiplicity());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExcludeMap exclude_map(const Cap& cap) {
  const auto pts = cap.points();
  std::map<std::uint32_t, std::vector<Triple>> grouped;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const auto sum = pts[i].bits() ^ pts[j].bits() ^ pts[l].bits();
        grouped[sum].push_back(Triple{pts[i], pts[j], pts[l]});
      }
    }
  }
  std::vector<ExcludeEntry> entries;
  entries.reserve(grouped.size());
  for (auto& [bits, triples] : grouped) {
    entries.push_back(ExcludeEntry{Point(cap.n(), bits), std::move(triples)});
  }
  return ExcludeMap(std::move(entries));
}

std::vector<Point> quad_closure(std::span<const Point> points) {
  if (points.empty()) {
    return {};
  }
  const int n = common_dimension(points);
  std::vector<Point> sorted(points.begin(), points.end());
  require_distinct_sorted(sorted);
  PointTable seen(n);
  for (const auto& p : sorted) {
    seen.set(p.bits());
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto ij = sorted[i].bits() ^ sorted[j].bits();
      for (std::size_t l = j + 1; l < sorted.size(); ++l) {
        seen.set(ij ^ sorted[l].bits());
      }
    }
  }
  std::vector<Point> out;
  const std::uint32_t size = 1u << n;
  for (std::uint32_t x = 0; x < size; ++x) {
    if (seen.test(x)) {
      out.emplace_back(n, x);
    }
  }
  return out;
}

bool is_complete_in_ambient(const Cap& cap) {
  return quad_closure(cap.points()).size() == (std::size_t{1} << cap.n());
}

int cap_dimension(const Cap& cap) {
  if (cap.empty()) {
    throw std::domain_error("dimension of the empty cap is undefined");
  }
  return dimension(cap.points());
}

bool completes_span(const Cap& cap) {
  const int dim = cap_dimension(cap);
  // qc(C) is always inside aff(C), so covering it is a cardinality check.
  return quad_closure(cap.points()).size() == (std::size_t{1} << dim);
}

} // namespace evenquads
