#pragma once

#include "evenquads/point.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <vector>

namespace evenquads {

/// Incremental row-echelon basis of a subspace of GF(2)^n, keyed by pivot bit.
class Gf2Basis {
public:
  /// Reduces v against the basis; inserts and returns true if independent.
  bool insert(std::uint32_t v);
  [[nodiscard]] std::uint32_t reduce(std::uint32_t v) const;
  [[nodiscard]] bool contains(std::uint32_t v) const { return reduce(v) == 0; }
  [[nodiscard]] int rank() const noexcept { return rank_; }

private:
  std::array<std::uint32_t, kMaxAmbientDim> pivots_{};
  int rank_ = 0;
};

/// An r-dimensional affine subspace: base + span(basis).
///
/// Stored as base point and direction vectors; points are produced on demand.
class Flat {
public:
  /// Throws if basis vectors are zero, dependent, or of the wrong dimension.
  Flat(Point base, std::vector<Point> basis);

  [[nodiscard]] int n() const noexcept { return base_.n(); }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const Point& base() const noexcept { return base_; }
  [[nodiscard]] std::span<const Point> basis() const noexcept { return basis_; }
  [[nodiscard]] std::uint64_t size() const noexcept { return std::uint64_t{1} << dim(); }

  /// The point base + sum of basis[i] over the set bits i of index.
  [[nodiscard]] Point point(std::uint64_t index) const;

  /// Lazy view over all 2^r points.
  [[nodiscard]] auto points() const {
    return std::views::iota(std::uint64_t{0}, size()) |
           std::views::transform([this](std::uint64_t i) { return point(i); });
  }

  /// Sorted list of the points; materializes 2^r entries.
  [[nodiscard]] std::vector<Point> point_list() const;

  [[nodiscard]] bool contains(const Point& p) const;

  /// Same point set (bases may differ).
  [[nodiscard]] bool same_set(const Flat& other) const;

private:
  Point base_;
  std::vector<Point> basis_;
  Gf2Basis echelon_;
};

/// Affine span of a nonempty set: base = first point, basis = a maximal
/// independent subset of the differences in input order.
[[nodiscard]] Flat affine_span(std::span<const Point> points);

/// Dimension of the affine span. Throws on an empty set.
[[nodiscard]] int dimension(std::span<const Point> points);

[[nodiscard]] bool is_affinely_independent(std::span<const Point> points);

/// Indices of an odd-size subset of `points` whose sum is `target`, if
/// `target` lies in the affine span. For an affinely independent set the
/// subset is unique.
[[nodiscard]] std::optional<std::vector<std::size_t>> affine_combination(
    std::span<const Point> points, const Point& target);

/// The 2^(n-r) cosets of the anchor's direction space, anchor first, the
/// rest ordered by their smallest point.
[[nodiscard]] std::vector<Flat> partition_into_flats(int ambient_n, int r, const Flat& anchor);

/// x -> M x + v with M invertible over GF(2).
class AffineMap {
public:
  /// `columns[j]` is the image of the j-th unit vector (bit j, counting from
  /// the least significant bit). Throws if the matrix is singular.
  AffineMap(std::vector<std::uint32_t> columns, Point translation);

  static AffineMap identity(int n);

  /// The unique map (restricted to the span) sending source[i] to target[i];
  /// both lists must be affinely independent of the same size. The map is
  /// extended to a full isomorphism of Z_2^n arbitrarily but deterministically.
  static AffineMap from_affine_bases(std::span<const Point> source, std::span<const Point> target);

  [[nodiscard]] int n() const noexcept { return translation_.n(); }
  [[nodiscard]] Point apply(const Point& p) const;
  [[nodiscard]] std::vector<Point> apply(std::span<const Point> points) const;
  [[nodiscard]] std::span<const std::uint32_t> columns() const noexcept { return columns_; }
  [[nodiscard]] const Point& translation() const noexcept { return translation_; }

private:
  std::vector<std::uint32_t> columns_;
  Point translation_;
};

/// Uniformly random invertible affine map, deterministic per seed.
[[nodiscard]] AffineMap random_invertible_map(int n, std::uint64_t seed);

} // namespace evenquads
