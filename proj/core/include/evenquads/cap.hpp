#pragma once

#include "evenquads/point.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace evenquads {

namespace detail {
/// Passkey for the unchecked Cap constructor; only the enumerator can mint one.
class TrustedCapKey {
  TrustedCapKey() = default;
  friend struct EnumeratorAccess;
};
} // namespace detail

/// A set of points of Z_2^n containing no quad, kept in increasing order.
class Cap {
public:
  /// Empty cap in Z_2^n.
  explicit Cap(int n);

  /// Validates ambient dimension, distinctness and the cap property.
  /// Throws std::invalid_argument on any violation.
  Cap(int n, std::vector<Point> points);

  /// Unchecked construction from an already sorted, valid point list.
  Cap(int n, std::vector<Point> sorted_points, detail::TrustedCapKey) noexcept
      : n_(n), points_(std::move(sorted_points)) {}

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
  [[nodiscard]] std::span<const Point> points() const noexcept { return points_; }
  [[nodiscard]] bool contains(const Point& p) const;

  /// Throws if p is already present or adding it creates a quad.
  [[nodiscard]] Cap with(const Point& p) const;
  /// Throws if p is not a member.
  [[nodiscard]] Cap without(const Point& p) const;

  friend bool operator==(const Cap&, const Cap&) = default;

private:
  int n_;
  std::vector<Point> points_;
};

/// Sidon test: no two disjoint pairs share a sum. O(k^2) with a 2^n-bit table.
/// Throws on repeated points or mixed ambient dimension.
[[nodiscard]] bool is_cap(std::span<const Point> points);

/// Raw form of is_cap for hot loops; `points` must be distinct values < 2^n.
[[nodiscard]] bool is_cap_bits(std::span<const std::uint32_t> points, int n);

/// Unordered triple of cap points, stored in increasing order.
using Triple = std::array<Point, 3>;

struct ExcludeEntry {
  Point point;
  std::vector<Triple> triples;

  [[nodiscard]] int multiplicity() const noexcept { return static_cast<int>(triples.size()); }
  friend bool operator==(const ExcludeEntry&, const ExcludeEntry&) = default;
};

/// Exclude points of a set, each with the triples summing to it.
class ExcludeMap {
public:
  ExcludeMap() = default;
  /// Entries are sorted by point and their triples canonicalized.
  explicit ExcludeMap(std::vector<ExcludeEntry> entries);

  [[nodiscard]] std::span<const ExcludeEntry> entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] const ExcludeEntry* find(const Point& p) const;
  /// 0 when p is not an exclude.
  [[nodiscard]] int multiplicity(const Point& p) const;
  [[nodiscard]] int max_multiplicity() const noexcept;
  [[nodiscard]] std::size_t total_multiplicity() const noexcept;
  /// Multiplicities in increasing order.
  [[nodiscard]] std::vector<int> multiplicity_multiset() const;

  friend bool operator==(const ExcludeMap&, const ExcludeMap&) = default;

private:
  std::vector<ExcludeEntry> entries_;
};

[[nodiscard]] ExcludeMap exclude_map(const Cap& cap);

/// S together with every sum of three distinct members, sorted.
[[nodiscard]] std::vector<Point> quad_closure(std::span<const Point> points);

/// True iff the quad closure is all of Z_2^n.
[[nodiscard]] bool is_complete_in_ambient(const Cap& cap);

/// True iff the quad closure covers the affine span. Throws on an empty cap.
[[nodiscard]] bool completes_span(const Cap& cap);

/// Cap dimension; throws std::domain_error on an empty cap.
[[nodiscard]] int cap_dimension(const Cap& cap);

} // namespace evenquads
