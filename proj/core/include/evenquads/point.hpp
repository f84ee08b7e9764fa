#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evenquads {

inline constexpr int kMaxAmbientDim = 16;

/// An element of Z_2^n stored as an n-bit pattern.
///
/// The first coordinate is the most significant bit, so the coordinate
/// string "110010" reads directly as the bit literal 0b110010. Points of
/// different ambient dimension never mix: every binary operation checks
/// that both operands carry the same `n`.
class Point {
public:
  constexpr Point() = default;

  /// Throws std::invalid_argument unless 1 <= n <= 16 and bits < 2^n.
  Point(int n, std::uint32_t bits);

  static Point zero(int n) { return Point(n, 0); }

  [[nodiscard]] constexpr int n() const noexcept { return n_; }
  [[nodiscard]] constexpr std::uint32_t bits() const noexcept { return bits_; }

  /// Coordinate i (0-based, left to right as written).
  [[nodiscard]] int coordinate(int i) const;

  /// Fixed-width binary form, most significant bit first.
  [[nodiscard]] std::string to_binary() const;

  /// Accepts a fixed-width binary string of length n (optionally prefixed
  /// with "0b") or a decimal integer.
  static Point parse(std::string_view text, int n);

  friend constexpr auto operator<=>(const Point&, const Point&) = default;

private:
  std::uint8_t n_ = 0;
  std::uint32_t bits_ = 0;
};

/// Coordinatewise sum over GF(2). Throws on dimension mismatch.
[[nodiscard]] Point add(const Point& p, const Point& q);
[[nodiscard]] inline Point operator^(const Point& p, const Point& q) { return add(p, q); }

/// True iff the four points sum to zero. The points must be distinct.
[[nodiscard]] bool is_quad(const Point& a, const Point& b, const Point& c, const Point& d);

/// The unique point completing a quad with three distinct points: a + b + c.
[[nodiscard]] Point exclude_of_triple(const Point& a, const Point& b, const Point& c);

/// Common ambient dimension of a nonempty point list; throws on mismatch.
int common_dimension(std::span<const Point> points);

/// All 2^n points of Z_2^n in increasing order.
std::vector<Point> all_points(int n);

} // namespace evenquads
