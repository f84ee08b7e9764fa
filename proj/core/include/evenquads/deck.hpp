#pragma once

#include "evenquads/point.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evenquads {

enum class Color : std::uint8_t { Green = 0, Red = 1, Blue = 2, Yellow = 3 };
enum class Shape : std::uint8_t { Heart = 0, Square = 1, Triangle = 2, Circle = 3 };

/// One card of the 64-card deck.
struct Card {
  int number = 1; ///< 1..4
  Color color = Color::Green;
  Shape shape = Shape::Heart;

  /// "3-Blue-Circle".
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string (case-insensitive). Throws std::invalid_argument.
  static Card parse(std::string_view text);

  friend auto operator<=>(const Card&, const Card&) = default;
};

inline constexpr int kDeckSize = 64;

/// Number, color and shape map to the first, second and third coordinate
/// pair: 1,2,3,4 / Green,Red,Blue,Yellow / Heart,Square,Triangle,Circle are
/// 00,01,10,11 in that order.
[[nodiscard]] Point card_to_point(const Card& c);
/// Throws std::invalid_argument unless p lives in Z_2^6.
[[nodiscard]] Card point_to_card(const Point& p);

/// All 64 cards in point order.
[[nodiscard]] std::vector<Card> full_deck();

/// The four cards form a quad: in each attribute the states are all equal,
/// all different, or two states appearing twice each. Throws on duplicates.
[[nodiscard]] bool quad_by_attributes(const Card& a, const Card& b, const Card& c, const Card& d);

/// The unique card completing a quad with three distinct cards.
[[nodiscard]] Card complete_quad(const Card& a, const Card& b, const Card& c);

using CardQuad = std::array<Card, 4>;

/// Every quad in a layout of distinct cards, each sorted in point order and
/// listed lexicographically.
[[nodiscard]] std::vector<CardQuad> find_all_quads(const std::vector<Card>& layout);

/// k cards drawn uniformly without replacement, deterministic per seed.
/// Throws std::invalid_argument when k exceeds the deck.
[[nodiscard]] std::vector<Card> deal(std::uint64_t seed, int k);

/// Cards whose coordinates satisfy popcount(bits & mask) = parity (mod 2) for
/// every (mask, parity) constraint: an affine subspace of the deck. The result
/// is checked to be closed under complete_quad.
struct ParityConstraint {
  std::uint32_t mask = 0;
  int parity = 0;
};
[[nodiscard]] std::vector<Card> sub_deck(const std::vector<ParityConstraint>& constraints);

/// Parses a layout: one card per line, either card names ("3-Blue-Circle")
/// or 6-bit point binaries ("110010"). Blank lines and '#' comments are
/// skipped. Throws std::invalid_argument on mixed or malformed lines and on
/// repeated cards.
[[nodiscard]] std::vector<Card> parse_layout(std::string_view text);

} // namespace evenquads
