#include "evenquads/deck.hpp"

#include "evenquads/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace evenquads {

namespace {

constexpr std::array<std::string_view, 4> kColorNames = {"Green", "Red", "Blue", "Yellow"};
constexpr std::array<std::string_view, 4> kShapeNames = {"Heart", "Square", "Triangle", "Circle"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

template <std::size_t N>
int lookup(const std::array<std::string_view, N>& names, std::string_view text) {
  for (std::size_t i = 0; i < N; ++i) {
    if (iequals(names[i], text)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

void require_distinct(std::vector<Card> cards, const char* what) {
  std::sort(cards.begin(), cards.end());
  if (std::adjacent_find(cards.begin(), cards.end()) != cards.end()) {
    throw std::invalid_argument(std::string(what) + ": repeated card");
  }
}

// All equal, all different, or two states twice each.
bool attribute_ok(int a, int b, int c, int d) {
  std::array<int, 4> counts{};
  ++counts[static_cast<std::size_t>(a)];
  ++counts[static_cast<std::size_t>(b)];
  ++counts[static_cast<std::size_t>(c)];
  ++counts[static_cast<std::size_t>(d)];
  std::sort(counts.begin(), counts.end());
  return counts == std::array{0, 0, 0, 4} || counts == std::array{1, 1, 1, 1} ||
         counts == std::array{0, 0, 2, 2};
}

} // namespace

std::string Card::to_string() const {
  return std::to_string(number) + "-" + std::string(kColorNames[static_cast<std::size_t>(color)]) +
         "-" + std::string(kShapeNames[static_cast<std::size_t>(shape)]);
}

Card Card::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto d1 = t.find('-');
  const auto d2 = d1 == std::string_view::npos ? d1 : t.find('-', d1 + 1);
  if (d2 == std::string_view::npos) {
    throw std::invalid_argument("malformed card '" + std::string(text) + "'");
  }
  const std::string_view num = t.substr(0, d1);
  const int color = lookup(kColorNames, t.substr(d1 + 1, d2 - d1 - 1));
  const int shape = lookup(kShapeNames, t.substr(d2 + 1));
  if (num.size() != 1 || num[0] < '1' || num[0] > '4' || color < 0 || shape < 0) {
    throw std::invalid_argument("malformed card '" + std::string(text) + "'");
  }
  return Card{num[0] - '0', static_cast<Color>(color), static_cast<Shape>(shape)};
}

Point card_to_point(const Card& c) {
  if (c.number < 1 || c.number > 4) {
    throw std::invalid_argument("card number must be 1..4");
  }
  const auto bits = static_cast<std::uint32_t>(c.number - 1) << 4 |
                    static_cast<std::uint32_t>(c.color) << 2 |
                    static_cast<std::uint32_t>(c.shape);
  return Point(6, bits);
}

Card point_to_card(const Point& p) {
  if (p.n() != 6) {
    throw std::invalid_argument("cards correspond to points of Z_2^6");
  }
  const std::uint32_t b = p.bits();
  return Card{static_cast<int>(b >> 4) + 1, static_cast<Color>((b >> 2) & 3u),
              static_cast<Shape>(b & 3u)};
}

std::vector<Card> full_deck() {
  std::vector<Card> deck;
  deck.reserve(kDeckSize);
  for (std::uint32_t b = 0; b < kDeckSize; ++b) {
    deck.push_back(point_to_card(Point(6, b)));
  }
  return deck;
}

bool quad_by_attributes(const Card& a, const Card& b, const Card& c, const Card& d) {
  require_distinct({a, b, c, d}, "quad_by_attributes");
  return attribute_ok(a.number - 1, b.number - 1, c.number - 1, d.number - 1) &&
         attribute_ok(static_cast<int>(a.color), static_cast<int>(b.color),
                      static_cast<int>(c.color), static_cast<int>(d.color)) &&
         attribute_ok(static_cast<int>(a.shape), static_cast<int>(b.shape),
                      static_cast<int>(c.shape), static_cast<int>(d.shape));
}

Card complete_quad(const Card& a, const Card& b, const Card& c) {
  return point_to_card(exclude_of_triple(card_to_point(a), card_to_point(b), card_to_point(c)));
}

std::vector<CardQuad> find_all_quads(const std::vector<Card>& layout) {
  require_distinct(layout, "find_all_quads");
  std::vector<std::uint32_t> pts;
  pts.reserve(layout.size());
  for (const auto& c : layout) {
    pts.push_back(card_to_point(c).bits());
  }
  std::sort(pts.begin(), pts.end());
  // index + 1 of each point in the sorted layout, 0 when absent
  std::array<std::size_t, kDeckSize> where{};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    where[pts[i]] = i + 1;
  }
  std::vector<CardQuad> quads;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const std::size_t l = where[pts[i] ^ pts[j] ^ pts[k]];
        if (l > k + 1) {
          quads.push_back(CardQuad{point_to_card(Point(6, pts[i])), point_to_card(Point(6, pts[j])),
                                   point_to_card(Point(6, pts[k])),
                                   point_to_card(Point(6, pts[l - 1]))});
        }
      }
    }
  }
  return quads;
}

std::vector<Card> deal(std::uint64_t seed, int k) {
  if (k < 0 || k > kDeckSize) {
    throw std::invalid_argument("cannot deal " + std::to_string(k) + " cards from a deck of " +
                                std::to_string(kDeckSize));
  }
  std::vector<Card> deck = full_deck();
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates with unbiased bounded draws.
  for (int i = 0; i < k; ++i) {
    const auto range = static_cast<std::uint64_t>(kDeckSize - i);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(deck[static_cast<std::size_t>(i)], deck[static_cast<std::size_t>(i) + r % range]);
  }
  deck.resize(static_cast<std::size_t>(k));
  return deck;
}

std::vector<Card> sub_deck(const std::vector<ParityConstraint>& constraints) {
  std::vector<Card> out;
  for (std::uint32_t b = 0; b < kDeckSize; ++b) {
    const bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
      if (c.mask >= kDeckSize || (c.parity != 0 && c.parity != 1)) {
        throw std::invalid_argument("parity constraint needs a 6-bit mask and parity 0 or 1");
      }
      return std::popcount(b & c.mask) % 2 == c.parity;
    });
    if (ok) {
      out.push_back(point_to_card(Point(6, b)));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      for (std::size_t k = j + 1; k < out.size(); ++k) {
        const Card d = complete_quad(out[i], out[j], out[k]);
        if (!std::binary_search(out.begin(), out.end(), d, [](const Card& x, const Card& y) {
              return card_to_point(x).bits() < card_to_point(y).bits();
            })) {
          throw std::logic_error("sub-deck is not closed under quads");
        }
      }
    }
  }
  return out;
}

std::vector<Card> parse_layout(std::string_view text) {
  std::vector<Card> cards;
  std::istringstream in{std::string(text)};
  std::string line;
  int style = 0; // 1 names, 2 binaries
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (const auto hash = t.find('#'); hash != std::string_view::npos) {
      t = trim(t.substr(0, hash));
    }
    if (t.empty()) {
      continue;
    }
    const bool binary = std::all_of(t.begin(), t.end(), [](char ch) { return ch == '0' || ch == '1'; });
    const int this_style = binary ? 2 : 1;
    if (style != 0 && style != this_style) {
      throw std::invalid_argument("layout mixes card names and point binaries");
    }
    style = this_style;
    if (binary) {
      if (t.size() != 6) {
        throw std::invalid_argument("card binary must have 6 digits: '" + std::string(t) + "'");
      }
      cards.push_back(point_to_card(Point::parse(t, 6)));
    } else {
      cards.push_back(Card::parse(t));
    }
  }
  require_distinct(cards, "layout");
  return cards;
}

} // namespace evenquads
