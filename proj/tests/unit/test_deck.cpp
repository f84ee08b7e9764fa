#include "evenquads/cap.hpp"
#include "evenquads/deck.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace evenquads;

TEST_CASE("card encoding") {
  CHECK(card_to_point(Card{4, Color::Green, Shape::Triangle}).to_binary() == "110010");
  CHECK(card_to_point(Card{1, Color::Green, Shape::Heart}).bits() == 0u);
  CHECK(card_to_point(Card{2, Color::Red, Shape::Square}).to_binary() == "010101");
  CHECK(card_to_point(Card{3, Color::Blue, Shape::Circle}).to_binary() == "101011");
  CHECK(card_to_point(Card{1, Color::Yellow, Shape::Heart}).to_binary() == "001100");
  std::set<std::uint32_t> seen;
  for (const Card& c : full_deck()) {
    CHECK(point_to_card(card_to_point(c)) == c);
    seen.insert(card_to_point(c).bits());
  }
  CHECK(seen.size() == 64);
  CHECK_THROWS_AS(point_to_card(Point(5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(card_to_point(Card{5, Color::Red, Shape::Heart}), std::invalid_argument);
}

TEST_CASE("card text form") {
  CHECK(Card{3, Color::Blue, Shape::Circle}.to_string() == "3-Blue-Circle");
  CHECK(Card::parse("3-Blue-Circle") == Card{3, Color::Blue, Shape::Circle});
  CHECK(Card::parse(" 1-green-heart ") == Card{1, Color::Green, Shape::Heart});
  for (const Card& c : full_deck()) CHECK(Card::parse(c.to_string()) == c);
  CHECK_THROWS_AS(Card::parse("5-Blue-Circle"), std::invalid_argument);
  CHECK_THROWS_AS(Card::parse("3-Purple-Circle"), std::invalid_argument);
  CHECK_THROWS_AS(Card::parse("3-Blue"), std::invalid_argument);
}

TEST_CASE("attribute conditions") {
  // same number and color, four different shapes
  CHECK(quad_by_attributes({2, Color::Red, Shape::Heart}, {2, Color::Red, Shape::Square},
                           {2, Color::Red, Shape::Triangle}, {2, Color::Red, Shape::Circle}));
  // two circles, a square and a heart fail in shape
  CHECK_FALSE(quad_by_attributes({1, Color::Green, Shape::Circle}, {2, Color::Green, Shape::Circle},
                                 {3, Color::Green, Shape::Square}, {4, Color::Green, Shape::Heart}));
  // two states twice each in every attribute
  CHECK(quad_by_attributes({1, Color::Green, Shape::Heart}, {1, Color::Red, Shape::Square},
                           {2, Color::Green, Shape::Square}, {2, Color::Red, Shape::Heart}));
  CHECK_THROWS_AS(quad_by_attributes({1, Color::Green, Shape::Heart}, {1, Color::Green, Shape::Heart},
                                     {2, Color::Green, Shape::Square}, {2, Color::Red, Shape::Heart}),
                  std::invalid_argument);
}

TEST_CASE("attribute conditions are the zero-sum condition on all quadruples") {
  const auto deck = full_deck();
  std::size_t checked = 0;
  std::size_t quads = 0;
  for (std::size_t a = 0; a < 64; ++a)
    for (std::size_t b = a + 1; b < 64; ++b)
      for (std::size_t c = b + 1; c < 64; ++c)
        for (std::size_t d = c + 1; d < 64; ++d) {
          const bool attr = quad_by_attributes(deck[a], deck[b], deck[c], deck[d]);
          const bool sum = is_quad(card_to_point(deck[a]), card_to_point(deck[b]),
                                   card_to_point(deck[c]), card_to_point(deck[d]));
          REQUIRE(attr == sum);
          ++checked;
          quads += attr ? 1 : 0;
        }
  CHECK(checked == 635376);
  CHECK(quads == 64 * 63 * 62 / 24);
}

TEST_CASE("completing a quad") {
  const auto deck = full_deck();
  for (std::size_t a = 0; a < 64; a += 5)
    for (std::size_t b = a + 1; b < 64; b += 3)
      for (std::size_t c = b + 1; c < 64; c += 7) {
        const Card d = complete_quad(deck[a], deck[b], deck[c]);
        CHECK(d != deck[a]);
        CHECK(d != deck[b]);
        CHECK(d != deck[c]);
        CHECK(quad_by_attributes(deck[a], deck[b], deck[c], d));
        CHECK(complete_quad(deck[c], deck[a], deck[b]) == d);
        CHECK(complete_quad(deck[b], deck[c], deck[a]) == d);
      }
  // one color throughout stays that color
  for (Color col : {Color::Green, Color::Red, Color::Blue, Color::Yellow}) {
    std::vector<Card> mono;
    for (const Card& c : deck)
      if (c.color == col) mono.push_back(c);
    for (std::size_t a = 0; a < mono.size(); ++a)
      for (std::size_t b = a + 1; b < mono.size(); ++b)
        for (std::size_t c = b + 1; c < mono.size(); ++c)
          CHECK(complete_quad(mono[a], mono[b], mono[c]).color == col);
  }
  CHECK_THROWS(complete_quad(deck[0], deck[0], deck[1]));
}

TEST_CASE("finding quads in layouts") {
  const std::vector<Card> quad = {{1, Color::Green, Shape::Heart}, {1, Color::Green, Shape::Square},
                                  {1, Color::Red, Shape::Heart}, {1, Color::Red, Shape::Square}};
  CHECK(find_all_quads(quad).size() == 1);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto layout = deal(seed, 4 + static_cast<int>(seed % 14));
    const auto found = find_all_quads(layout);
    // brute force over every quadruple of the layout
    std::vector<std::uint32_t> bits;
    for (const auto& c : layout) bits.push_back(card_to_point(c).bits());
    std::size_t expect = 0;
    for (std::size_t a = 0; a < bits.size(); ++a)
      for (std::size_t b = a + 1; b < bits.size(); ++b)
        for (std::size_t c = b + 1; c < bits.size(); ++c)
          for (std::size_t d = c + 1; d < bits.size(); ++d)
            expect += (bits[a] ^ bits[b] ^ bits[c] ^ bits[d]) == 0 ? 1 : 0;
    CHECK(found.size() == expect);
    CHECK(found.empty() == oracle::is_cap(bits));
    CHECK(std::is_sorted(found.begin(), found.end()));
    for (const auto& q : found) {
      CHECK(std::is_sorted(q.begin(), q.end()));
      CHECK(quad_by_attributes(q[0], q[1], q[2], q[3]));
    }
    if (layout.size() >= 10) CHECK_FALSE(found.empty());
  }
}

TEST_CASE("nine cards can avoid quads but ten cannot") {
  std::mt19937_64 rng(2);
  std::vector<std::uint32_t> nine;
  while (nine.size() != 9) nine = oracle::random_cap(6, 9, rng);
  std::vector<Card> layout;
  for (auto b : nine) layout.push_back(point_to_card(Point(6, b)));
  CHECK(find_all_quads(layout).empty());
  for (const Card& extra : full_deck()) {
    if (std::find(layout.begin(), layout.end(), extra) != layout.end()) continue;
    auto ten = layout;
    ten.push_back(extra);
    CHECK_FALSE(find_all_quads(ten).empty());
  }
}

TEST_CASE("dealing") {
  const auto a = deal(17, 12);
  CHECK(a.size() == 12);
  CHECK(a == deal(17, 12));
  CHECK(a != deal(18, 12));
  std::set<Card> distinct(a.begin(), a.end());
  CHECK(distinct.size() == 12);
  CHECK(deal(1, 64).size() == 64);
  CHECK(deal(1, 0).empty());
  CHECK_THROWS_AS(deal(1, 65), std::invalid_argument);
}

TEST_CASE("sub-decks are closed under quads") {
  const auto half = sub_deck({{0b001100, 1}}); // red or blue cards
  CHECK(half.size() == 32);
  for (const Card& c : half) CHECK((c.color == Color::Red || c.color == Color::Blue));
  for (std::size_t a = 0; a < half.size(); ++a)
    for (std::size_t b = a + 1; b < half.size(); ++b)
      for (std::size_t c = b + 1; c < half.size(); ++c) {
        const Card d = complete_quad(half[a], half[b], half[c]);
        CHECK(std::find(half.begin(), half.end(), d) != half.end());
      }
  CHECK(sub_deck({{0b110000, 0}, {0b000011, 0}}).size() == 16);
  CHECK(sub_deck({}).size() == 64);
  CHECK(sub_deck({{0b000001, 0}, {0b000001, 1}}).empty());
  CHECK_THROWS_AS((void)sub_deck({{0b1000000, 0}}), std::invalid_argument);
}

TEST_CASE("layout parsing detects the line format") {
  const auto names = parse_layout("# four cards\n3-Blue-Circle\n\n1-Green-Heart  # zero\n");
  CHECK(names == std::vector<Card>{{3, Color::Blue, Shape::Circle}, {1, Color::Green, Shape::Heart}});
  const auto binaries = parse_layout("110010\n000000\n");
  CHECK(binaries == std::vector<Card>{{4, Color::Green, Shape::Triangle}, {1, Color::Green, Shape::Heart}});
  CHECK_THROWS_AS((void)parse_layout("110010\n1-Green-Heart\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_layout("110010\n110010\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_layout("11001\n"), std::invalid_argument);
  CHECK(parse_layout("").empty());
}
