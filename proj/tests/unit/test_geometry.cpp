#include "evenquads/geometry.hpp"
#include "evenquads/grid.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace evenquads;
using testing::bits_of;
using testing::points;

TEST_CASE("points parse and print with the first coordinate leftmost") {
  const Point p = Point::parse("110010", 6);
  CHECK(p.bits() == 0b110010u);
  CHECK(p.to_binary() == "110010");
  CHECK(p.coordinate(0) == 1);
  CHECK(p.coordinate(5) == 0);
  CHECK(Point::parse("0b0101", 4).bits() == 5u);
  CHECK(Point::parse("12", 6).bits() == 12u);
  CHECK_THROWS_AS(Point(4, 16), std::invalid_argument);
  CHECK_THROWS_AS(Point(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Point(17, 0), std::invalid_argument);
  CHECK_THROWS_AS(Point::parse("1x", 4), std::invalid_argument);
}

TEST_CASE("addition is coordinatewise and refuses mixed dimensions") {
  CHECK((Point(4, 0b1100) ^ Point(4, 0b1010)).bits() == 0b0110u);
  CHECK_THROWS_AS(add(Point(4, 1), Point(5, 1)), std::invalid_argument);
}

TEST_CASE("quads are exactly the zero-sum quadruples") {
  for (int n : {4, 5}) {
    const std::uint32_t size = 1u << n;
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = a + 1; b < size; ++b)
        for (std::uint32_t c = b + 1; c < size; ++c) {
          const std::uint32_t d = a ^ b ^ c;
          CHECK(exclude_of_triple(Point(n, a), Point(n, b), Point(n, c)).bits() == d);
          if (d > c) {
            CHECK(is_quad(Point(n, a), Point(n, b), Point(n, c), Point(n, d)));
          }
        }
  }
  CHECK_FALSE(is_quad(Point(4, 0), Point(4, 1), Point(4, 2), Point(4, 4)));
  CHECK_THROWS_AS(is_quad(Point(4, 0), Point(4, 0), Point(4, 1), Point(4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(exclude_of_triple(Point(4, 3), Point(4, 3), Point(4, 1)), std::invalid_argument);
}

TEST_CASE("every quad spans a 2-flat and every 2-flat is a quad") {
  for (int n : {4, 5}) {
    const std::uint32_t size = 1u << n;
    std::size_t quads = 0;
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = a + 1; b < size; ++b)
        for (std::uint32_t c = b + 1; c < size; ++c)
          for (std::uint32_t d = c + 1; d < size; ++d) {
            const auto pts = points(n, {a, b, c, d});
            const bool quad = (a ^ b ^ c ^ d) == 0;
            const Flat f = affine_span(pts);
            // a 4-point 2-flat is its own span
            CHECK(quad == (f.dim() == 2));
            if (quad) {
              ++quads;
              CHECK(bits_of(f.point_list()) == std::vector<std::uint32_t>{a, b, c, d});
            }
          }
    // 2^n * (2^n - 1) * (2^n - 2) / 24 planes
    CHECK(quads == std::size_t{size} * (size - 1) * (size - 2) / 24);
  }
}

TEST_CASE("affine span matches the odd-subset definition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const std::size_t k = 1 + rng() % 9;
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<std::uint32_t>(rng() % (1u << n)));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const auto pts = points(n, s);
    const auto expect = oracle::affine_span(s);
    const Flat f = affine_span(pts);
    CHECK(f.size() == expect.size());
    const auto got = bits_of(f.point_list());
    CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == expect);
    CHECK(dimension(pts) == oracle::dimension(s));
    CHECK(is_affinely_independent(pts) == (oracle::dimension(s) == static_cast<int>(s.size()) - 1));
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      CHECK(f.contains(Point(n, x)) == expect.contains(x));
    }
  }
  CHECK_THROWS(dimension(std::vector<Point>{}));
}

TEST_CASE("affine combinations are odd subsets summing to the target") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6;
    std::vector<std::uint32_t> s;
    for (int i = 0; i < 6; ++i) s.push_back(static_cast<std::uint32_t>(rng() % 64));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const auto pts = points(n, s);
    const auto span = oracle::affine_span(s);
    const auto target = Point(n, static_cast<std::uint32_t>(rng() % 64));
    const auto combo = affine_combination(pts, target);
    REQUIRE(combo.has_value() == span.contains(target.bits()));
    if (combo) {
      CHECK(combo->size() % 2 == 1);
      std::uint32_t x = 0;
      for (auto i : *combo) x ^= s[i];
      CHECK(x == target.bits());
    }
  }
}

TEST_CASE("flats store base and basis and validate them") {
  const Flat f(Point(5, 0b00001), {Point(5, 0b00010), Point(5, 0b00100)});
  CHECK(f.dim() == 2);
  CHECK(bits_of(f.point_list()) == std::vector<std::uint32_t>{1, 3, 5, 7});
  std::size_t seen = 0;
  for (const Point& p : f.points()) {
    CHECK(f.contains(p));
    ++seen;
  }
  CHECK(seen == 4);
  CHECK(f.same_set(Flat(Point(5, 7), {Point(5, 0b00110), Point(5, 0b00010)})));
  CHECK_THROWS_AS(Flat(Point(5, 0), {Point(5, 3), Point(5, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(Flat(Point(5, 0), {Point(5, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(Flat(Point(5, 0), {Point(4, 1)}), std::invalid_argument);
}

TEST_CASE("partition into flats gives the cosets of the anchor direction") {
  const Flat anchor(Point(6, 0b000011), {Point(6, 0b000100), Point(6, 0b010000),
                                          Point(6, 0b001000), Point(6, 0b000001)});
  const auto parts = partition_into_flats(6, 4, anchor);
  REQUIRE(parts.size() == 4);
  CHECK(parts.front().same_set(anchor));
  std::set<std::uint32_t> covered;
  for (const auto& f : parts) {
    CHECK(f.dim() == 4);
    for (const auto& p : f.point_list()) {
      CHECK(covered.insert(p.bits()).second);
      // same direction space: differences to the anchor base land in a coset
      CHECK(anchor.contains(Point(6, p.bits() ^ f.base().bits() ^ anchor.base().bits())));
    }
  }
  CHECK(covered.size() == 64);
  CHECK(parts[1].point_list().front().bits() < parts[2].point_list().front().bits());
  CHECK_THROWS(partition_into_flats(6, 3, anchor));
}

TEST_CASE("affine maps") {
  SUBCASE("random invertible maps are bijections") {
    for (int n = 1; n <= 8; ++n) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const AffineMap f = random_invertible_map(n, seed);
        std::set<std::uint32_t> image;
        for (std::uint32_t x = 0; x < (1u << n); ++x) image.insert(f.apply(Point(n, x)).bits());
        CHECK(image.size() == (std::size_t{1} << n));
        // affine: f(a)+f(b)+f(c) = f(a+b+c)
        const Point a(n, 0), b(n, (1u << n) - 1), c(n, 1u % (1u << n));
        CHECK((f.apply(a) ^ f.apply(b) ^ f.apply(c)) == f.apply(a ^ b ^ c));
      }
    }
    CHECK(random_invertible_map(6, 3).columns().size() == 6);
    const auto f = random_invertible_map(6, 42);
    const auto g = random_invertible_map(6, 42);
    CHECK(std::equal(f.columns().begin(), f.columns().end(), g.columns().begin()));
  }
  SUBCASE("a singular matrix is rejected") {
    CHECK_THROWS_AS(AffineMap({1, 2, 3}, Point(3, 0)), std::invalid_argument);
    CHECK(AffineMap::identity(5).apply(Point(5, 19)).bits() == 19u);
  }
  SUBCASE("maps between affine bases hit every target") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 6;
      const int r = 1 + static_cast<int>(rng() % 6);
      auto independent = [&] {
        std::vector<std::uint32_t> s;
        while (static_cast<int>(s.size()) < r + 1) {
          s.push_back(static_cast<std::uint32_t>(rng() % 64));
          if (oracle::dimension_by_rank(s) != static_cast<int>(s.size()) - 1) s.pop_back();
        }
        return points(n, s);
      };
      const auto src = independent();
      const auto dst = independent();
      const AffineMap f = AffineMap::from_affine_bases(src, dst);
      for (std::size_t i = 0; i < src.size(); ++i) CHECK(f.apply(src[i]) == dst[i]);
    }
  }
}

TEST_CASE("grid placement uses recursive quadrants") {
  CHECK(grid_shape(6).rows == 8);
  CHECK(grid_shape(6).cols == 8);
  CHECK(grid_shape(5).rows == 4);
  CHECK(grid_shape(5).cols == 8);
  const GridCell cell = point_to_grid(Point::parse("110001", 6));
  CHECK(cell.row == 4);
  CHECK(cell.col == 5);
  for (int n = 1; n <= 8; ++n) {
    std::set<std::pair<int, int>> cells;
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      const GridCell g = point_to_grid(Point(n, x));
      const auto [row, col] = oracle::grid_cell(x, n);
      CHECK(g.row == row);
      CHECK(g.col == col);
      CHECK(grid_to_point(g.row, g.col, n).bits() == x);
      cells.insert({g.row, g.col});
    }
    CHECK(cells.size() == (std::size_t{1} << n));
  }
  CHECK_THROWS_AS(grid_to_point(8, 0, 6), std::out_of_range);
}
