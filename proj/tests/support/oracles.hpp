#pragma once

// Brute-force reference implementations used only by tests. Each one follows
// the plain definition (scan every quadruple, every odd subset, every triple)
// and shares no code with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Bits = std::uint32_t;

inline bool is_cap(const std::vector<Bits>& s) {
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t a = j + 1; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          if ((s[i] ^ s[j] ^ s[a] ^ s[b]) == 0) return false;
  return true;
}

// XORs of all odd-size subsets. Exponential; fine for |s| <= 16.
inline std::set<Bits> affine_span(const std::vector<Bits>& s) {
  std::set<Bits> out;
  const std::uint32_t subsets = 1u << s.size();
  for (std::uint32_t m = 1; m < subsets; ++m) {
    if (std::popcount(m) % 2 == 0) continue;
    Bits x = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((m >> i) & 1u) x ^= s[i];
    out.insert(x);
  }
  return out;
}

inline int dimension(const std::vector<Bits>& s) {
  return std::countr_zero(static_cast<std::uint32_t>(affine_span(s).size()));
}

// Rank over GF(2) by plain elimination on a copy.
inline int rank(std::vector<Bits> rows) {
  int r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [&](Bits v) { return (v >> bit) & 1u; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + r, it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(r) && ((rows[i] >> bit) & 1u)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

inline int dimension_by_rank(const std::vector<Bits>& s) {
  std::vector<Bits> diffs;
  for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(s[i] ^ s[0]);
  return rank(diffs);
}

// exclude point -> number of triples summing to it
inline std::map<Bits, int> exclude_multiplicities(const std::vector<Bits>& s) {
  std::map<Bits, int> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t a = j + 1; a < s.size(); ++a) ++out[s[i] ^ s[j] ^ s[a]];
  return out;
}

// Recursive quadrants: each bit pair halves the current square, the first
// bit choosing top/bottom and the second left/right.
inline std::pair<int, int> grid_cell(Bits p, int n) {
  int rows = 1 << (n / 2);
  int cols = 1 << ((n + 1) / 2);
  int row = 0;
  int col = 0;
  int shift = n;
  for (int pair = 0; pair < n / 2; ++pair) {
    shift -= 2;
    const int q = static_cast<int>((p >> shift) & 3u);
    rows /= 2;
    cols /= 2;
    if (q & 2) row += rows;
    if (q & 1) col += cols;
  }
  if (n % 2 == 1) {
    cols /= 2;
    if (p & 1u) col += cols;
  }
  return {row, col};
}

// Counts k-caps of Z_2^n by (k, dimension) by testing every subset. n <= 4.
inline std::map<std::pair<int, int>, std::uint64_t> census_by_subsets(int n) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  const std::uint32_t points = 1u << n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << points); ++mask) {
    std::vector<Bits> s;
    for (Bits p = 0; p < points; ++p)
      if ((mask >> p) & 1u) s.push_back(p);
    if (is_cap(s)) ++out[{static_cast<int>(s.size()), dimension_by_rank(s)}];
  }
  return out;
}

// Same tally by growing subsets and rescanning every triple. n <= 5.
inline std::map<std::pair<int, int>, std::uint64_t> census_by_growth(int n) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  const Bits points = 1u << n;
  std::vector<Bits> cur;
  auto grow = [&](auto&& self, Bits from) -> void {
    for (Bits y = from; y < points; ++y) {
      bool ok = true;
      for (std::size_t i = 0; i < cur.size() && ok; ++i)
        for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
          for (std::size_t a = j + 1; a < cur.size() && ok; ++a)
            if ((cur[i] ^ cur[j] ^ cur[a]) == y) ok = false;
      if (!ok) continue;
      cur.push_back(y);
      ++out[{static_cast<int>(cur.size()), dimension_by_rank(cur)}];
      self(self, y + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

// Random cap: shuffled points added greedily while the quadruple scan allows.
inline std::vector<Bits> random_cap(int n, std::size_t target, std::mt19937_64& rng) {
  std::vector<Bits> order(std::size_t{1} << n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Bits> cap;
  for (Bits p : order) {
    if (cap.size() >= target) break;
    cap.push_back(p);
    if (!is_cap(cap)) cap.pop_back();
  }
  std::sort(cap.begin(), cap.end());
  return cap;
}

struct Map {
  std::vector<Bits> columns; // image of unit vector bit j
  Bits shift = 0;
  Bits operator()(Bits x) const {
    Bits y = shift;
    for (std::size_t j = 0; j < columns.size(); ++j)
      if ((x >> j) & 1u) y ^= columns[j];
    return y;
  }
};

// Every invertible n x n matrix over GF(2), as column lists. n <= 4.
inline std::vector<std::vector<Bits>> all_invertible_matrices(int n) {
  std::vector<std::vector<Bits>> out;
  std::vector<Bits> cols;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cols.size()) == n) {
      out.push_back(cols);
      return;
    }
    for (Bits c = 1; c < (1u << n); ++c) {
      cols.push_back(c);
      if (rank(cols) == static_cast<int>(cols.size())) self(self);
      cols.pop_back();
    }
  };
  rec(rec);
  return out;
}

// True iff some affine bijection of Z_2^n carries c onto d.
inline bool equivalent_by_group(const std::vector<Bits>& c, const std::vector<Bits>& d, int n,
                                const std::vector<std::vector<Bits>>& matrices) {
  if (c.size() != d.size()) return false;
  const std::set<Bits> target(d.begin(), d.end());
  for (const auto& m : matrices) {
    for (Bits v = 0; v < (1u << n); ++v) {
      const Map f{m, v};
      if (std::all_of(c.begin(), c.end(), [&](Bits x) { return target.contains(f(x)); })) return true;
    }
  }
  return false;
}

inline unsigned long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace oracle
