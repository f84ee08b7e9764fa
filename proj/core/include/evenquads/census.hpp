#pragma once

#include "evenquads/classify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace evenquads {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Number of affinely independent k-caps in Z_2^n:
/// 2^n for k = 1, else (2^n / k!) * prod_{i=0}^{k-2} (2^n - 2^i). Zero once k-1 > n.
[[nodiscard]] BigInt count_independent(int k, int n);

/// Number of k-caps of dimension k-2 (k >= 6): the independent (k-1)-cap count
/// times sum_{i=2}^{floor((k-2)/2)} C(k-1, 2i+1) / (2i+2).
/// Throws std::domain_error for k < 6 and std::logic_error if not integral.
[[nodiscard]] BigInt count_dim_k_minus_2(int k, int n);

/// Dimension k-2 caps whose leftover point is a sum of 2m+1 points of an
/// independent (k-1)-subset: count_independent(k-1, n) * C(k-1, 2m+1) / (2m+2).
/// Summing over m = 2 .. floor((k-2)/2) gives count_dim_k_minus_2.
[[nodiscard]] BigInt count_odd_sum_caps(int k, int n, int m);

/// Closed-form size of one affine-equivalence class (k <= 9) in Z_2^n.
[[nodiscard]] BigInt count_class(const CapClass& c, int n);

/// Number of 9-caps of dimension 6: (35/9) * count_independent(7, n).
[[nodiscard]] BigInt count_9caps_dim6(int n);

/// Thrown for (k, n) pairs without a closed form (k >= 10 with n >= 7).
class UnsupportedCount : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Per-dimension and total k-cap counts in Z_2^n.
struct CensusRow {
  int k = 0;
  int n = 0;
  std::map<int, BigInt> by_dimension; ///< dimension -> count, for r_k <= dim <= k-1
  BigInt total;
};

/// Closed-form census row for 1 <= k <= 9, or k = 10 when n <= 6.
[[nodiscard]] CensusRow census_row(int k, int n);

/// Q(k, n). Throws UnsupportedCount for k >= 10 with n >= 7.
[[nodiscard]] BigInt count_caps(int k, int n);

[[nodiscard]] BigInt binomial(const BigInt& n, int k);

/// Decimal rendering of an exact rational: integers print bare, anything
/// else at `digits` significant digits with round-half-even.
[[nodiscard]] std::string to_decimal(const Rational& q, int digits = 10);

/// Digit-grouped integer, e.g. 1,166,592.
[[nodiscard]] std::string with_commas(const BigInt& v);

struct ProbabilityRow {
  int k = 0;
  Rational p_no_quad;
  Rational p_quad;
  [[nodiscard]] std::string p_no_quad_decimal() const { return to_decimal(p_no_quad); }
  [[nodiscard]] std::string p_quad_decimal() const { return to_decimal(p_quad); }
};

/// Exact probability that k uniformly random points of Z_2^n contain no quad,
/// for k = 1 .. M(n) + 1. Requires 1 <= n <= 6.
[[nodiscard]] std::vector<ProbabilityRow> probability_table(int n = 6);

/// Smallest dimension r_k of a flat holding a k-cap (k = 1..10) and the
/// maximal cap size M(r) in an r-flat (r = 1..6).
struct ExtremalTables {
  std::map<int, int> min_dimension; ///< k -> r_k
  std::map<int, int> max_cap_size;  ///< r -> M(r)
};

/// Tables from the closed theory, with M(r) listed for r <= min(n, 6).
[[nodiscard]] ExtremalTables extremal_tables(int n = 6);

/// M(r) for 0 <= r <= 6.
[[nodiscard]] int max_cap_size(int r);

struct MonteCarloEstimate {
  int k = 0;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t with_quad = 0;
  double p_quad = 0.0;
  double standard_error = 0.0;
};

/// Samples `trials` uniform k-subsets of Z_2^n and counts those containing a
/// quad. Deterministic per seed.
[[nodiscard]] MonteCarloEstimate monte_carlo_quad_probability(int k, int n, std::uint64_t trials,
                                                              std::uint64_t seed);

} // namespace evenquads
