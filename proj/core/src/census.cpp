#include "evenquads/census.hpp"

#include <stdexcept>
#include <string>

namespace evenquads {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

BigInt pow10(int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) {
    out *= 10;
  }
  return out;
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) {
    out *= i;
  }
  return out;
}

BigInt exact_integer(const Rational& q, const char* what) {
  if (denominator(q) != 1) {
    throw std::logic_error(std::string(what) + " is not an integer");
  }
  return numerator(q);
}

void require_n(int n) {
  if (n < 1) {
    throw std::domain_error("ambient dimension must be positive");
  }
}

} // namespace

BigInt binomial(const BigInt& n, int k) {
  if (k < 0 || n < k) {
    return 0;
  }
  BigInt out = 1;
  for (int i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

BigInt count_independent(int k, int n) {
  require_n(n);
  if (k < 1) {
    throw std::domain_error("cap size must be positive");
  }
  const BigInt space = pow2(n);
  if (k == 1) {
    return space;
  }
  BigInt product = space;
  for (int i = 0; i <= k - 2; ++i) {
    const BigInt factor = space - pow2(i);
    if (factor <= 0) {
      return 0;
    }
    product *= factor;
  }
  const BigInt fact = factorial(k);
  if (product % fact != 0) {
    throw std::logic_error("independent cap count is not an integer");
  }
  return product / fact;
}

BigInt count_dim_k_minus_2(int k, int n) {
  require_n(n);
  if (k < 6) {
    throw std::domain_error("dimension k-2 caps need k >= 6");
  }
  const int h = (k - 2) / 2;
  Rational weight = 0;
  for (int i = 2; i <= h; ++i) {
    weight += Rational(binomial(k - 1, 2 * i + 1), 2 * i + 2);
  }
  return exact_integer(Rational(count_independent(k - 1, n)) * weight, "Q_{k-2}(k,n)");
}

BigInt count_odd_sum_caps(int k, int n, int m) {
  require_n(n);
  if (k < 6 || m < 2 || 2 * m + 1 > k - 1) {
    throw std::domain_error("no dimension k-2 caps with k=" + std::to_string(k) + ", m=" +
                            std::to_string(m));
  }
  return exact_integer(Rational(count_independent(k - 1, n)) *
                           Rational(binomial(k - 1, 2 * m + 1), 2 * m + 2),
                       "odd-sum class count");
}

BigInt count_class(const CapClass& c, int n) {
  switch (c.tag) {
  case CapTag::Independent:
    return count_independent(c.k, n);
  case CapTag::OddSum:
  case CapTag::Mult1:
  case CapTag::Mult2:
    return count_odd_sum_caps(c.k, n, c.odd_sum_m.value());
  case CapTag::Dim6Nine:
    return count_9caps_dim6(n);
  }
  throw std::logic_error("unknown cap class");
}

BigInt count_9caps_dim6(int n) {
  require_n(n);
  return exact_integer(Rational(35, 9) * Rational(count_independent(7, n)), "Q_6(9,n)");
}

CensusRow census_row(int k, int n) {
  require_n(n);
  if (k < 1) {
    throw std::domain_error("cap size must be positive");
  }
  CensusRow row{k, n, {}, 0};
  if (k >= 10) {
    if (n >= 7) {
      throw UnsupportedCount("no closed form for k >= 10 in Z_2^n with n >= 7");
    }
    // No k-cap with k >= 10 fits in a 6-flat.
    if (k == 10) {
      for (int r = 7; r <= 9; ++r) {
        row.by_dimension[r] = 0;
      }
    }
    return row;
  }
  row.by_dimension[k - 1] = count_independent(k, n);
  if (k >= 6) {
    row.by_dimension[k - 2] = count_dim_k_minus_2(k, n);
  }
  if (k == 9) {
    row.by_dimension[6] = count_9caps_dim6(n);
  }
  for (const auto& [dim, count] : row.by_dimension) {
    row.total += count;
  }
  return row;
}

BigInt count_caps(int k, int n) { return census_row(k, n).total; }

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) {
    throw std::invalid_argument("need at least one significant digit");
  }
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  if (den == 1) {
    return num.str();
  }
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  // Choose scale s so that floor(q * 10^s) has exactly `digits` digits.
  const BigInt lo = pow10(digits - 1);
  const BigInt hi = pow10(digits);
  int s = 0;
  auto scaled_num = [&](int scale) { return scale >= 0 ? num * pow10(scale) : num; };
  auto scaled_den = [&](int scale) { return scale >= 0 ? den : den * pow10(-scale); };
  while (scaled_num(s) < lo * scaled_den(s)) {
    ++s;
  }
  while (scaled_num(s) >= hi * scaled_den(s)) {
    --s;
  }
  BigInt top = scaled_num(s);
  BigInt bottom = scaled_den(s);
  BigInt quotient = top / bottom;
  const BigInt twice_rem = 2 * (top % bottom);
  if (twice_rem > bottom || (twice_rem == bottom && quotient % 2 == 1)) {
    ++quotient;
  }
  if (quotient == hi) {
    quotient /= 10;
    --s;
  }
  std::string body = quotient.str();
  if (s <= 0) {
    return sign + body + std::string(static_cast<std::size_t>(-s), '0');
  }
  const auto len = static_cast<int>(body.size());
  if (s >= len) {
    return sign + "0." + std::string(static_cast<std::size_t>(s - len), '0') + body;
  }
  return sign + body.substr(0, static_cast<std::size_t>(len - s)) + "." +
         body.substr(static_cast<std::size_t>(len - s));
}

std::string with_commas(const BigInt& v) {
  std::string digits = (v < 0 ? BigInt(-v) : v).str();
  std::string out;
  const auto len = digits.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0 && (len - i) % 3 == 0) {
      out += ',';
    }
    out += digits[i];
  }
  return v < 0 ? "-" + out : out;
}

int max_cap_size(int r) {
  switch (r) {
  case 0:
    return 1;
  case 1:
  case 2:
  case 3:
    return r + 1;
  case 4:
    return 6;
  case 5:
    return 7;
  case 6:
    return 9;
  default:
    throw std::domain_error("maximal cap size known only for r <= 6");
  }
}

ExtremalTables extremal_tables(int n) {
  require_n(n);
  ExtremalTables t;
  for (int k = 1; k <= 9; ++k) {
    int r = 0;
    while (max_cap_size(r) < k) {
      ++r;
    }
    t.min_dimension[k] = r;
  }
  // M(6) = 9 and a 10-cap exists in a 7-flat.
  t.min_dimension[10] = 7;
  for (int r = 1; r <= std::min(n, 6); ++r) {
    t.max_cap_size[r] = max_cap_size(r);
  }
  return t;
}

std::vector<ProbabilityRow> probability_table(int n) {
  if (n < 1 || n > 6) {
    throw std::domain_error("probability table needs 1 <= n <= 6");
  }
  std::vector<ProbabilityRow> rows;
  const BigInt space = pow2(n);
  for (int k = 1; k <= max_cap_size(n) + 1; ++k) {
    ProbabilityRow row;
    row.k = k;
    row.p_no_quad = Rational(count_caps(k, n), binomial(space, k));
    row.p_quad = Rational(1) - row.p_no_quad;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace evenquads
