#include "evenquads/cap.hpp"
#include "evenquads/census.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace evenquads {

namespace {

// Unbiased integer in [0, bound) from raw engine output.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

} // namespace

MonteCarloEstimate monte_carlo_quad_probability(int k, int n, std::uint64_t trials,
                                                std::uint64_t seed) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw std::invalid_argument("ambient dimension must be in [1, 16]");
  }
  const std::uint32_t space = 1u << n;
  if (k < 0 || static_cast<std::uint32_t>(k) > space) {
    throw std::invalid_argument("cannot sample more points than Z_2^n holds");
  }
  if (trials == 0) {
    throw std::invalid_argument("need at least one trial");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> sample;
  sample.reserve(static_cast<std::size_t>(k));
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Floyd's algorithm: a uniform k-subset in k draws.
    sample.clear();
    for (std::uint32_t j = space - static_cast<std::uint32_t>(k); j < space; ++j) {
      const auto candidate = static_cast<std::uint32_t>(bounded(rng, std::uint64_t{j} + 1));
      if (std::find(sample.begin(), sample.end(), candidate) == sample.end()) {
        sample.push_back(candidate);
      } else {
        sample.push_back(j);
      }
    }
    if (!is_cap_bits(sample, n)) {
      ++hits;
    }
  }
  MonteCarloEstimate est;
  est.k = k;
  est.n = n;
  est.trials = trials;
  est.with_quad = hits;
  est.p_quad = static_cast<double>(hits) / static_cast<double>(trials);
  est.standard_error =
      std::sqrt(est.p_quad * (1.0 - est.p_quad) / static_cast<double>(trials));
  return est;
}

} // namespace evenquads
