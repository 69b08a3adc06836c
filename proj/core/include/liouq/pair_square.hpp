#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liouq/random_sign.hpp"
#include "liouq/rational.hpp"
#include "liouq/sieve.hpp"

namespace liouq {

// Primes with odd exponent in xi(x), strictly increasing. Two integers
// multiply to a perfect square iff their classes coincide.
using SquareClass = std::vector<std::uint64_t>;

// Computed by merging the odd-exponent primes of each factor x + i_j;
// xi(x) itself is never formed.
SquareClass square_class(std::uint64_t x, const OffsetSpec& spec, const SpfTable& table);

// Square class of every x in [1, n], index x-1.
std::vector<SquareClass> square_classes(std::uint64_t n, const OffsetSpec& spec,
                                        const SpfTable& table, unsigned threads = 1);

struct PairCountResult {
  std::uint64_t n = 0;
  OffsetSpec spec;
  std::uint64_t pair_count = 0;  // ordered pairs (x, y) in [1, N]^2
  Rational e_tn2;                // pair_count / N^2
};

PairCountResult count_square_pairs(std::uint64_t n, const OffsetSpec& spec, const SpfTable& table,
                                   unsigned threads = 1);

// count_square_pairs at every N in `grid` (strictly increasing), from one
// pass over the classes of [1, max(grid)].
std::vector<PairCountResult> count_square_pairs_prefixes(std::span<const std::uint64_t> grid,
                                                         const OffsetSpec& spec,
                                                         const SpfTable& table,
                                                         unsigned threads = 1);

struct BoundViolation {
  std::uint64_t x = 0;
  std::uint64_t matches = 0;  // y in [1, N] with the same class as x
  unsigned h = 0;
  std::size_t r = 0;
};

// Per-x check of  #{y : class(y) = class(x)} <= 2^r 2^h(x) sqrt(N),
// evaluated exactly as matches^2 <= 4^(r+h) N.
std::vector<BoundViolation> per_x_bound_check(std::uint64_t n, const OffsetSpec& spec,
                                              const SpfTable& table, unsigned threads = 1);

struct Sum2hReport {
  std::uint64_t n = 0;
  OffsetSpec spec;
  std::uint64_t sum = 0;          // sum_{m=1}^{N} 2^h(xi(m))
  std::uint64_t smallest_p = 0;   // smallest prime with (k+1)/log2(p) <= 0.45
  std::uint64_t prime_index = 0;  // number of primes <= smallest_p
  // Least-squares slope of log(sum) vs log(N') over N' = N/16, N/8, N/4, N/2, N
  // (points with N' < 2 dropped); zero when fewer than two points remain.
  double fitted_exponent = 0.0;
  // sum / (N + i_k)^1.45
  double ratio_to_1_45 = 0.0;
};

// Smallest prime p with (k+1)/log2(p) <= 0.45.
std::uint64_t smallest_prime_for_exponent(std::size_t k);

Sum2hReport sum_2h(std::uint64_t n, const OffsetSpec& spec, const SpfTable& table,
                   unsigned threads = 1);

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::vector<Rational> per_seed;  // exact T_N^2 for each seed
};

// Sample mean and standard error of T_N^2 over independent assignments.
MonteCarloResult monte_carlo_e_tn2(std::uint64_t n, const OffsetSpec& spec,
                                   std::span<const std::uint64_t> seeds, const SpfTable& table,
                                   unsigned threads = 1);

// `count` well-spread seeds drawn from a SplitMix64 stream started at `base`.
std::vector<std::uint64_t> derive_seeds(std::uint64_t base, std::size_t count);

// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace liouq
