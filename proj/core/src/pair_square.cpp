#include "liouq/pair_square.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "liouq/arith.hpp"
#include "liouq/detail/parallel.hpp"
#include "liouq/normality.hpp"

namespace liouq {

namespace {

void check_window(std::uint64_t n, const OffsetSpec& spec, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("N must be positive");
  if (n + spec.max_offset() > table.limit()) {
    throw std::out_of_range("N + i_k = " + std::to_string(n + spec.max_offset()) +
                            " exceeds spf limit " + std::to_string(table.limit()));
  }
}

// Symmetric difference of two sorted prime lists, written to `out`.
void merge_parity(const SquareClass& a, const SquareClass& b, SquareClass& out) {
  out.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

void odd_primes(std::uint64_t n, std::span<const std::uint32_t> spf, SquareClass& out) {
  out.clear();
  while (n > 1) {
    const std::uint64_t p = spf[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e & 1u) out.push_back(p);
  }
}

struct ClassHash {
  std::size_t operator()(const SquareClass& c) const { return boost::hash_range(c.begin(), c.end()); }
};

using ClassGroups = std::unordered_map<SquareClass, std::uint64_t, ClassHash>;

ClassGroups group_classes(const std::vector<SquareClass>& classes) {
  ClassGroups groups;
  groups.reserve(classes.size());
  for (const auto& c : classes) ++groups[c];
  return groups;
}

}  // namespace

SquareClass square_class(std::uint64_t x, const OffsetSpec& spec, const SpfTable& table) {
  if (x == 0) throw std::invalid_argument("x must be positive");
  check_window(x, spec, table);
  const auto spf = table.raw();
  SquareClass acc, factor, merged;
  odd_primes(x, spf, acc);
  for (const std::uint64_t i : spec.offsets()) {
    odd_primes(x + i, spf, factor);
    merge_parity(acc, factor, merged);
    acc.swap(merged);
  }
  return acc;
}

std::vector<SquareClass> square_classes(std::uint64_t n, const OffsetSpec& spec,
                                        const SpfTable& table, unsigned threads) {
  check_window(n, spec, table);
  std::vector<SquareClass> classes(n);
  detail::for_each_chunk(n, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      classes[idx] = square_class(idx + 1, spec, table);
    }
  });
  return classes;
}

PairCountResult count_square_pairs(std::uint64_t n, const OffsetSpec& spec, const SpfTable& table,
                                   unsigned threads) {
  const auto groups = group_classes(square_classes(n, spec, table, threads));
  PairCountResult out;
  out.n = n;
  out.spec = spec;
  for (const auto& [cls, size] : groups) out.pair_count += size * size;
  out.e_tn2 = Rational(static_cast<std::int64_t>(out.pair_count),
                       static_cast<std::int64_t>(checked_mul(n, n)));
  return out;
}

std::vector<PairCountResult> count_square_pairs_prefixes(std::span<const std::uint64_t> grid,
                                                         const OffsetSpec& spec,
                                                         const SpfTable& table,
                                                         unsigned threads) {
  if (grid.empty()) return {};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw std::invalid_argument("grid must be strictly increasing positive integers");
    }
  }
  const auto classes = square_classes(grid.back(), spec, table, threads);
  ClassGroups groups;
  std::vector<PairCountResult> out;
  std::uint64_t pairs = 0;
  std::size_t next = 0;
  for (std::uint64_t x = 1; x <= grid.back(); ++x) {
    // Adding x to a group of size g adds (g+1)^2 - g^2 ordered pairs.
    const std::uint64_t g = groups[classes[x - 1]]++;
    pairs += 2 * g + 1;
    if (x == grid[next]) {
      PairCountResult row;
      row.n = x;
      row.spec = spec;
      row.pair_count = pairs;
      row.e_tn2 = Rational(static_cast<std::int64_t>(pairs), static_cast<std::int64_t>(checked_mul(x, x)));
      out.push_back(std::move(row));
      ++next;
    }
  }
  return out;
}

std::vector<BoundViolation> per_x_bound_check(std::uint64_t n, const OffsetSpec& spec,
                                              const SpfTable& table, unsigned threads) {
  const auto classes = square_classes(n, spec, table, threads);
  const auto groups = group_classes(classes);
  const std::size_t r = common_divisor_set(spec).r();
  std::vector<BoundViolation> violations;
  for (std::uint64_t x = 1; x <= n; ++x) {
    const auto& cls = classes[x - 1];
    const std::uint64_t matches = groups.at(cls);
    const unsigned h = static_cast<unsigned>(cls.size());
    const std::size_t shift = 2 * (r + h);
    // 4^(r+h) >= 2^64 > matches^2 / N whenever the shift is that large.
    if (shift >= 64) continue;
    const u128 lhs = static_cast<u128>(matches) * matches;
    const u128 rhs = (static_cast<u128>(1) << shift) * n;
    if (lhs > rhs) violations.push_back({x, matches, h, r});
  }
  return violations;
}

std::uint64_t smallest_prime_for_exponent(std::size_t k) {
  // (k+1)/log2(p) <= 0.45  <=>  log2(p) >= (k+1)/0.45.
  const long double need = static_cast<long double>(k + 1) / 0.45L;
  if (need > 40.0L) throw std::invalid_argument("too many offsets for the prime search");
  auto is_prime = [](std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d <= v / d; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  auto p = static_cast<std::uint64_t>(std::floor(std::exp2(need)));
  p = p > 2 ? p - 1 : 2;
  while (!(is_prime(p) && std::log2(static_cast<long double>(p)) >= need)) ++p;
  return p;
}

double log_log_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two paired points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

Sum2hReport sum_2h(std::uint64_t n, const OffsetSpec& spec, const SpfTable& table,
                   unsigned threads) {
  const auto classes = square_classes(n, spec, table, threads);
  Sum2hReport out;
  out.n = n;
  out.spec = spec;
  std::vector<std::uint64_t> prefix(n + 1, 0);
  for (std::uint64_t x = 1; x <= n; ++x) {
    const std::size_t h = classes[x - 1].size();
    if (h >= 64) throw std::overflow_error("2^h does not fit in 64 bits");
    prefix[x] = checked_add(prefix[x - 1], std::uint64_t{1} << h);
  }
  out.sum = prefix[n];
  out.smallest_p = smallest_prime_for_exponent(spec.k());
  for (std::uint64_t q = 2; q <= out.smallest_p; ++q) {
    bool prime = true;
    for (std::uint64_t d = 2; d <= q / d; ++d) {
      if (q % d == 0) {
        prime = false;
        break;
      }
    }
    out.prime_index += prime;
  }
  std::vector<double> xs, ys;
  for (unsigned div : {16u, 8u, 4u, 2u, 1u}) {
    const std::uint64_t sub = n / div;
    if (sub < 2) continue;
    xs.push_back(static_cast<double>(sub));
    ys.push_back(static_cast<double>(prefix[sub]));
  }
  if (xs.size() >= 2) out.fitted_exponent = log_log_slope(xs, ys);
  out.ratio_to_1_45 = static_cast<double>(out.sum) /
                      std::pow(static_cast<double>(n + spec.max_offset()), 1.45);
  return out;
}

std::vector<std::uint64_t> derive_seeds(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(count);
  std::uint64_t state = base;
  for (std::size_t i = 0; i < count; ++i) {
    seeds.push_back(splitmix64_mix(state));
    state += 0x9E3779B97F4A7C15ull;
  }
  return seeds;
}

MonteCarloResult monte_carlo_e_tn2(std::uint64_t n, const OffsetSpec& spec,
                                   std::span<const std::uint64_t> seeds, const SpfTable& table,
                                   unsigned threads) {
  if (seeds.size() < 2) throw std::invalid_argument("Monte Carlo needs at least two seeds");
  check_window(n, spec, table);
  const std::uint64_t reach = n + spec.max_offset();
  MonteCarloResult out;
  out.per_seed.resize(seeds.size());
  detail::for_each_chunk(seeds.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto seq = build_signed_sequence({seeds[i], SignMode::kRandom}, reach, table);
      const std::int64_t s = correlation_sum(seq, spec, n).sum;
      out.per_seed[i] = Rational(s * s, static_cast<std::int64_t>(n * n));
    }
  });
  // Fixed summation order keeps the result independent of thread count.
  const double m = static_cast<double>(seeds.size());
  double sum = 0;
  for (const auto& q : out.per_seed) sum += to_double(q);
  out.mean = sum / m;
  double ss = 0;
  for (const auto& q : out.per_seed) {
    const double d = to_double(q) - out.mean;
    ss += d * d;
  }
  out.std_error = std::sqrt(ss / (m - 1)) / std::sqrt(m);
  return out;
}

}  // namespace liouq
