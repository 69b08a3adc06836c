#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "liouq/arith.hpp"
#include "liouq/sieve.hpp"
#include "support/oracles.hpp"

namespace liouq {
namespace {

const SpfTable& table() {
  static const SpfTable t = build_spf(100000);
  return t;
}

TEST(Sieve, MatchesTrialDivisionUpTo1e5) {
  const auto& t = table();
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    ASSERT_EQ(t.spf(n), oracle::trial_spf(n)) << n;
  }
  EXPECT_EQ(t.spf(12), 2u);
  EXPECT_EQ(t.spf(97), 97u);
  EXPECT_EQ(t.spf(49), 7u);
}

TEST(Sieve, RejectsBadLimits) {
  EXPECT_THROW(build_spf(0), std::invalid_argument);
  EXPECT_THROW(build_spf(1), std::invalid_argument);
  EXPECT_THROW(build_spf(std::uint64_t{1} << 32), std::invalid_argument);
  EXPECT_NO_THROW(build_spf(2));
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12, table()), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1, table()).empty());
  EXPECT_EQ(factorize(97, table()), (Factorization{{97, 1}}));
  EXPECT_THROW(factorize(0, table()), std::invalid_argument);
  EXPECT_THROW(factorize(100001, table()), std::out_of_range);
}

TEST(Factorize, ReconstructsAndMatchesOracle) {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto f = factorize(n, table());
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) ASSERT_LT(f[i - 1].prime, f[i].prime);
      for (unsigned e = 0; e < f[i].exponent; ++e) prod *= f[i].prime;
    }
    ASSERT_EQ(prod, n);
  }
  for (std::uint64_t n : {360ull, 65536ull, 99991ull, 30030ull}) {
    const auto f = factorize(n, table());
    const auto o = oracle::trial_factor(n);
    ASSERT_EQ(f.size(), o.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_EQ(f[i].prime, o[i].first);
      EXPECT_EQ(f[i].exponent, o[i].second);
    }
  }
}

TEST(LiouvilleClassic, ExamplesAndOracle) {
  EXPECT_EQ(liouville_classic(1, table()), 1);
  EXPECT_EQ(liouville_classic(12, table()), -1);
  for (std::uint64_t n = 1; n * n <= 100000; ++n) EXPECT_EQ(liouville_classic(n * n, table()), 1);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    ASSERT_EQ(liouville_classic(n, table()), oracle::trial_liouville(n)) << n;
  }
}

TEST(LiouvilleClassic, CompletelyMultiplicative) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t m = rng() % 1000 + 1;
    const std::uint64_t n = rng() % (100000 / m) + 1;
    ASSERT_EQ(liouville_classic(m * n, table()),
              liouville_classic(m, table()) * liouville_classic(n, table()));
  }
}

TEST(SquarefreeKernel, Examples) {
  EXPECT_EQ(squarefree_kernel(12, table()), (SquarefreeKernel{3, 1}));
  EXPECT_EQ(squarefree_kernel(4, table()), (SquarefreeKernel{1, 0}));
  EXPECT_EQ(squarefree_kernel(360, table()), (SquarefreeKernel{10, 2}));
  EXPECT_THROW(squarefree_kernel(100001, table()), std::out_of_range);
}

TEST(SquarefreeKernel, KernelIsSquarefreeAndCofactorSquare) {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto k = squarefree_kernel(n, table());
    ASSERT_EQ(n % k.kernel, 0u);
    ASSERT_TRUE(is_perfect_square(n / k.kernel)) << n;
    for (const auto& [p, e] : factorize(k.kernel, table())) ASSERT_EQ(e, 1u);
    ASSERT_EQ(factorize(k.kernel, table()).size(), k.h);
  }
}

TEST(Xi, Examples) {
  EXPECT_EQ(xi(5, OffsetSpec{}), 5u);
  EXPECT_EQ(xi(3, OffsetSpec({1})), 12u);
  EXPECT_EQ(xi(2, OffsetSpec({1, 2})), 24u);
  EXPECT_THROW(xi(0, OffsetSpec{}), std::invalid_argument);
}

TEST(Xi, ReportsOverflowInsteadOfWrapping) {
  const OffsetSpec spec({1, 2, 3});
  EXPECT_NO_THROW(xi(50000, spec));
  EXPECT_THROW(xi(1000000, spec), std::overflow_error);
  EXPECT_EQ(oracle::wide_xi(50000, {1, 2, 3}), oracle::cpp_int(xi(50000, spec)));
}

TEST(Xi, SquareProductIffKernelsEqual) {
  const SpfTable t = build_spf(2'000'000);
  for (const auto& offs : std::vector<std::vector<std::uint64_t>>{{}, {1}, {2}, {1, 2}}) {
    const OffsetSpec spec(offs);
    std::vector<std::uint64_t> kernels;
    for (std::uint64_t x = 1; x <= 1000; ++x) {
      const std::uint64_t v = xi(x, spec);
      // Factor xi via its factors to stay within the table.
      std::uint64_t k = 1;
      std::vector<std::uint64_t> odd;
      for (std::uint64_t f : spec.with_zero()) {
        for (const auto& [p, e] : factorize(x + f, t)) {
          if (e % 2) {
            auto it = std::find(odd.begin(), odd.end(), p);
            if (it == odd.end()) odd.push_back(p); else odd.erase(it);
          }
        }
      }
      for (auto p : odd) k *= p;
      ASSERT_EQ(v % k, 0u);
      kernels.push_back(k);
    }
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
      const std::uint64_t x = rng() % 1000 + 1, y = rng() % 1000 + 1;
      const bool square = oracle::wide_is_square(oracle::wide_xi(x, offs) * oracle::wide_xi(y, offs));
      ASSERT_EQ(square, kernels[x - 1] == kernels[y - 1]) << x << ' ' << y;
    }
  }
}

TEST(OffsetSpec, Validation) {
  EXPECT_THROW(OffsetSpec({3, 1}), std::invalid_argument);
  EXPECT_THROW(OffsetSpec({1, 1}), std::invalid_argument);
  EXPECT_THROW(OffsetSpec({0, 2}), std::invalid_argument);
  EXPECT_EQ(OffsetSpec({1, 4}).with_zero(), (std::vector<std::uint64_t>{0, 1, 4}));
}

TEST(CommonDivisorSet, Examples) {
  EXPECT_EQ(common_divisor_set(OffsetSpec{}).r(), 0u);
  EXPECT_EQ(common_divisor_set(OffsetSpec({1})).members, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(common_divisor_set(OffsetSpec({2})).members, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(common_divisor_set(OffsetSpec({2, 6})).members,
            (std::vector<std::uint64_t>{1, 2, 3, 4, 6}));
}

// Every common divisor of two shifted values, over many x, lies in D.
TEST(CommonDivisorSet, CoversObservedCommonDivisorsForAnyX) {
  for (const auto& offs : std::vector<std::vector<std::uint64_t>>{{1}, {2}, {1, 2}, {2, 6}, {3, 5, 12}}) {
    const OffsetSpec spec(offs);
    const auto d = common_divisor_set(spec).members;
    const auto ext = spec.with_zero();
    std::vector<std::uint64_t> seen;
    for (std::uint64_t x = 1; x <= 2000; ++x) {
      for (std::size_t a = 0; a < ext.size(); ++a) {
        for (std::size_t b = a + 1; b < ext.size(); ++b) {
          const std::uint64_t g = std::gcd(x + ext[a], x + ext[b]);
          for (std::uint64_t q = 1; q <= g; ++q) {
            if (g % q == 0) seen.push_back(q);
          }
        }
      }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    EXPECT_EQ(seen, d);
  }
}

TEST(Arith, IsqrtEdges) {
  EXPECT_EQ(isqrt(std::uint64_t{0}), 0u);
  EXPECT_EQ(isqrt(std::uint64_t{15}), 3u);
  EXPECT_EQ(isqrt(std::uint64_t{16}), 4u);
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 0xFFFFFFFFull);
  EXPECT_EQ(isqrt(std::uint64_t{0xFFFFFFFE00000001ull}), 0xFFFFFFFFull);
  EXPECT_EQ(isqrt(std::uint64_t{0xFFFFFFFE00000000ull}), 0xFFFFFFFEull);
  const u128 big = static_cast<u128>(0xFFFFFFFFFFFFull) * 0xFFFFFFFFFFFFull;
  EXPECT_EQ(isqrt(big), 0xFFFFFFFFFFFFull);
  EXPECT_EQ(isqrt(big - 1), 0xFFFFFFFFFFFEull);
}

}  // namespace
}  // namespace liouq
