#include "liouq/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "liouq/arith.hpp"

namespace liouq {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // The double estimate can be off by one in either direction near 2^64.
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t isqrt(u128 n) {
  if (n >> 64 == 0) return isqrt(static_cast<std::uint64_t>(n));
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (r < ~std::uint64_t{0} && static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw std::invalid_argument("spf limit must be at least 2");
  }
  if (limit > kMaxLimit) {
    throw std::invalid_argument("spf limit must be below 2^32");
  }
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::uint32_t SpfTable::spf(std::uint64_t n) const {
  if (n < 2) throw std::invalid_argument("spf is undefined below 2");
  if (n > limit_) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds spf limit " +
                            std::to_string(limit_));
  }
  return spf_[n];
}

SpfTable build_spf(std::uint64_t limit) { return SpfTable(limit); }

namespace {

void check_range(std::uint64_t n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > table.limit()) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds spf limit " +
                            std::to_string(table.limit()));
  }
}

}  // namespace

Factorization factorize(std::uint64_t n, const SpfTable& table) {
  check_range(n, table);
  Factorization out;
  const auto spf = table.raw();
  while (n > 1) {
    const std::uint64_t p = spf[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

int liouville_classic(std::uint64_t n, const SpfTable& table) {
  check_range(n, table);
  const auto spf = table.raw();
  int sign = 1;
  while (n > 1) {
    n /= spf[n];
    sign = -sign;
  }
  return sign;
}

SquarefreeKernel squarefree_kernel(std::uint64_t n, const SpfTable& table) {
  SquarefreeKernel out{1, 0};
  for (const auto& [p, e] : factorize(n, table)) {
    if (e % 2 == 1) {
      out.kernel *= p;
      ++out.h;
    }
  }
  return out;
}

OffsetSpec::OffsetSpec(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (offsets_[i] == 0) throw std::invalid_argument("offsets must be >= 1");
    if (i > 0 && offsets_[i] <= offsets_[i - 1]) {
      throw std::invalid_argument("offsets must be strictly increasing");
    }
  }
}

std::vector<std::uint64_t> OffsetSpec::with_zero() const {
  std::vector<std::uint64_t> out;
  out.reserve(offsets_.size() + 1);
  out.push_back(0);
  out.insert(out.end(), offsets_.begin(), offsets_.end());
  return out;
}

std::uint64_t xi(std::uint64_t x, const OffsetSpec& spec) {
  if (x == 0) throw std::invalid_argument("xi requires x >= 1");
  std::uint64_t prod = x;
  for (const std::uint64_t i : spec.offsets()) {
    prod = checked_mul(prod, checked_add(x, i));
  }
  return prod;
}

DivisorSet common_divisor_set(const OffsetSpec& spec) {
  const auto ext = spec.with_zero();
  std::vector<std::uint64_t> members;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    for (std::size_t b = a + 1; b < ext.size(); ++b) {
      const std::uint64_t diff = ext[b] - ext[a];
      for (std::uint64_t d = 1; d * d <= diff; ++d) {
        if (diff % d != 0) continue;
        members.push_back(d);
        members.push_back(diff / d);
      }
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return DivisorSet{std::move(members)};
}

}  // namespace liouq
