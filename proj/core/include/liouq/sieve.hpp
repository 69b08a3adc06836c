#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace liouq {

// Smallest-prime-factor table over [1, limit]. Immutable once built and
// safe to share between threads.
class SpfTable {
 public:
  // Largest accepted limit; entries are stored as 32-bit values.
  static constexpr std::uint64_t kMaxLimit = (std::uint64_t{1} << 32) - 1;

  explicit SpfTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // Smallest prime dividing n, for 2 <= n <= limit.
  std::uint32_t spf(std::uint64_t n) const;

  bool is_prime(std::uint64_t n) const {
    return n >= 2 && n <= limit_ && spf_[n] == n;
  }

  // Raw access for hot loops; index 0 and 1 hold 0.
  std::span<const std::uint32_t> raw() const { return spf_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

SpfTable build_spf(std::uint64_t limit);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Strictly increasing primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t n, const SpfTable& table);

// (-1)^(sum of exponents).
int liouville_classic(std::uint64_t n, const SpfTable& table);

struct SquarefreeKernel {
  std::uint64_t kernel;  // squarefree c with n = c * m^2
  unsigned h;            // number of primes in kernel

  friend bool operator==(const SquarefreeKernel&, const SquarefreeKernel&) = default;
};

SquarefreeKernel squarefree_kernel(std::uint64_t n, const SpfTable& table);

// Shift tuple i_1 < i_2 < ... < i_k (k may be 0).
class OffsetSpec {
 public:
  OffsetSpec() = default;
  // Throws std::invalid_argument unless strictly increasing and >= 1.
  explicit OffsetSpec(std::vector<std::uint64_t> offsets);

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::size_t k() const { return offsets_.size(); }
  std::uint64_t max_offset() const { return offsets_.empty() ? 0 : offsets_.back(); }

  // The extended list (0, i_1, ..., i_k).
  std::vector<std::uint64_t> with_zero() const;

  friend bool operator==(const OffsetSpec&, const OffsetSpec&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
};

// x (x + i_1) ... (x + i_k). Throws std::overflow_error if the product
// does not fit in 64 bits.
std::uint64_t xi(std::uint64_t x, const OffsetSpec& spec);

// Every d >= 1 dividing at least two of x, x + i_1, ..., x + i_k for some x,
// i.e. every divisor of a nonzero pairwise difference of (0, i_1, ..., i_k).
struct DivisorSet {
  std::vector<std::uint64_t> members;  // sorted

  std::size_t r() const { return members.size(); }
};

DivisorSet common_divisor_set(const OffsetSpec& spec);

}  // namespace liouq
