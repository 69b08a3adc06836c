#pragma once

#include <cstdint>
#include <string_view>

#include "liouq/bitset.hpp"
#include "liouq/sieve.hpp"

namespace liouq {

enum class SignMode {
  kRandom,              // keyed pseudorandom bit per prime
  kAllPrimesNegative,   // every prime in Q: the classic Liouville function
};

std::string_view to_string(SignMode mode);
// Accepts "random" and "classic" (alias "all-primes-negative").
SignMode parse_sign_mode(std::string_view text);

// SplitMix64 finalizer applied to x + golden gamma.
constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Realizes the random prime set Q. A prime p is in Q iff the low bit of
// splitmix64_mix(seed ^ p) is 1. Pure function of (seed, mode, p).
struct SignAssignment {
  std::uint64_t seed = 0;
  SignMode mode = SignMode::kRandom;

  // Skips the primality check; callers guarantee p is prime.
  constexpr bool in_q_unchecked(std::uint64_t p) const {
    return mode == SignMode::kAllPrimesNegative || (splitmix64_mix(seed ^ p) & 1u);
  }

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

// Sign of a prime p: -1 if p is in Q, +1 otherwise. Primality is checked
// against the table when p <= table.limit(), by trial division otherwise.
// Throws std::invalid_argument for 0, 1 and composites.
int sign_of_prime(const SignAssignment& assignment, std::uint64_t p, const SpfTable& table);
int sign_of_prime(const SignAssignment& assignment, std::uint64_t p);

int lambda_q(const SignAssignment& assignment, std::uint64_t n, const SpfTable& table);

// lambda_Q on [1, limit], one bit per integer (bit set <=> sign -1).
class SignedSequence {
 public:
  SignedSequence() = default;
  explicit SignedSequence(SetBitset negative) : negative_(std::move(negative)) {}

  std::uint64_t limit() const { return negative_.limit(); }
  int sign(std::uint64_t n) const { return negative_.contains(n) ? -1 : 1; }
  bool is_negative(std::uint64_t n) const { return negative_.contains(n); }

  // The set {n : sign(n) = -1}.
  const SetBitset& negative_set() const { return negative_; }

 private:
  SetBitset negative_;
};

// Built by the recurrence sign[n] = sign(spf[n]) * sign[n / spf[n]].
SignedSequence build_signed_sequence(const SignAssignment& assignment, std::uint64_t limit,
                                     const SpfTable& table);

// A_Q intersected with [1, limit].
SetBitset a_q_set(const SignAssignment& assignment, std::uint64_t limit, const SpfTable& table);

}  // namespace liouq
