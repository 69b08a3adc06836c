#include "liouq/random_sign.hpp"

#include <stdexcept>
#include <string>

namespace liouq {

std::string_view to_string(SignMode mode) {
  return mode == SignMode::kRandom ? "random" : "classic";
}

SignMode parse_sign_mode(std::string_view text) {
  if (text == "random") return SignMode::kRandom;
  if (text == "classic" || text == "all-primes-negative") return SignMode::kAllPrimesNegative;
  throw std::invalid_argument("unknown sign mode '" + std::string(text) + "'");
}

namespace {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_range(std::uint64_t n, std::uint64_t limit) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > limit) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit));
  }
}

}  // namespace

int sign_of_prime(const SignAssignment& assignment, std::uint64_t p, const SpfTable& table) {
  const bool prime = p <= table.limit() ? table.is_prime(p) : is_prime_trial(p);
  if (!prime) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return assignment.in_q_unchecked(p) ? -1 : 1;
}

int sign_of_prime(const SignAssignment& assignment, std::uint64_t p) {
  if (!is_prime_trial(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return assignment.in_q_unchecked(p) ? -1 : 1;
}

int lambda_q(const SignAssignment& assignment, std::uint64_t n, const SpfTable& table) {
  check_range(n, table.limit());
  const auto spf = table.raw();
  int sign = 1;
  while (n > 1) {
    const std::uint64_t p = spf[n];
    n /= p;
    if (assignment.in_q_unchecked(p)) sign = -sign;
  }
  return sign;
}

SignedSequence build_signed_sequence(const SignAssignment& assignment, std::uint64_t limit,
                                     const SpfTable& table) {
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  if (limit > table.limit()) {
    throw std::out_of_range("sequence limit " + std::to_string(limit) + " exceeds spf limit " +
                            std::to_string(table.limit()));
  }
  SetBitset neg(limit);
  const auto spf = table.raw();
  auto words = neg.words();
  auto get = [&](std::uint64_t n) { return (words[(n - 1) >> 6] >> ((n - 1) & 63)) & 1u; };
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint64_t p = spf[n];
    const std::uint64_t bit = (assignment.in_q_unchecked(p) ? 1u : 0u) ^ get(n / p);
    words[(n - 1) >> 6] |= bit << ((n - 1) & 63);
  }
  return SignedSequence(std::move(neg));
}

SetBitset a_q_set(const SignAssignment& assignment, std::uint64_t limit, const SpfTable& table) {
  return build_signed_sequence(assignment, limit, table).negative_set();
}

}  // namespace liouq
