#pragma once

#include <cstdint>
#include <stdexcept>

namespace liouq {

__extension__ typedef unsigned __int128 u128;

// floor(sqrt(n)), exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t n);

// floor(sqrt(n)) for 128-bit inputs.
std::uint64_t isqrt(u128 n);

inline bool is_perfect_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

inline bool is_perfect_square(u128 n) {
  const u128 r = isqrt(n);
  return r * r == n;
}

// a*b, throwing std::overflow_error instead of wrapping.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit product overflow");
  }
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit sum overflow");
  }
  return out;
}

}  // namespace liouq
