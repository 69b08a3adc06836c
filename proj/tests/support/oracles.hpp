#pragma once

// Slow, independent reference implementations used only by tests.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liouq::oracle {

using boost::multiprecision::cpp_int;

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t trial_spf(std::uint64_t n) {
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

inline bool trial_is_prime(std::uint64_t n) { return n >= 2 && trial_spf(n) == n; }

inline int trial_liouville(std::uint64_t n) {
  unsigned total = 0;
  for (const auto& [p, e] : trial_factor(n)) total += e;
  return total % 2 ? -1 : 1;
}

inline cpp_int wide_xi(std::uint64_t x, const std::vector<std::uint64_t>& offsets) {
  cpp_int v = x;
  for (auto i : offsets) v *= cpp_int(x + i);
  return v;
}

inline bool wide_is_square(const cpp_int& v) {
  const cpp_int r = boost::multiprecision::sqrt(v);
  return r * r == v;
}

// Ordered pairs (x, y) in [1, N]^2 with xi(x) xi(y) a perfect square.
inline std::uint64_t brute_pair_count(std::uint64_t n, const std::vector<std::uint64_t>& offsets) {
  std::vector<cpp_int> xs;
  for (std::uint64_t x = 1; x <= n; ++x) xs.push_back(wide_xi(x, offsets));
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) count += wide_is_square(xs[a] * xs[b]);
  }
  return count;
}

}  // namespace liouq::oracle
