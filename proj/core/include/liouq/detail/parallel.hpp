#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace liouq::detail {

// Splits [0, n) into `threads` contiguous chunks and calls
// fn(chunk, begin, end) for each. Chunk boundaries depend only on
// (n, threads); callers merge per-chunk results in chunk order.
template <class Fn>
void for_each_chunk(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (t <= 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  const std::size_t step = (n + t - 1) / t;
  std::vector<std::exception_ptr> errors(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (std::size_t c = 0; c < t; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    pool.emplace_back([&, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::size_t chunk_count(std::size_t n, unsigned threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
}

}  // namespace liouq::detail
