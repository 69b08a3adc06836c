#include "liouq/bitset.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace liouq {

SetBitset::SetBitset(std::uint64_t limit) : limit_(limit), words_((limit + 63) / 64, 0) {}

SetBitset SetBitset::from_members(std::uint64_t limit, std::span<const std::uint64_t> members) {
  SetBitset out(limit);
  for (const std::uint64_t m : members) {
    if (m == 0 || m > limit) {
      throw std::out_of_range("member " + std::to_string(m) + " outside [1, " +
                              std::to_string(limit) + "]");
    }
    out.set(m);
  }
  return out;
}

void SetBitset::set(std::uint64_t n, bool value) {
  if (n == 0 || n > limit_) {
    throw std::out_of_range("bit index " + std::to_string(n) + " outside [1, " +
                            std::to_string(limit_) + "]");
  }
  const std::uint64_t i = n - 1;
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::uint64_t SetBitset::count() const { return count_upto(limit_); }

std::uint64_t SetBitset::count_upto(std::uint64_t n) const {
  if (n > limit_) n = limit_;
  std::uint64_t total = 0;
  const std::uint64_t full = n / 64;
  for (std::uint64_t w = 0; w < full; ++w) total += std::popcount(words_[w]);
  if (const std::uint64_t rem = n % 64; rem != 0) {
    total += std::popcount(words_[full] & ((std::uint64_t{1} << rem) - 1));
  }
  return total;
}

std::vector<std::uint64_t> SetBitset::members(std::uint64_t max_count) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t w = 0; w < words_.size() && out.size() < max_count; ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0 && out.size() < max_count) {
      out.push_back(w * 64 + std::countr_zero(bits) + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

SetBitset SetBitset::truncated(std::uint64_t new_limit) const {
  if (new_limit > limit_) throw std::out_of_range("truncation beyond limit");
  SetBitset out(new_limit);
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = words_[w];
  if (const std::uint64_t rem = new_limit % 64; rem != 0) {
    out.words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
  return out;
}

}  // namespace liouq
