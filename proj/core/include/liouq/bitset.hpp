#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace liouq {

// Membership bitset over [1, limit]. Bit n-1 of the word array holds n.
class SetBitset {
 public:
  SetBitset() = default;
  explicit SetBitset(std::uint64_t limit);

  // Builds a set from explicit members; every member must lie in [1, limit].
  static SetBitset from_members(std::uint64_t limit, std::span<const std::uint64_t> members);

  std::uint64_t limit() const { return limit_; }

  // False for n == 0 or n > limit.
  bool contains(std::uint64_t n) const {
    if (n == 0 || n > limit_) return false;
    const std::uint64_t i = n - 1;
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::uint64_t n, bool value = true);

  std::uint64_t count() const;
  // Members in [1, n].
  std::uint64_t count_upto(std::uint64_t n) const;

  std::vector<std::uint64_t> members(std::uint64_t max_count = ~std::uint64_t{0}) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  // Copy restricted to [1, new_limit], new_limit <= limit.
  SetBitset truncated(std::uint64_t new_limit) const;

  friend bool operator==(const SetBitset&, const SetBitset&) = default;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace liouq
