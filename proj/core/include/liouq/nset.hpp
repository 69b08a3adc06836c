#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouq/bitset.hpp"

namespace liouq {

// NSET layout, little-endian throughout:
//   offset 0   "NSET"
//   offset 4   format version (1)
//   offset 5   limit, u64
//   offset 13  ceil(limit / 8) payload bytes; bit b of byte j is member 8j + b + 1,
//              pad bits in the final byte are zero.
inline constexpr std::uint8_t kNsetVersion = 1;
inline constexpr std::size_t kNsetHeaderSize = 13;

class NsetFormatError : public std::runtime_error {
 public:
  NsetFormatError(std::uint64_t offset, const std::string& what)
      : std::runtime_error("NSET byte offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::uint64_t offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

std::vector<std::uint8_t> encode_nset(const SetBitset& set);
SetBitset decode_nset(std::span<const std::uint8_t> bytes);

void write_nset_file(const std::filesystem::path& path, const SetBitset& set);
SetBitset read_nset_file(const std::filesystem::path& path);

}  // namespace liouq
