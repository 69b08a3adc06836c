#include "liouq/nset.hpp"

#include <fstream>
#include <iterator>

namespace liouq {

std::vector<std::uint8_t> encode_nset(const SetBitset& set) {
  const std::uint64_t limit = set.limit();
  const std::uint64_t payload = (limit + 7) / 8;
  std::vector<std::uint8_t> out;
  out.reserve(kNsetHeaderSize + payload);
  out.insert(out.end(), {'N', 'S', 'E', 'T', kNsetVersion});
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(limit >> (8 * i)));
  const auto words = set.words();
  for (std::uint64_t j = 0; j < payload; ++j) {
    out.push_back(static_cast<std::uint8_t>(words[j / 8] >> (8 * (j % 8))));
  }
  return out;
}

SetBitset decode_nset(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kMagic[4] = {'N', 'S', 'E', 'T'};
  for (std::size_t i = 0; i < 4; ++i) {
    if (i >= bytes.size()) throw NsetFormatError(i, "file shorter than magic");
    if (bytes[i] != kMagic[i]) throw NsetFormatError(i, "bad magic, expected \"NSET\"");
  }
  if (bytes.size() < 5) throw NsetFormatError(4, "missing format version");
  if (bytes[4] != kNsetVersion) {
    throw NsetFormatError(4, "unsupported format version " + std::to_string(bytes[4]));
  }
  if (bytes.size() < kNsetHeaderSize) throw NsetFormatError(bytes.size(), "header truncated");
  std::uint64_t limit = 0;
  for (int i = 0; i < 8; ++i) limit |= static_cast<std::uint64_t>(bytes[5 + i]) << (8 * i);
  if (limit == 0) throw NsetFormatError(5, "limit must be positive");
  const std::uint64_t payload = (limit + 7) / 8;
  const std::uint64_t have = bytes.size() - kNsetHeaderSize;
  if (have < payload) {
    throw NsetFormatError(bytes.size(), "payload shorter than header limit");
  }
  if (have > payload) {
    throw NsetFormatError(kNsetHeaderSize + payload, "trailing bytes after payload");
  }
  if (const unsigned used = limit % 8; used != 0) {
    const std::uint8_t last = bytes[kNsetHeaderSize + payload - 1];
    if (last >> used) {
      throw NsetFormatError(kNsetHeaderSize + payload - 1, "nonzero pad bits in final byte");
    }
  }
  SetBitset set(limit);
  auto words = set.words();
  for (std::uint64_t j = 0; j < payload; ++j) {
    words[j / 8] |= static_cast<std::uint64_t>(bytes[kNsetHeaderSize + j]) << (8 * (j % 8));
  }
  return set;
}

void write_nset_file(const std::filesystem::path& path, const SetBitset& set) {
  const auto bytes = encode_nset(set);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

SetBitset read_nset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_nset(bytes);
}

}  // namespace liouq
