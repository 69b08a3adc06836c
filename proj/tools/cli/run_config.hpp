#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace liouq::cli {

// Everything needed to replay one CLI invocation.
struct RunConfig {
  std::string command;
  std::vector<std::uint64_t> seeds;  // first entry is the primary seed
  std::string mode = "random";
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> offsets;
  unsigned max_len = 8;
  unsigned list_words_upto = 4;
  std::string grid;
  std::string equation;
  std::uint64_t c = 2;
  unsigned k = 2;
  std::optional<std::array<std::uint64_t, 3>> triple;
  std::string kind = "sum";
  std::vector<std::uint64_t> members;
  std::uint64_t mc_seeds = 0;
  std::string in_path;
  std::string out_path;
  std::string csv_path;
  unsigned threads = 1;

  std::uint64_t primary_seed() const { return seeds.empty() ? 0 : seeds.front(); }
};

// Full serialization, including thread count and output paths.
nlohmann::ordered_json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

// The part of the config that determines report contents: no thread
// count and no output paths, so reports are identical across them.
nlohmann::ordered_json replay_key(const RunConfig& config);

// Decimal or 0x-prefixed hexadecimal 64-bit unsigned integer.
std::uint64_t parse_seed(std::string_view text);

// "a,b,c" -> {a, b, c}; empty string -> {}.
std::vector<std::uint64_t> parse_u64_list(std::string_view text);

}  // namespace liouq::cli
