#include "cli/run_config.hpp"

#include <charconv>
#include <stdexcept>

namespace liouq::cli {

using nlohmann::json;
using nlohmann::ordered_json;

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("invalid 64-bit seed '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, next - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("invalid integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

ordered_json replay_key(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["seeds"] = c.seeds;
  j["mode"] = c.mode;
  j["limit"] = c.limit;
  j["offsets"] = c.offsets;
  j["max_len"] = c.max_len;
  j["list_words_upto"] = c.list_words_upto;
  j["grid"] = c.grid;
  j["equation"] = c.equation;
  j["c"] = c.c;
  j["k"] = c.k;
  j["triple"] = c.triple ? json(*c.triple) : json(nullptr);
  j["kind"] = c.kind;
  j["members"] = c.members;
  j["mc_seeds"] = c.mc_seeds;
  j["in_path"] = c.in_path;
  return j;
}

ordered_json to_json(const RunConfig& c) {
  ordered_json j = replay_key(c);
  j["out_path"] = c.out_path;
  j["csv_path"] = c.csv_path;
  j["threads"] = c.threads;
  return j;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  auto opt = [&](const char* key, auto& field) {
    if (j.contains(key) && !j.at(key).is_null()) j.at(key).get_to(field);
  };
  opt("seeds", c.seeds);
  opt("mode", c.mode);
  opt("limit", c.limit);
  opt("offsets", c.offsets);
  opt("max_len", c.max_len);
  opt("list_words_upto", c.list_words_upto);
  opt("grid", c.grid);
  opt("equation", c.equation);
  opt("c", c.c);
  opt("k", c.k);
  if (j.contains("triple") && !j.at("triple").is_null()) {
    c.triple = j.at("triple").get<std::array<std::uint64_t, 3>>();
  }
  opt("kind", c.kind);
  opt("members", c.members);
  opt("mc_seeds", c.mc_seeds);
  opt("in_path", c.in_path);
  opt("out_path", c.out_path);
  opt("csv_path", c.csv_path);
  opt("threads", c.threads);
  return c;
}

}  // namespace liouq::cli
