#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/reports.hpp"
#include "liouq/nset.hpp"
#include "liouq/random_sign.hpp"

namespace liouq::cli {

namespace {

using nlohmann::json;

struct Emitter {
  std::ostream& fallback;

  void write(const std::string& path, const std::string& text) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
  }
};

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

SignAssignment assignment_of(const RunConfig& c) {
  return {c.primary_seed(), parse_sign_mode(c.mode)};
}

SpfTable table_for(std::uint64_t limit) { return build_spf(std::max<std::uint64_t>(limit, 2)); }

ordered_json source_json(const RunConfig& c) {
  if (!c.in_path.empty()) return {{"kind", "file"}, {"path", c.in_path}};
  if (!c.members.empty()) return {{"kind", "members"}, {"count", c.members.size()}};
  return {{"kind", "a_q"}, {"seed", c.primary_seed()}, {"mode", c.mode}};
}

// The set a command operates on: an NSET file, explicit members, or A_Q.
SetBitset load_set(const RunConfig& c, std::uint64_t& limit) {
  if (!c.in_path.empty()) {
    auto set = read_nset_file(c.in_path);
    if (limit == 0) limit = set.limit();
    if (limit > set.limit()) {
      throw std::out_of_range("limit " + std::to_string(limit) + " exceeds file limit " +
                              std::to_string(set.limit()));
    }
    return set;
  }
  if (!c.members.empty()) {
    if (limit == 0) limit = *std::max_element(c.members.begin(), c.members.end());
    return SetBitset::from_members(limit, c.members);
  }
  if (limit == 0) throw std::invalid_argument("--limit is required");
  return a_q_set(assignment_of(c), limit, table_for(limit));
}

ordered_json envelope(const RunConfig& c) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = c.command;
  return j;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  if (c.limit == 0) throw std::invalid_argument("--limit must be positive");
  if (c.out_path.empty()) throw std::invalid_argument("generate needs --out <file.nset>");
  const auto set = a_q_set(assignment_of(c), c.limit, table_for(c.limit));
  write_nset_file(c.out_path, set);
  ordered_json j = envelope(c);
  j["seed"] = c.primary_seed();
  j["mode"] = c.mode;
  j["limit"] = c.limit;
  j["members"] = set.count();
  j["density"] = fixed(static_cast<double>(set.count()) / static_cast<double>(c.limit));
  j["first_members"] = set.members(20);
  j["nset_bytes"] = kNsetHeaderSize + (c.limit + 7) / 8;
  j["config"] = replay_key(c);
  out << dump(j);
  return kExitOk;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
  std::uint64_t n = c.limit;
  const auto set = load_set(c, n);
  const auto stats = word_frequencies(set, c.max_len, n, c.threads);
  ordered_json j = envelope(c);
  j["source"] = source_json(c);
  j["N"] = n;
  j["max_len"] = c.max_len;
  j["window_convention"] = "positions 1..N-l+1, denominator N-l+1";
  j["words"] = word_rows(stats, c.list_words_upto);
  j["discrepancy"] = discrepancy_json(discrepancy_report(stats));
  j["config"] = replay_key(c);
  Emitter{out}.write(c.out_path, dump(j));
  return kExitOk;
}

int cmd_correlation(const RunConfig& c, std::ostream& out) {
  if (c.limit == 0) throw std::invalid_argument("--limit must be positive");
  const OffsetSpec spec(c.offsets);
  const auto grid = c.grid.empty() ? std::vector<std::uint64_t>{} : parse_grid(c.grid);
  const std::uint64_t top = std::max(c.limit, grid.empty() ? 0 : grid.back());
  const std::uint64_t reach = top + spec.max_offset();
  const auto seq = build_signed_sequence(assignment_of(c), reach, table_for(reach));
  ordered_json j = envelope(c);
  j["seed"] = c.primary_seed();
  j["mode"] = c.mode;
  j["correlation"] = correlation_json(correlation_sum(seq, spec, c.limit, c.threads));
  if (!grid.empty()) {
    const auto trend = subsequence_trend(seq, spec, grid);
    j["trend"] = trend_json(trend);
    if (!c.csv_path.empty()) {
      std::ostringstream csv;
      write_trend_csv(csv, trend);
      Emitter{out}.write(c.csv_path, csv.str());
    }
  }
  j["config"] = replay_key(c);
  Emitter{out}.write(c.out_path, dump(j));
  return kExitOk;
}

std::vector<std::uint64_t> default_decay_grid(std::uint64_t n) {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t p = 16; p <= n; p *= 2) grid.push_back(p);
  if (grid.empty() || grid.back() != n) grid.push_back(n);
  return grid;
}

int cmd_pairsquare(const RunConfig& c, std::ostream& out) {
  if (c.limit == 0) throw std::invalid_argument("--limit must be positive");
  const OffsetSpec spec(c.offsets);
  auto grid = c.grid.empty() ? default_decay_grid(c.limit) : parse_grid(c.grid);
  const std::uint64_t top = std::max(c.limit, grid.back());
  const auto table = table_for(top + spec.max_offset());

  const auto count = count_square_pairs(c.limit, spec, table, c.threads);
  const auto violations = per_x_bound_check(c.limit, spec, table, c.threads);
  const auto s2h = sum_2h(c.limit, spec, table, c.threads);
  const auto divisors = common_divisor_set(spec);

  ordered_json j = envelope(c);
  j.update(pair_count_json(count));
  j["r"] = divisors.r();
  j["divisor_set"] = divisors.members;
  j["bound_violations"] = violations_json(violations);
  j.update(sum2h_json(s2h));

  std::vector<std::uint64_t> seeds;
  if (c.mc_seeds > 0) {
    seeds = derive_seeds(c.primary_seed(), c.mc_seeds);
  } else if (c.seeds.size() >= 2) {
    seeds = c.seeds;
  }
  if (!seeds.empty()) {
    const auto mc = monte_carlo_e_tn2(c.limit, spec, seeds, table, c.threads);
    auto m = monte_carlo_json(mc, seeds);
    const double exact = to_double(count.e_tn2);
    m["exact_e_tn2"] = fixed(exact);
    m["within_3_stderr"] = std::abs(mc.mean - exact) <= 3 * mc.std_error;
    j["monte_carlo"] = m;
  }

  const auto decay = count_square_pairs_prefixes(grid, spec, table, c.threads);
  ordered_json rows = ordered_json::array();
  for (const auto& r : decay) rows.push_back({{"N", r.n}, {"e_tn2", fixed(to_double(r.e_tn2))}});
  j["decay"] = rows;
  if (decay.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& r : decay) {
      xs.push_back(static_cast<double>(r.n));
      ys.push_back(to_double(r.e_tn2));
    }
    j["decay_slope"] = fixed(log_log_slope(xs, ys));
  }
  if (!c.csv_path.empty()) {
    std::ostringstream csv;
    write_decay_csv(csv, decay);
    Emitter{out}.write(c.csv_path, csv.str());
  }
  j["config"] = replay_key(c);
  Emitter{out}.write(c.out_path, dump(j));
  return kExitOk;
}

int exit_for(const SolutionReport& r) {
  switch (r.status) {
    case SolveStatus::kVerified: return kExitOk;
    case SolveStatus::kViolation: return kExitViolation;
    case SolveStatus::kNotFound: return kExitNotFound;
  }
  return kExitError;
}

MagicTriple triple_of(const RunConfig& c, const MagicTriple& fallback) {
  if (!c.triple) return fallback;
  return {(*c.triple)[0], (*c.triple)[1], (*c.triple)[2], fallback.kind};
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const bool seeded = c.in_path.empty() && c.members.empty();
  std::uint64_t n = c.limit;
  SolutionReport report;
  if (c.equation == "schur") {
    if (seeded) {
      if (n == 0) throw std::invalid_argument("--limit is required");
      report = verify_multiplicative_schur(assignment_of(c), n, table_for(n), c.threads);
    } else {
      const auto set = load_set(c, n);
      report = scan_multiplicative_schur(set, n, c.threads);
    }
  } else if (c.equation == "cnk") {
    if (seeded) {
      if (n == 0) throw std::invalid_argument("--limit is required");
      report = verify_cnk(assignment_of(c), c.c, c.k, n, table_for(std::max(n, c.c)));
    } else {
      const auto set = load_set(c, n);
      report = scan_cnk(set, c.c, c.k, n, table_for(n));
    }
  } else if (c.equation == "xyz2" || c.equation == "sumsq" || c.equation == "diffsq") {
    const auto set = load_set(c, n);
    if (c.equation == "xyz2") {
      report = solve_xy_z2(set, n);
    } else if (c.equation == "sumsq") {
      report = solve_sum_of_squares(set, n, triple_of(c, kDefaultSumTriple));
    } else {
      report = solve_diff_of_squares(set, n, triple_of(c, kDefaultDifferenceTriple));
    }
    if (seeded) report.seed = c.primary_seed();
  } else {
    throw std::invalid_argument("unknown equation '" + c.equation +
                                "' (expected schur, cnk, xyz2, sumsq, diffsq)");
  }
  ordered_json j = envelope(c);
  j.update(solution_json(report));
  j["config"] = replay_key(c);
  Emitter{out}.write(c.out_path, dump(j));
  return exit_for(report);
}

int cmd_triples(const RunConfig& c, std::ostream& out) {
  const auto kind = parse_triple_kind(c.kind);
  ordered_json list = ordered_json::array();
  for (const auto& t : find_magic_triples(c.limit, kind)) list.push_back({t.a, t.b, t.c});
  ordered_json j = envelope(c);
  j["kind"] = std::string(to_string(kind));
  j["limit"] = c.limit;
  j["triples"] = list;
  j["config"] = replay_key(c);
  Emitter{out}.write(c.out_path, dump(j));
  return kExitOk;
}

}  // namespace

int run_config(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.threads == 0) throw std::invalid_argument("--threads must be positive");
    if (c.command == "generate") return cmd_generate(c, out);
    if (c.command == "stats") return cmd_stats(c, out);
    if (c.command == "correlation") return cmd_correlation(c, out);
    if (c.command == "pairsquare") return cmd_pairsquare(c, out);
    if (c.command == "solve") return cmd_solve(c, out);
    if (c.command == "triples") return cmd_triples(c, out);
    throw std::invalid_argument("unknown command '" + c.command + "'");
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random Liouville functions, normal sets and diophantine equations"};
  app.require_subcommand(1);

  RunConfig c;
  std::vector<std::string> seed_texts;
  std::string offsets_text, triple_text, members_text, config_path, save_config;

  auto seed_opt = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_texts, "64-bit seed, decimal or 0x-hex (repeatable)");
    sub->add_option("--mode", c.mode, "random or classic")->check(CLI::IsMember({"random", "classic"}));
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "worker threads (never changes output)");
    sub->add_option("--save-config", save_config, "write the run configuration as JSON");
  };

  auto* gen = app.add_subcommand("generate", "write A_Q as an NSET file");
  seed_opt(gen);
  gen->add_option("--limit", c.limit, "largest integer N")->required();
  gen->add_option("--out", c.out_path, "output NSET path")->required();
  common(gen);

  auto* stats = app.add_subcommand("stats", "word frequencies and discrepancy");
  seed_opt(stats);
  stats->add_option("--in", c.in_path, "NSET input instead of a seed");
  stats->add_option("--limit", c.limit, "window N (defaults to the file limit)");
  stats->add_option("--max-word-len", c.max_len, "longest word length (<= 24)");
  stats->add_option("--list-words-upto", c.list_words_upto, "list every word up to this length");
  stats->add_option("--out", c.out_path, "JSON report path");
  common(stats);

  auto* corr = app.add_subcommand("correlation", "correlation sums T_N and trend");
  seed_opt(corr);
  corr->add_option("--limit", c.limit, "N")->required();
  corr->add_option("--offsets", offsets_text, "strictly increasing offsets a,b,c");
  corr->add_option("--grid", c.grid, "N grid: start:end:polyD or a,b,c");
  corr->add_option("--out", c.out_path, "JSON report path");
  corr->add_option("--csv", c.csv_path, "trend CSV path");
  common(corr);

  auto* pairs = app.add_subcommand("pairsquare", "square-pair counts and E(T_N^2)");
  seed_opt(pairs);
  pairs->add_option("--limit", c.limit, "N")->required();
  pairs->add_option("--offsets", offsets_text, "strictly increasing offsets a,b,c");
  pairs->add_option("--mc-seeds", c.mc_seeds, "Monte Carlo seed count derived from --seed");
  pairs->add_option("--grid", c.grid, "decay table grid");
  pairs->add_option("--out", c.out_path, "JSON report path");
  pairs->add_option("--csv", c.csv_path, "decay CSV path");
  common(pairs);

  auto* solve = app.add_subcommand("solve", "solve or refute an equation inside a set");
  seed_opt(solve);
  solve->add_option("--equation", c.equation, "schur, cnk, xyz2, sumsq, diffsq")->required();
  solve->add_option("--in", c.in_path, "NSET input instead of a seed");
  solve->add_option("--members", members_text, "explicit set a,b,c instead of a seed");
  solve->add_option("--limit", c.limit, "search bound N");
  solve->add_option("--c", c.c, "c in xy = c n^k");
  solve->add_option("--k", c.k, "even k in xy = c n^k");
  solve->add_option("--triple", triple_text, "magic triple a,b,c");
  solve->add_option("--out", c.out_path, "JSON report path");
  common(solve);

  auto* triples = app.add_subcommand("triples", "search magic triples");
  triples->add_option("--limit", c.limit, "largest member")->required();
  triples->add_option("--kind", c.kind, "sum or difference");
  triples->add_option("--out", c.out_path, "JSON report path");
  common(triples);

  auto* replay = app.add_subcommand("replay", "re-run a saved configuration or report");
  replay->add_option("--config", config_path, "RunConfig JSON or a report containing one")->required();
  replay->add_option("--out", c.out_path, "override the output path");
  replay->add_option("--threads", c.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (replay->parsed()) {
      std::ifstream f(config_path);
      if (!f) throw std::runtime_error("cannot open " + config_path);
      const json j = json::parse(f);
      RunConfig loaded = run_config_from_json(j.contains("config") ? j.at("config") : j);
      if (replay->count("--out")) loaded.out_path = c.out_path;
      if (replay->count("--threads")) loaded.threads = c.threads;
      return run_config(loaded, out, err);
    }
    c.command = app.get_subcommands().front()->get_name();
    for (const auto& s : seed_texts) c.seeds.push_back(parse_seed(s));
    c.offsets = parse_u64_list(offsets_text);
    c.members = parse_u64_list(members_text);
    if (!triple_text.empty()) {
      const auto t = parse_u64_list(triple_text);
      if (t.size() != 3) throw std::invalid_argument("--triple needs exactly three integers");
      c.triple = std::array<std::uint64_t, 3>{t[0], t[1], t[2]};
    }
    if (!save_config.empty()) Emitter{out}.write(save_config, to_json(c).dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return run_config(c, out, err);
}

}  // namespace liouq::cli
