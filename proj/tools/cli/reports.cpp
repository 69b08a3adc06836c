#include "cli/reports.hpp"

#include <cstdio>
#include <cstdlib>

namespace liouq::cli {

double fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

ordered_json rational_json(const Rational& q) {
  return {{"num", q.numerator()}, {"den", q.denominator()}, {"value", fixed(to_double(q))}};
}

ordered_json word_rows(const WordStats& stats, unsigned upto_length) {
  ordered_json rows = ordered_json::array();
  for (unsigned len = 1; len <= std::min(upto_length, stats.max_len); ++len) {
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      const Word w(code, len);
      const Rational freq = stats.frequency(w);
      rows.push_back({{"word", w.str()},
                      {"length", len},
                      {"count", stats.count(w)},
                      {"window", stats.window(len)},
                      {"freq_num", freq.numerator()},
                      {"freq_den", freq.denominator()},
                      {"deviation", fixed(to_double(stats.deviation(w)))}});
    }
  }
  return rows;
}

ordered_json discrepancy_json(const DiscrepancyReport& report) {
  ordered_json per = ordered_json::array();
  for (const auto& row : report.per_length) {
    per.push_back({{"length", row.length},
                   {"window", row.window},
                   {"worst_word", row.worst_word.str()},
                   {"deviation", fixed(to_double(row.deviation))},
                   {"deviation_num", row.deviation.numerator()},
                   {"deviation_den", row.deviation.denominator()}});
  }
  return {{"N", report.n},
          {"per_length", per},
          {"overall", fixed(to_double(report.overall))},
          {"overall_length", report.overall_length}};
}

ordered_json correlation_json(const CorrelationResult& r) {
  return {{"N", r.n},
          {"offsets", std::vector<std::uint64_t>(r.spec.offsets().begin(), r.spec.offsets().end())},
          {"sum", r.sum},
          {"T_num", r.value.numerator()},
          {"T_den", r.value.denominator()},
          {"T", fixed(r.as_double())}};
}

ordered_json trend_json(const TrendReport& trend) {
  ordered_json points = ordered_json::array();
  for (const auto& p : trend.points) {
    points.push_back({{"N", p.n}, {"sum", p.sum}, {"T", fixed(to_double(p.value))}});
  }
  ordered_json ratios = ordered_json::array();
  for (double r : trend.ratios) ratios.push_back(fixed(r));
  ordered_json j = {{"points", points}, {"ratios", ratios}, {"trend_defined", trend.trend_defined}};
  j["tail_max_abs"] = trend.tail_max_abs ? ordered_json(fixed(to_double(*trend.tail_max_abs)))
                                         : ordered_json(nullptr);
  return j;
}

ordered_json pair_count_json(const PairCountResult& r) {
  return {{"N", r.n},
          {"offsets", std::vector<std::uint64_t>(r.spec.offsets().begin(), r.spec.offsets().end())},
          {"pair_count", r.pair_count},
          {"e_tn2_num", r.e_tn2.numerator()},
          {"e_tn2_den", r.e_tn2.denominator()},
          {"e_tn2", fixed(to_double(r.e_tn2))}};
}

ordered_json violations_json(std::span<const BoundViolation> violations) {
  ordered_json out = ordered_json::array();
  for (const auto& v : violations) {
    out.push_back({{"x", v.x}, {"matches", v.matches}, {"h", v.h}, {"r", v.r}});
  }
  return out;
}

ordered_json sum2h_json(const Sum2hReport& r) {
  return {{"sum_2h", r.sum},
          {"smallest_p", r.smallest_p},
          {"smallest_p_prime_index", r.prime_index},
          {"fitted_exponent", fixed(r.fitted_exponent)},
          {"ratio_to_n_plus_ik_pow_1_45", fixed(r.ratio_to_1_45)}};
}

ordered_json monte_carlo_json(const MonteCarloResult& mc, std::span<const std::uint64_t> seeds) {
  return {{"seed_count", seeds.size()},
          {"first_seed", seeds.empty() ? 0 : seeds.front()},
          {"mean", fixed(mc.mean)},
          {"stderr", fixed(mc.std_error)}};
}

ordered_json solution_json(const SolutionReport& r) {
  ordered_json witnesses = ordered_json::object();
  for (const auto& [name, value] : r.witnesses) witnesses[name] = value;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  ordered_json j = {{"equation", r.equation},
                    {"status", std::string(to_string(r.status))},
                    {"witnesses", witnesses},
                    {"params", params},
                    {"verified", r.verified},
                    {"searched_to", r.searched_to},
                    {"violations", r.violations},
                    {"method", r.method}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

void write_trend_csv(std::ostream& out, const TrendReport& trend) {
  out << "N,sum,T\n";
  char buf[64];
  for (const auto& p : trend.points) {
    std::snprintf(buf, sizeof buf, "%.12g", to_double(p.value));
    out << p.n << ',' << p.sum << ',' << buf << '\n';
  }
}

void write_decay_csv(std::ostream& out, std::span<const PairCountResult> rows) {
  out << "N,pair_count,e_tn2\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r.e_tn2));
    out << r.n << ',' << r.pair_count << ',' << buf << '\n';
  }
}

}  // namespace liouq::cli
