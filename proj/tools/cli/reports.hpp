#pragma once

#include <ostream>
#include <span>

#include <json.hpp>

#include "liouq/normality.hpp"
#include "liouq/pair_square.hpp"
#include "liouq/solvers.hpp"

namespace liouq::cli {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Rounds to 12 significant digits so rendered floats are stable.
double fixed(double value);

ordered_json rational_json(const Rational& q);

// One row per word: {word, length, count, window, freq_num, freq_den, deviation}.
ordered_json word_rows(const WordStats& stats, unsigned upto_length);
ordered_json discrepancy_json(const DiscrepancyReport& report);
ordered_json correlation_json(const CorrelationResult& result);
ordered_json trend_json(const TrendReport& trend);
ordered_json pair_count_json(const PairCountResult& result);
ordered_json violations_json(std::span<const BoundViolation> violations);
ordered_json sum2h_json(const Sum2hReport& report);
ordered_json monte_carlo_json(const MonteCarloResult& mc, std::span<const std::uint64_t> seeds);
ordered_json solution_json(const SolutionReport& report);

void write_trend_csv(std::ostream& out, const TrendReport& trend);
void write_decay_csv(std::ostream& out, std::span<const PairCountResult> rows);

}  // namespace liouq::cli
