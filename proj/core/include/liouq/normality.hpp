#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liouq/bitset.hpp"
#include "liouq/random_sign.hpp"
#include "liouq/rational.hpp"
#include "liouq/sieve.hpp"

namespace liouq {

// Largest supported word length; the count table has 2^len entries.
inline constexpr unsigned kMaxWordLength = 24;

// A binary word; character j ('0' or '1') describes position n + j.
// code() reads the word as a binary number, first character most significant.
class Word {
 public:
  explicit Word(std::string_view bits);
  Word(std::uint32_t code, unsigned length);

  unsigned length() const { return length_; }
  std::uint32_t code() const { return code_; }
  bool at(unsigned j) const { return (code_ >> (length_ - 1 - j)) & 1u; }
  std::string str() const;

 private:
  std::uint32_t code_ = 0;
  unsigned length_ = 0;
};

// Windowed word counts: a word of length l is counted at positions
// n = 1 .. N-l+1, so each length has window N-l+1.
struct WordStats {
  std::uint64_t n = 0;
  unsigned max_len = 0;
  // counts[l-1][code] for l = 1..max_len.
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t window(unsigned length) const { return n - length + 1; }
  std::uint64_t count(const Word& w) const { return counts.at(w.length() - 1).at(w.code()); }
  Rational frequency(const Word& w) const;
  // |freq - 2^-l| exactly.
  Rational deviation(const Word& w) const;
};

WordStats word_frequencies(const SetBitset& set, unsigned max_len, std::uint64_t n,
                           unsigned threads = 1);

struct CorrelationResult {
  OffsetSpec spec;
  std::uint64_t n = 0;
  std::int64_t sum = 0;  // sum over n' = 1..N of the product of signs
  Rational value;        // T_N = sum / N

  double as_double() const { return to_double(value); }
};

// T_N = (1/N) sum_{n=1}^{N} s(n) s(n + i_1) ... s(n + i_k).
CorrelationResult correlation_sum(const SignedSequence& seq, const OffsetSpec& spec,
                                  std::uint64_t n, unsigned threads = 1);

// sum_{n=first}^{first+count-1} prod_{p in positions} s(n + p), computed
// directly from the signs. Empty positions give `count`.
std::int64_t window_product_sum(const SignedSequence& seq, std::span<const std::uint64_t> positions,
                                std::uint64_t first, std::uint64_t count);

// Frequency of `word` over the window n = 1..N-m+1 computed only from
// correlation sums: 2^-m sum_S (prod_{j in S} eps_j) C(S) / window, with
// eps_j = -1 where the word has a 1. Equals word_frequencies exactly.
Rational word_freq_via_correlations(const SignedSequence& seq, const Word& word, std::uint64_t n);

struct LengthDiscrepancy {
  unsigned length = 0;
  std::uint64_t window = 0;
  Word worst_word{0, 1};
  Rational deviation;
};

struct DiscrepancyReport {
  std::uint64_t n = 0;
  std::vector<LengthDiscrepancy> per_length;
  Rational overall;
  unsigned overall_length = 0;
};

DiscrepancyReport discrepancy_report(const WordStats& stats);
DiscrepancyReport discrepancy_report(const SetBitset& set, unsigned max_len, std::uint64_t n,
                                     unsigned threads = 1);

struct TrendPoint {
  std::uint64_t n = 0;
  std::int64_t sum = 0;
  Rational value;
};

struct TrendReport {
  OffsetSpec spec;
  std::vector<TrendPoint> points;
  std::vector<double> ratios;  // N_i / N_{i+1}
  // Max |T| over the second half of the grid; unset for grids of length 1.
  std::optional<Rational> tail_max_abs;
  bool trend_defined = false;
};

// T_{N_i} for every grid point in one pass. Grid must be strictly increasing.
TrendReport subsequence_trend(const SignedSequence& seq, const OffsetSpec& spec,
                              std::span<const std::uint64_t> grid);

// Polynomial grid {i^degree : start <= i^degree <= end}; consecutive ratios -> 1.
std::vector<std::uint64_t> polynomial_grid(std::uint64_t start, std::uint64_t end, unsigned degree);

// Parses "start:end:polyD" (e.g. "1000:1000000:poly2") or an explicit
// comma-separated list.
std::vector<std::uint64_t> parse_grid(std::string_view text);

}  // namespace liouq
