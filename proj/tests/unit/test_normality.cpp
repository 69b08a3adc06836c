#include <gtest/gtest.h>

#include <random>

#include "liouq/normality.hpp"

namespace liouq {
namespace {

const SpfTable& table() {
  static const SpfTable t = build_spf(1'000'100);
  return t;
}

SetBitset all_ones(std::uint64_t limit) {
  SetBitset s(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) s.set(n);
  return s;
}

SignedSequence constant_plus(std::uint64_t limit) { return SignedSequence(SetBitset(limit)); }

TEST(Word, Encoding) {
  const Word w("0110");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.code(), 6u);
  EXPECT_FALSE(w.at(0));
  EXPECT_TRUE(w.at(1));
  EXPECT_EQ(w.str(), "0110");
  EXPECT_THROW(Word(""), std::invalid_argument);
  EXPECT_THROW(Word("012"), std::invalid_argument);
  EXPECT_THROW(Word(4, 2), std::invalid_argument);
}

TEST(WordFrequencies, AllOnes) {
  const auto stats = word_frequencies(all_ones(100), 3, 100);
  EXPECT_EQ(stats.frequency(Word("1")), Rational(1));
  EXPECT_EQ(stats.frequency(Word("0")), Rational(0));
  EXPECT_EQ(stats.frequency(Word("111")), Rational(1));
  EXPECT_EQ(stats.window(3), 98u);
}

TEST(WordFrequencies, MatchesStringCount) {
  const auto set = a_q_set({77, SignMode::kRandom}, 3000, table());
  std::string text;
  for (std::uint64_t n = 1; n <= 3000; ++n) text += set.contains(n) ? '1' : '0';
  const auto stats = word_frequencies(set, 5, 3000);
  for (unsigned len = 1; len <= 5; ++len) {
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      const Word w(code, len);
      std::uint64_t count = 0;
      for (std::size_t pos = 0; pos + len <= text.size(); ++pos) {
        count += text.compare(pos, len, w.str()) == 0;
      }
      ASSERT_EQ(stats.count(w), count) << w.str();
    }
  }
}

TEST(WordFrequencies, Errors) {
  const SetBitset s(100);
  EXPECT_THROW(word_frequencies(s, 25, 100), std::invalid_argument);
  EXPECT_THROW(word_frequencies(s, 0, 100), std::invalid_argument);
  EXPECT_THROW(word_frequencies(s, 2, 101), std::out_of_range);
}

TEST(WordFrequencies, NormalizedPerLength) {
  const auto set = a_q_set({5, SignMode::kRandom}, 100000, table());
  const auto stats = word_frequencies(set, 8, 100000);
  for (unsigned len = 1; len <= 8; ++len) {
    Rational total(0);
    for (std::uint32_t code = 0; code < (1u << len); ++code) total += stats.frequency(Word(code, len));
    EXPECT_EQ(total, Rational(1)) << len;
  }
}

TEST(WordFrequencies, ThreadCountInvariant) {
  const auto set = a_q_set({8, SignMode::kRandom}, 200000, table());
  const auto one = word_frequencies(set, 10, 200000, 1);
  const auto many = word_frequencies(set, 10, 200000, 8);
  EXPECT_EQ(one.counts, many.counts);
}

TEST(WordFrequencies, DefaultSeedShortWordsNearUniform) {
  const auto set = a_q_set({0, SignMode::kRandom}, 1'000'000, table());
  const auto stats = word_frequencies(set, 4, 1'000'000);
  for (unsigned len = 1; len <= 4; ++len) {
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      EXPECT_LE(to_double(stats.deviation(Word(code, len))), 0.01);
    }
  }
}

TEST(CorrelationSum, ConstantSequence) {
  const auto seq = constant_plus(50);
  EXPECT_EQ(correlation_sum(seq, OffsetSpec({1, 3}), 40).value, Rational(1));
  EXPECT_EQ(correlation_sum(seq, OffsetSpec{}, 50).value, Rational(1));
}

TEST(CorrelationSum, ClassicTen) {
  const auto seq = build_signed_sequence({0, SignMode::kAllPrimesNegative}, 10, table());
  const auto r = correlation_sum(seq, OffsetSpec{}, 10);
  EXPECT_EQ(r.sum, 0);
  EXPECT_EQ(r.value, Rational(0));
}

TEST(CorrelationSum, BruteForceAndBounds) {
  const auto seq = build_signed_sequence({31, SignMode::kRandom}, 5000, table());
  const OffsetSpec spec({1, 4, 9});
  const auto r = correlation_sum(seq, spec, 4000);
  std::int64_t brute = 0;
  for (std::uint64_t n = 1; n <= 4000; ++n) {
    brute += seq.sign(n) * seq.sign(n + 1) * seq.sign(n + 4) * seq.sign(n + 9);
  }
  EXPECT_EQ(r.sum, brute);
  EXPECT_EQ(r.value, Rational(brute, 4000));
  EXPECT_LE(abs(r.value), Rational(1));
  EXPECT_THROW(correlation_sum(seq, spec, 4992), std::out_of_range);
  EXPECT_EQ(correlation_sum(seq, spec, 4000, 7).sum, brute);
}

TEST(WindowProductSum, EmptyProductIsCount) {
  const auto seq = build_signed_sequence({3, SignMode::kRandom}, 100, table());
  EXPECT_EQ(window_product_sum(seq, {}, 1, 60), 60);
}

TEST(WordFreqViaCorrelations, SingleOne) {
  const auto seq = build_signed_sequence({12, SignMode::kRandom}, 1000, table());
  const auto t = correlation_sum(seq, OffsetSpec{}, 1000).value;
  EXPECT_EQ(word_freq_via_correlations(seq, Word("1"), 1000), (Rational(1) - t) / 2);
}

TEST(WordFreqViaCorrelations, AllPlusSequence) {
  const auto seq = constant_plus(200);
  EXPECT_EQ(word_freq_via_correlations(seq, Word("000"), 200), Rational(1));
  EXPECT_EQ(word_freq_via_correlations(seq, Word("010"), 200), Rational(0));
}

TEST(WordFreqViaCorrelations, EqualsDirectCountDefaultSeed) {
  const auto seq = build_signed_sequence({0, SignMode::kRandom}, 100000, table());
  const auto stats = word_frequencies(seq.negative_set(), 4, 100000);
  EXPECT_EQ(word_freq_via_correlations(seq, Word("0110"), 100000), stats.frequency(Word("0110")));
}

TEST(WordFreqViaCorrelations, RandomizedIdentity) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t seed = rng();
    const std::uint64_t n = rng() % 20000 + 10;
    const unsigned len = static_cast<unsigned>(rng() % 6 + 1);
    const Word w(static_cast<std::uint32_t>(rng() % (1u << len)), len);
    const auto seq = build_signed_sequence({seed, SignMode::kRandom}, n, table());
    EXPECT_EQ(word_freq_via_correlations(seq, w, n),
              word_frequencies(seq.negative_set(), len, n).frequency(w));
  }
}

TEST(SignBitCoherence, FrequencyOfOneFromMeanSign) {
  for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
    const auto seq = build_signed_sequence({seed, SignMode::kRandom}, 50000, table());
    const auto stats = word_frequencies(seq.negative_set(), 1, 50000);
    const Rational mean = correlation_sum(seq, OffsetSpec{}, 50000).value;
    EXPECT_EQ(stats.frequency(Word("1")), (Rational(1) - mean) / 2);
  }
}

TEST(Discrepancy, AllZeros) {
  const auto report = discrepancy_report(SetBitset(64), 1, 64);
  EXPECT_EQ(report.overall, Rational(1, 2));
  EXPECT_EQ(report.per_length.at(0).deviation, Rational(1, 2));
}

TEST(Discrepancy, Periodic) {
  SetBitset s(100);
  for (std::uint64_t n = 2; n <= 100; n += 2) s.set(n);
  const auto stats = word_frequencies(s, 2, 100);
  EXPECT_EQ(stats.frequency(Word("00")), Rational(0));
  EXPECT_EQ(stats.deviation(Word("00")), Rational(1, 4));
  const auto report = discrepancy_report(stats);
  // "01" fills 50 of the 99 windows.
  EXPECT_EQ(report.per_length.at(1).deviation, Rational(50, 99) - Rational(1, 4));
}

TEST(Discrepancy, DefaultSeedLengthEight) {
  const auto set = a_q_set({0, SignMode::kRandom}, 1'000'000, table());
  const auto report = discrepancy_report(set, 8, 1'000'000, 4);
  EXPECT_LE(to_double(report.overall), 0.01);
  EXPECT_EQ(report.per_length.size(), 8u);
}

TEST(SubsequenceTrend, ConstantIsFlat) {
  const auto seq = constant_plus(1000);
  const std::vector<std::uint64_t> grid{10, 100, 500};
  const auto trend = subsequence_trend(seq, OffsetSpec({2}), grid);
  for (const auto& p : trend.points) EXPECT_EQ(p.value, Rational(1));
  EXPECT_TRUE(trend.trend_defined);
  EXPECT_EQ(*trend.tail_max_abs, Rational(1));
}

TEST(SubsequenceTrend, SinglePointIsUndefined) {
  const auto seq = constant_plus(100);
  const std::vector<std::uint64_t> grid{50};
  const auto trend = subsequence_trend(seq, OffsetSpec{}, grid);
  EXPECT_FALSE(trend.trend_defined);
  EXPECT_FALSE(trend.tail_max_abs.has_value());
  EXPECT_TRUE(trend.ratios.empty());
}

TEST(SubsequenceTrend, MatchesPointwiseCorrelation) {
  const auto seq = build_signed_sequence({0, SignMode::kAllPrimesNegative}, 1'000'000, table());
  const auto grid = polynomial_grid(1000, 1'000'000, 2);
  const auto trend = subsequence_trend(seq, OffsetSpec{}, grid);
  for (std::size_t i = 0; i < grid.size(); i += 97) {
    EXPECT_EQ(trend.points[i].value, correlation_sum(seq, OffsetSpec{}, grid[i]).value);
  }
  EXPECT_GT(trend.ratios.back(), 0.99);
  // Classic lambda: |T_N| shrinks from the head of the grid to its tail.
  EXPECT_LT(to_double(*trend.tail_max_abs), 0.01);
  double head = 0;
  for (std::size_t i = 0; i < 10; ++i) head = std::max(head, std::abs(to_double(trend.points[i].value)));
  EXPECT_LT(to_double(*trend.tail_max_abs), head);
}

TEST(SubsequenceTrend, Errors) {
  const auto seq = constant_plus(100);
  const std::vector<std::uint64_t> bad{10, 10};
  EXPECT_THROW(subsequence_trend(seq, OffsetSpec{}, bad), std::invalid_argument);
  const std::vector<std::uint64_t> far{99};
  EXPECT_THROW(subsequence_trend(seq, OffsetSpec({2}), far), std::out_of_range);
}

TEST(Grid, PolynomialAndParse) {
  EXPECT_EQ(polynomial_grid(10, 100, 2), (std::vector<std::uint64_t>{16, 25, 36, 49, 64, 81, 100}));
  const auto g = parse_grid("1000:1000000:poly2");
  EXPECT_EQ(g.front(), 1024u);
  EXPECT_EQ(g.back(), 1000000u);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
  EXPECT_EQ(parse_grid("5,9,20"), (std::vector<std::uint64_t>{5, 9, 20}));
  EXPECT_THROW(parse_grid("9,5"), std::invalid_argument);
  EXPECT_THROW(parse_grid("1:10:geom"), std::invalid_argument);
}

}  // namespace
}  // namespace liouq
