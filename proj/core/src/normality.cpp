#include "liouq/normality.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "liouq/detail/parallel.hpp"

namespace liouq {

Word::Word(std::string_view bits) : length_(static_cast<unsigned>(bits.size())) {
  if (bits.empty() || bits.size() > kMaxWordLength) {
    throw std::invalid_argument("word length must be in [1, 24]");
  }
  for (const char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("word must be binary");
    code_ = (code_ << 1) | static_cast<std::uint32_t>(c == '1');
  }
}

Word::Word(std::uint32_t code, unsigned length) : code_(code), length_(length) {
  if (length == 0 || length > kMaxWordLength || (code >> length) != 0) {
    throw std::invalid_argument("word code does not fit its length");
  }
}

std::string Word::str() const {
  std::string s(length_, '0');
  for (unsigned j = 0; j < length_; ++j) {
    if (at(j)) s[j] = '1';
  }
  return s;
}

Rational WordStats::frequency(const Word& w) const {
  return Rational(static_cast<std::int64_t>(count(w)), static_cast<std::int64_t>(window(w.length())));
}

Rational WordStats::deviation(const Word& w) const {
  const auto scale = std::int64_t{1} << w.length();
  const auto win = static_cast<std::int64_t>(window(w.length()));
  const auto diff = static_cast<std::int64_t>(count(w)) * scale - win;
  return Rational(diff < 0 ? -diff : diff, win * scale);
}

namespace {

inline unsigned bit_at(std::span<const std::uint64_t> words, std::uint64_t n) {
  return static_cast<unsigned>((words[(n - 1) >> 6] >> ((n - 1) & 63)) & 1u);
}

void check_word_args(std::uint64_t limit, unsigned max_len, std::uint64_t n) {
  if (max_len == 0 || max_len > kMaxWordLength) {
    throw std::invalid_argument("max word length must be in [1, 24]");
  }
  if (n == 0 || n > limit) {
    throw std::out_of_range("N = " + std::to_string(n) + " outside [1, " + std::to_string(limit) +
                            "]");
  }
  if (max_len > n) throw std::invalid_argument("max word length exceeds N");
}

}  // namespace

WordStats word_frequencies(const SetBitset& set, unsigned max_len, std::uint64_t n,
                           unsigned threads) {
  check_word_args(set.limit(), max_len, n);
  WordStats stats;
  stats.n = n;
  stats.max_len = max_len;
  stats.counts.resize(max_len);
  const auto words = set.words();
  // One length per task; every length is an independent exact fold.
  detail::for_each_chunk(max_len, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const unsigned len = static_cast<unsigned>(idx + 1);
      auto& table = stats.counts[idx];
      table.assign(std::size_t{1} << len, 0);
      const std::uint32_t mask = (len == 32) ? ~0u : ((1u << len) - 1);
      std::uint32_t code = 0;
      for (std::uint64_t pos = 1; pos <= n; ++pos) {
        code = ((code << 1) | bit_at(words, pos)) & mask;
        if (pos >= len) ++table[code];
      }
    }
  });
  return stats;
}

std::int64_t window_product_sum(const SignedSequence& seq, std::span<const std::uint64_t> positions,
                                std::uint64_t first, std::uint64_t count) {
  if (count == 0) return 0;
  const std::uint64_t reach = positions.empty() ? 0 : *std::max_element(positions.begin(), positions.end());
  if (first == 0 || first + count - 1 + reach > seq.limit()) {
    throw std::out_of_range("correlation window exceeds the sequence limit " +
                            std::to_string(seq.limit()));
  }
  const auto words = seq.negative_set().words();
  std::int64_t negatives = 0;
  for (std::uint64_t n = first; n < first + count; ++n) {
    unsigned parity = 0;
    for (const std::uint64_t p : positions) parity ^= bit_at(words, n + p);
    negatives += parity;
  }
  return static_cast<std::int64_t>(count) - 2 * negatives;
}

CorrelationResult correlation_sum(const SignedSequence& seq, const OffsetSpec& spec,
                                  std::uint64_t n, unsigned threads) {
  if (n == 0) throw std::invalid_argument("N must be positive");
  if (n + spec.max_offset() > seq.limit()) {
    throw std::out_of_range("N + i_k = " + std::to_string(n + spec.max_offset()) +
                            " exceeds the sequence limit " + std::to_string(seq.limit()));
  }
  const auto positions = spec.with_zero();
  const std::size_t chunks = detail::chunk_count(n, threads);
  std::vector<std::int64_t> partial(chunks, 0);
  detail::for_each_chunk(n, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    partial[c] = window_product_sum(seq, positions, begin + 1, end - begin);
  });
  CorrelationResult out;
  out.spec = spec;
  out.n = n;
  for (const auto p : partial) out.sum += p;
  out.value = Rational(out.sum, static_cast<std::int64_t>(n));
  return out;
}

Rational word_freq_via_correlations(const SignedSequence& seq, const Word& word, std::uint64_t n) {
  check_word_args(seq.limit(), word.length(), n);
  const unsigned m = word.length();
  const std::uint64_t win = n - m + 1;
  std::int64_t total = 0;
  std::vector<std::uint64_t> positions;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    positions.clear();
    int eps = 1;
    for (unsigned j = 0; j < m; ++j) {
      if ((subset >> j) & 1u) {
        positions.push_back(j);
        if (word.at(j)) eps = -eps;
      }
    }
    total += eps * window_product_sum(seq, positions, 1, win);
  }
  return Rational(total, static_cast<std::int64_t>(win) << m);
}

DiscrepancyReport discrepancy_report(const WordStats& stats) {
  DiscrepancyReport report;
  report.n = stats.n;
  report.overall = Rational(0);
  for (unsigned len = 1; len <= stats.max_len; ++len) {
    LengthDiscrepancy row;
    row.length = len;
    row.window = stats.window(len);
    row.deviation = Rational(-1);
    for (std::uint32_t code = 0; code < (1u << len); ++code) {
      const Word w(code, len);
      const Rational dev = stats.deviation(w);
      if (dev > row.deviation) {
        row.deviation = dev;
        row.worst_word = w;
      }
    }
    if (row.deviation > report.overall || report.per_length.empty()) {
      report.overall = row.deviation;
      report.overall_length = len;
    }
    report.per_length.push_back(row);
  }
  return report;
}

DiscrepancyReport discrepancy_report(const SetBitset& set, unsigned max_len, std::uint64_t n,
                                     unsigned threads) {
  return discrepancy_report(word_frequencies(set, max_len, n, threads));
}

TrendReport subsequence_trend(const SignedSequence& seq, const OffsetSpec& spec,
                              std::span<const std::uint64_t> grid) {
  if (grid.empty()) throw std::invalid_argument("grid must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0) throw std::invalid_argument("grid points must be positive");
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw std::invalid_argument("grid must be strictly increasing");
    }
  }
  if (grid.back() + spec.max_offset() > seq.limit()) {
    throw std::out_of_range("grid maximum + i_k exceeds the sequence limit " +
                            std::to_string(seq.limit()));
  }
  TrendReport report;
  report.spec = spec;
  const auto positions = spec.with_zero();
  std::int64_t running = 0;
  std::uint64_t done = 0;
  for (const std::uint64_t target : grid) {
    running += window_product_sum(seq, positions, done + 1, target - done);
    done = target;
    report.points.push_back({target, running, Rational(running, static_cast<std::int64_t>(target))});
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    report.ratios.push_back(static_cast<double>(grid[i]) / static_cast<double>(grid[i + 1]));
  }
  report.trend_defined = grid.size() >= 2;
  if (report.trend_defined) {
    Rational best(0);
    for (std::size_t i = grid.size() / 2; i < grid.size(); ++i) {
      best = std::max(best, abs(report.points[i].value));
    }
    report.tail_max_abs = best;
  }
  return report;
}

std::vector<std::uint64_t> polynomial_grid(std::uint64_t start, std::uint64_t end, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("grid degree must be >= 1");
  if (start == 0 || start > end) throw std::invalid_argument("grid needs 1 <= start <= end");
  auto power = [degree](std::uint64_t i) -> std::uint64_t {
    std::uint64_t v = 1;
    for (unsigned d = 0; d < degree; ++d) {
      if (__builtin_mul_overflow(v, i, &v)) return ~std::uint64_t{0};
    }
    return v;
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1;; ++i) {
    const std::uint64_t v = power(i);
    if (v > end) break;
    if (v >= start) out.push_back(v);
    if (degree == 1 && v == end) break;
  }
  return out;
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_grid(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.find(':') != std::string_view::npos) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (b == std::string_view::npos) throw std::invalid_argument("grid must be start:end:polyD");
    const auto kind = text.substr(b + 1);
    if (!kind.starts_with("poly")) throw std::invalid_argument("unknown grid kind '" + std::string(kind) + "'");
    out = polynomial_grid(parse_u64(text.substr(0, a)), parse_u64(text.substr(a + 1, b - a - 1)),
                          static_cast<unsigned>(parse_u64(kind.substr(4))));
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = std::min(text.find(',', pos), text.size());
      out.push_back(parse_u64(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw std::invalid_argument("grid must be strictly increasing");
  }
  if (out.empty()) throw std::invalid_argument("grid is empty");
  return out;
}

}  // namespace liouq
