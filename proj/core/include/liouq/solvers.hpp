#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liouq/bitset.hpp"
#include "liouq/random_sign.hpp"
#include "liouq/sieve.hpp"

namespace liouq {

enum class SolveStatus {
  kVerified,   // witnesses found and re-checked, or a scan found no violation
  kViolation,  // a scan expected to be empty found a solution
  kNotFound,   // a constructive search exhausted its range
};

std::string_view to_string(SolveStatus status);

struct SolutionReport {
  std::string equation;
  std::vector<std::pair<std::string, std::uint64_t>> witnesses;
  // Equation parameters (c, k, triple members); not set members.
  std::vector<std::pair<std::string, std::uint64_t>> params;
  bool verified = false;
  SolveStatus status = SolveStatus::kNotFound;
  std::uint64_t searched_to = 0;
  std::uint64_t violations = 0;  // scans only
  std::string method;            // how the witness was found
  std::optional<std::uint64_t> seed;

  std::optional<std::uint64_t> witness(std::string_view name) const;
  std::optional<std::uint64_t> param(std::string_view name) const;
};

enum class TripleKind { kSum, kDifference };

std::string_view to_string(TripleKind kind);
TripleKind parse_triple_kind(std::string_view text);

struct MagicTriple {
  std::uint64_t a = 0, b = 0, c = 0;
  TripleKind kind = TripleKind::kSum;

  friend bool operator==(const MagicTriple&, const MagicTriple&) = default;
  friend auto operator<=>(const MagicTriple&, const MagicTriple&) = default;
};

inline constexpr MagicTriple kDefaultSumTriple{44, 117, 240, TripleKind::kSum};
inline constexpr MagicTriple kDefaultDifferenceTriple{153, 185, 697, TripleKind::kDifference};

// a < b < c and all three pairwise sums (or differences) of squares are squares.
bool verify_magic_triple(const MagicTriple& triple);

// All triples a < b < c <= limit of the given kind, sorted.
std::vector<MagicTriple> find_magic_triples(std::uint64_t limit, TripleKind kind);

// S_a = {n : a n in S}, over [1, floor(limit / a)].
SetBitset dilation(const SetBitset& set, std::uint64_t a);

// Scans x <= y in `set` with xy <= N for xy in `set`. Zero hits => verified.
// The reported witness is the one with smallest z, then smallest x.
SolutionReport scan_multiplicative_schur(const SetBitset& set, std::uint64_t n, unsigned threads = 1);

// Builds A_Q up to N and runs the Schur scan on it.
SolutionReport verify_multiplicative_schur(const SignAssignment& assignment, std::uint64_t n,
                                           const SpfTable& table, unsigned threads = 1);

// Thrown when the assignment has lambda_Q(c) = +1, so the sign argument
// for xy = c n^k does not apply.
class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Divisor pairs (x, m/x), x <= m/x, of every m = c n^k <= N with both
// factors in `set`. Throws std::invalid_argument for square c, odd or zero k.
SolutionReport scan_cnk(const SetBitset& set, std::uint64_t c, unsigned k, std::uint64_t n,
                        const SpfTable& table);

// scan_cnk on A_Q after checking lambda_Q(c) = -1 (PreconditionFailed otherwise).
SolutionReport verify_cnk(const SignAssignment& assignment, std::uint64_t c, unsigned k,
                          std::uint64_t n, const SpfTable& table);

// xy = z^2 with x < z < y all in `set` and <= N. Searches dyadic
// progressions n 2^a, n 2^b, n 2^c (a + c = 2b) first and falls back to
// pairs inside one square class. Smallest z wins, then smallest x.
SolutionReport solve_xy_z2(const SetBitset& set, std::uint64_t n);

// x^2 + y^2 = square via z a, z b, z c for the smallest z with two members.
SolutionReport solve_sum_of_squares(const SetBitset& set, std::uint64_t n,
                                    const MagicTriple& triple = kDefaultSumTriple);

// u^2 - v^2 = square, u > v, same scheme.
SolutionReport solve_diff_of_squares(const SetBitset& set, std::uint64_t n,
                                     const MagicTriple& triple = kDefaultDifferenceTriple);

// Re-checks a verified report against the set: equation holds exactly
// and every witness is a member.
bool recheck(const SolutionReport& report, const SetBitset& set);

}  // namespace liouq
