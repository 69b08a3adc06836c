#include "liouq/solvers.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "liouq/arith.hpp"
#include "liouq/detail/parallel.hpp"

namespace liouq {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::optional<std::uint64_t> lookup(const std::vector<std::pair<std::string, std::uint64_t>>& items,
                                    std::string_view name) {
  for (const auto& [key, value] : items) {
    if (key == name) return value;
  }
  return std::nullopt;
}

void check_n(const SetBitset& set, std::uint64_t n) {
  if (n > set.limit()) {
    throw std::out_of_range("search bound " + std::to_string(n) + " exceeds set limit " +
                            std::to_string(set.limit()));
  }
}

u128 sq(std::uint64_t v) { return static_cast<u128>(v) * v; }

bool square_sum(std::uint64_t x, std::uint64_t y) { return is_perfect_square(sq(x) + sq(y)); }

bool square_diff(std::uint64_t big, std::uint64_t small) {
  return big > small && is_perfect_square(sq(big) - sq(small));
}

bool pair_ok(std::uint64_t lo, std::uint64_t hi, TripleKind kind) {
  return kind == TripleKind::kSum ? square_sum(lo, hi) : square_diff(hi, lo);
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kVerified: return "verified";
    case SolveStatus::kViolation: return "violation";
    case SolveStatus::kNotFound: return "not-found";
  }
  return "unknown";
}

std::optional<std::uint64_t> SolutionReport::witness(std::string_view name) const {
  return lookup(witnesses, name);
}

std::optional<std::uint64_t> SolutionReport::param(std::string_view name) const {
  return lookup(params, name);
}

std::string_view to_string(TripleKind kind) {
  return kind == TripleKind::kSum ? "sum" : "difference";
}

TripleKind parse_triple_kind(std::string_view text) {
  if (text == "sum") return TripleKind::kSum;
  if (text == "difference" || text == "diff") return TripleKind::kDifference;
  throw std::invalid_argument("unknown triple kind '" + std::string(text) + "'");
}

bool verify_magic_triple(const MagicTriple& t) {
  if (!(0 < t.a && t.a < t.b && t.b < t.c)) return false;
  return pair_ok(t.a, t.b, t.kind) && pair_ok(t.a, t.c, t.kind) && pair_ok(t.b, t.c, t.kind);
}

std::vector<MagicTriple> find_magic_triples(std::uint64_t limit, TripleKind kind) {
  std::vector<MagicTriple> out;
  if (limit < 3) return out;
  // partners[a] = {b > a : pair (a, b) qualifies}
  std::vector<std::vector<std::uint64_t>> partners(limit + 1);
  for (std::uint64_t a = 1; a <= limit; ++a) {
    for (std::uint64_t b = a + 1; b <= limit; ++b) {
      if (pair_ok(a, b, kind)) partners[a].push_back(b);
    }
  }
  for (std::uint64_t a = 1; a <= limit; ++a) {
    const auto& pa = partners[a];
    for (std::size_t i = 0; i < pa.size(); ++i) {
      const auto& pb = partners[pa[i]];
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        if (std::binary_search(pb.begin(), pb.end(), pa[j])) {
          out.push_back({a, pa[i], pa[j], kind});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetBitset dilation(const SetBitset& set, std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("dilation factor must be positive");
  const std::uint64_t limit = set.limit() / a;
  SetBitset out(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (set.contains(a * n)) out.set(n);
  }
  return out;
}

SolutionReport scan_multiplicative_schur(const SetBitset& set, std::uint64_t n, unsigned threads) {
  check_n(set, n);
  const std::uint64_t root = isqrt(n);
  struct Partial {
    std::uint64_t hits = 0;
    std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> best{kNone, kNone, kNone};  // z, x, y
  };
  std::vector<Partial> partial(detail::chunk_count(root, threads));
  detail::for_each_chunk(root, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Partial& p = partial[chunk];
    for (std::uint64_t x = begin + 1; x <= end; ++x) {
      if (!set.contains(x)) continue;
      for (std::uint64_t y = x; y <= n / x; ++y) {
        if (!set.contains(y) || !set.contains(x * y)) continue;
        ++p.hits;
        p.best = std::min(p.best, {x * y, x, y});
      }
    }
  });
  SolutionReport report;
  report.equation = "schur";
  report.searched_to = n;
  report.method = "exhaustive";
  std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> best{kNone, kNone, kNone};
  for (const auto& p : partial) {
    report.violations += p.hits;
    best = std::min(best, p.best);
  }
  if (report.violations == 0) {
    report.verified = true;
    report.status = SolveStatus::kVerified;
  } else {
    const auto [z, x, y] = best;
    report.witnesses = {{"x", x}, {"y", y}, {"z", z}};
    report.status = SolveStatus::kViolation;
  }
  return report;
}

SolutionReport verify_multiplicative_schur(const SignAssignment& assignment, std::uint64_t n,
                                           const SpfTable& table, unsigned threads) {
  if (n == 0) throw std::invalid_argument("N must be positive");
  auto report = scan_multiplicative_schur(a_q_set(assignment, n, table), n, threads);
  report.seed = assignment.seed;
  return report;
}

SolutionReport scan_cnk(const SetBitset& set, std::uint64_t c, unsigned k, std::uint64_t n,
                        const SpfTable& table) {
  if (c == 0 || is_perfect_square(c)) {
    throw std::invalid_argument("c must be a positive non-square");
  }
  if (k == 0 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer");
  check_n(set, n);
  if (n > table.limit()) throw std::out_of_range("search bound exceeds spf limit");

  SolutionReport report;
  report.equation = "cnk";
  report.searched_to = n;
  report.method = "divisor-pairs";
  report.params = {{"c", c}, {"k", k}};
  std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> best{kNone, kNone, kNone};  // m, x, base
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t base = 1;; ++base) {
    std::uint64_t m = c;
    bool fits = true;
    for (unsigned e = 0; e < k && fits; ++e) {
      if (__builtin_mul_overflow(m, base, &m) || m > n) fits = false;
    }
    if (!fits) break;
    divisors.assign(1, 1);
    for (const auto& [p, e] : factorize(m, table)) {
      const std::size_t prev = divisors.size();
      std::uint64_t pk = 1;
      for (unsigned j = 0; j < e; ++j) {
        pk *= p;
        for (std::size_t i = 0; i < prev; ++i) divisors.push_back(divisors[i] * pk);
      }
    }
    for (const std::uint64_t x : divisors) {
      const std::uint64_t y = m / x;
      if (x > y || !set.contains(x) || !set.contains(y)) continue;
      ++report.violations;
      best = std::min(best, {m, x, base});
    }
  }
  if (report.violations == 0) {
    report.verified = true;
    report.status = SolveStatus::kVerified;
  } else {
    const auto [m, x, base] = best;
    report.witnesses = {{"x", x}, {"y", m / x}, {"n", base}};
    report.status = SolveStatus::kViolation;
  }
  return report;
}

SolutionReport verify_cnk(const SignAssignment& assignment, std::uint64_t c, unsigned k,
                          std::uint64_t n, const SpfTable& table) {
  if (c == 0 || is_perfect_square(c)) {
    throw std::invalid_argument("c must be a positive non-square");
  }
  if (k == 0 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer");
  if (n == 0) throw std::invalid_argument("N must be positive");
  if (lambda_q(assignment, c, table) != -1) {
    throw PreconditionFailed("lambda_Q(" + std::to_string(c) + ") = +1 for seed " +
                             std::to_string(assignment.seed) +
                             "; the sign argument needs -1, choose another seed");
  }
  auto report = scan_cnk(a_q_set(assignment, n, table), c, k, n, table);
  report.seed = assignment.seed;
  return report;
}

SolutionReport solve_xy_z2(const SetBitset& set, std::uint64_t n) {
  check_n(set, n);
  SolutionReport report;
  report.equation = "xyz2";
  report.searched_to = n;

  using Candidate = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;  // z, x, y
  Candidate best{kNone, kNone, kNone};

  std::vector<unsigned> exps;
  for (std::uint64_t base = 1; base <= n; base += 2) {
    exps.clear();
    unsigned e = 0;
    for (std::uint64_t v = base; v <= n; v *= 2, ++e) {
      if (set.contains(v)) exps.push_back(e);
      if (v > n / 2) break;
    }
    if (exps.size() < 3) continue;
    for (std::size_t mid = 1; mid + 1 < exps.size(); ++mid) {
      const unsigned b = exps[mid];
      const std::uint64_t z = base << b;
      if (z > std::get<0>(best)) break;
      // Widest gap first gives the smallest x for this z.
      for (std::size_t lo = 0; lo < mid; ++lo) {
        const unsigned gap = b - exps[lo];
        if (!std::binary_search(exps.begin() + mid + 1, exps.end(), b + gap)) continue;
        best = std::min(best, Candidate{z, base << exps[lo], base << (b + gap)});
        break;
      }
    }
  }

  if (std::get<0>(best) != kNone) {
    report.method = "dyadic";
  } else {
    std::vector<bool> squarefree(n + 1, true);
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      for (std::uint64_t m = d * d; m <= n; m += d * d) squarefree[m] = false;
    }
    std::vector<std::uint64_t> roots;
    for (std::uint64_t c = 1; c <= n; ++c) {
      if (!squarefree[c]) continue;
      roots.clear();
      for (std::uint64_t a = 1; c * a * a <= n; ++a) {
        if (set.contains(c * a * a)) roots.push_back(a);
      }
      for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          const std::uint64_t z = c * roots[i] * roots[j];
          if (set.contains(z)) {
            best = std::min(best, Candidate{z, c * roots[i] * roots[i], c * roots[j] * roots[j]});
          }
        }
      }
    }
    report.method = "square-class";
  }

  if (std::get<0>(best) == kNone) {
    report.status = SolveStatus::kNotFound;
    report.method = "dyadic+square-class";
    return report;
  }
  const auto [z, x, y] = best;
  report.witnesses = {{"x", x}, {"y", y}, {"z", z}};
  report.verified = recheck(report, set);
  report.status = report.verified ? SolveStatus::kVerified : SolveStatus::kNotFound;
  return report;
}

namespace {

SolutionReport solve_with_triple(const SetBitset& set, std::uint64_t n, const MagicTriple& triple,
                                 TripleKind expected) {
  if (triple.kind != expected || !verify_magic_triple(triple)) {
    throw std::invalid_argument("triple (" + std::to_string(triple.a) + ", " +
                                std::to_string(triple.b) + ", " + std::to_string(triple.c) +
                                ") is not a valid " + std::string(to_string(expected)) +
                                " magic triple");
  }
  check_n(set, n);
  SolutionReport report;
  const bool sum = expected == TripleKind::kSum;
  report.equation = sum ? "sumsq" : "diffsq";
  report.searched_to = n;
  report.method = "magic-triple";
  report.params = {{"a", triple.a}, {"b", triple.b}, {"c", triple.c}};
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {
      {triple.a, triple.b}, {triple.a, triple.c}, {triple.b, triple.c}};
  for (std::uint64_t z = 1; z <= n / triple.b; ++z) {
    for (const auto& [lo, hi] : pairs) {
      if (hi > n / z) continue;
      if (!set.contains(z * lo) || !set.contains(z * hi)) continue;
      if (sum) {
        report.witnesses = {{"x", z * lo}, {"y", z * hi}, {"scale", z}};
      } else {
        report.witnesses = {{"u", z * hi}, {"v", z * lo}, {"scale", z}};
      }
      report.verified = recheck(report, set);
      report.status = report.verified ? SolveStatus::kVerified : SolveStatus::kNotFound;
      return report;
    }
  }
  report.status = SolveStatus::kNotFound;
  return report;
}

}  // namespace

SolutionReport solve_sum_of_squares(const SetBitset& set, std::uint64_t n, const MagicTriple& triple) {
  return solve_with_triple(set, n, triple, TripleKind::kSum);
}

SolutionReport solve_diff_of_squares(const SetBitset& set, std::uint64_t n,
                                     const MagicTriple& triple) {
  return solve_with_triple(set, n, triple, TripleKind::kDifference);
}

bool recheck(const SolutionReport& report, const SetBitset& set) {
  if (report.witnesses.empty()) return report.status != SolveStatus::kViolation;
  const auto w = [&](std::string_view name) { return report.witness(name).value_or(0); };
  auto members = [&](std::initializer_list<std::uint64_t> values) {
    return std::all_of(values.begin(), values.end(), [&](std::uint64_t v) { return set.contains(v); });
  };
  const std::string& eq = report.equation;
  if (eq == "schur") {
    return members({w("x"), w("y"), w("z")}) &&
           static_cast<u128>(w("x")) * w("y") == w("z");
  }
  if (eq == "cnk") {
    const auto c = report.param("c"), k = report.param("k");
    if (!c || !k) return false;
    u128 rhs = *c;
    for (std::uint64_t e = 0; e < *k; ++e) rhs *= w("n");
    return members({w("x"), w("y")}) && static_cast<u128>(w("x")) * w("y") == rhs;
  }
  if (eq == "xyz2") {
    const auto x = w("x"), y = w("y"), z = w("z");
    return x != y && x != z && y != z && members({x, y, z}) &&
           static_cast<u128>(x) * y == static_cast<u128>(z) * z;
  }
  if (eq == "sumsq") {
    return members({w("x"), w("y")}) && square_sum(w("x"), w("y"));
  }
  if (eq == "diffsq") {
    return members({w("u"), w("v")}) && square_diff(w("u"), w("v"));
  }
  return false;
}

}  // namespace liouq
