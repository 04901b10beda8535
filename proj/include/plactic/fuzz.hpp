#pragma once

// Differential fuzzing: seeded random matrices and words are pushed through
// every algorithm, and the algebraic identities between them are checked
// exactly.  Matrix counterexamples are shrunk before being reported.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plactic/greene.hpp"
#include "plactic/insertion.hpp"
#include "plactic/knuth.hpp"
#include "plactic/random.hpp"
#include "plactic/rsk.hpp"

namespace plactic::fuzz {

struct Options {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t max_m = 4;
  std::size_t max_n = 4;
  long denom_bound = 6;
  // Swapping in the maximal antichain reproduces a known-wrong variant of
  // the shadows algorithm; the triple-agreement check must catch it.
  LeadingRule leading_rule = LeadingRule::minimal;
  std::size_t oracle_cap = 12;
};

struct Failure {
  std::size_t case_index = 0;
  std::string property;
  std::string detail;
  std::optional<NonNegMatrix> matrix;  // shrunk
  std::optional<TimedWord> word;
};

struct Report {
  std::size_t cases = 0;
  std::vector<Failure> failures;  // sorted by case index
  bool ok() const { return failures.empty(); }
};

struct Violation {
  std::string property;
  std::string detail;
};

// First violated matrix property, if any.
inline std::optional<Violation> check_matrix(const NonNegMatrix& a,
                                             LeadingRule rule = LeadingRule::minimal) {
  try {
    const RskResult direct = rsk(a);
    if (rsk_recording(a) != direct) return Violation{"triple-agreement", "recording differs from direct"};
    // A shadows run that cannot even build tableaux disagrees too.
    try {
      if (rsk_shadows(a, rule) != direct) return Violation{"triple-agreement", "shadows differs from direct"};
    } catch (const error& e) {
      return Violation{"triple-agreement", std::string("shadows failed: ") + e.what()};
    }
    if (direct.p.shape() != direct.q.shape()) return Violation{"equal-shape", "P and Q shapes differ"};
    if (weight(direct.p) != a.col_sums()) return Violation{"weights", "wt(P) is not the column sums"};
    if (weight(direct.q) != a.row_sums()) return Violation{"weights", "wt(Q) is not the row sums"};
    if (rsk_inverse(direct.p, direct.q) != a) return Violation{"round-trip", "rsk_inverse(rsk(A)) != A"};
    if (rsk(a.transpose()) != RskResult{direct.q, direct.p}) {
      return Violation{"symmetry", "rsk(A^T) is not (Q, P)"};
    }
    const Duration c(3, 2);
    if (rsk(a.scaled(c)) != RskResult{scale(direct.p, c), scale(direct.q, c)}) {
      return Violation{"homogeneity", "rsk(cA) is not c * rsk(A)"};
    }
  } catch (const std::exception& e) {
    return Violation{"exception", e.what()};
  }
  return std::nullopt;
}

// Greedy shrinking: drop rows and columns, then zero entries, then simplify
// entries towards small integers, keeping only steps that still fail.
inline NonNegMatrix shrink(NonNegMatrix a, const std::function<bool(const NonNegMatrix&)>& fails) {
  auto without_row = [](const NonNegMatrix& m, std::size_t skip) {
    NonNegMatrix out(m.rows() - 1, m.cols());
    for (std::size_t i = 0, r = 0; i < m.rows(); ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(r, j, m(i, j));
      ++r;
    }
    return out;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<NonNegMatrix> candidates;
    for (std::size_t i = 0; a.rows() > 1 && i < a.rows(); ++i) candidates.push_back(without_row(a, i));
    for (std::size_t j = 0; a.cols() > 1 && j < a.cols(); ++j) {
      candidates.push_back(without_row(a.transpose(), j).transpose());
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) continue;
        NonNegMatrix zeroed = a;
        zeroed.set(i, j, Duration());
        candidates.push_back(std::move(zeroed));
      }
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Duration& x = a(i, j);
        if (x.is_zero()) continue;
        if (!x.is_integer()) {
          mpz_class whole = x.numerator() / x.denominator();
          NonNegMatrix rounded = a;
          rounded.set(i, j, Duration(mpq_class(whole == 0 ? mpz_class(1) : whole)));
          candidates.push_back(std::move(rounded));
        }
        if (x != Duration(1)) {
          NonNegMatrix unit = a;
          unit.set(i, j, Duration(1));
          candidates.push_back(std::move(unit));
        }
      }
    }
    for (auto& cand : candidates) {
      if (fails(cand)) {
        a = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return a;
}

// First violated word property on a random case, if any.
inline std::optional<std::pair<Violation, TimedWord>> check_words(gen::Rng& rng, const Options& opt) {
  const int n = static_cast<int>(gen::uniform(rng, 1, 4));
  const TimedWord w = gen::word(rng, n, 6, opt.denom_bound);
  try {
    if (sharp(sharp(w)) != w) return {{{"sharp-involution", "sharp(sharp(w)) != w"}, w}};

    const auto norm = normalize_with_trace(w);
    if (norm.tableau != insertion_tableau(w)) return {{{"knuth-trace", "normalization tableau differs from P(w)"}, w}};
    if (replay(w, norm.trace) != norm.tableau.reading_word()) {
      return {{{"knuth-trace", "trace does not replay to the reading word"}, w}};
    }

    const TimedTableau t = insertion_tableau(w);
    const TimedWord v = gen::row(rng, n, opt.denom_bound);
    const TimedTableau t2 = insert(t, v);
    if (weight(t2) != [&] {
          auto s = weight(t);
          const auto wv = weight(v);
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += wv[i];
          return s;
        }()) {
      return {{{"pieri", "weight is not additive"}, w}};
    }
    if (!interleaves(t2.shape(), t.shape())) return {{{"pieri", "shapes do not interleave"}, w}};
    if (delete_row(t2, t.shape()) != Deletion{v, t}) return {{{"pieri", "delete(insert(T, v)) != (v, T)"}, w}};

    const TimedWord small = gen::small_word(rng, n, static_cast<long>(opt.oracle_cap), opt.denom_bound);
    for (std::size_t k = 1; k <= 3; ++k) {
      if (greene(small, k) != greene_oracle(small, k, opt.oracle_cap)) {
        return {{{"greene-oracle", "a_" + std::to_string(k) + " disagrees with the oracle"}, small}};
      }
    }
  } catch (const std::exception& e) {
    return {{{"exception", e.what()}, w}};
  }
  return std::nullopt;
}

inline Report run(const Options& opt) {
  Report report;
  report.cases = opt.cases;
  for (std::size_t idx = 0; idx < opt.cases; ++idx) {
    auto rng = gen::case_rng(opt.seed, idx);
    const NonNegMatrix a = gen::matrix(rng, opt.max_m, opt.max_n, opt.denom_bound);
    if (auto v = check_matrix(a, opt.leading_rule)) {
      const auto rule = opt.leading_rule;
      NonNegMatrix small = shrink(a, [rule](const NonNegMatrix& m) { return check_matrix(m, rule).has_value(); });
      const auto final_violation = check_matrix(small, rule).value_or(*v);
      report.failures.push_back({idx, final_violation.property, final_violation.detail, small, std::nullopt});
      continue;
    }
    if (auto v = check_words(rng, opt)) {
      report.failures.push_back({idx, v->first.property, v->first.detail, std::nullopt, v->second});
    }
  }
  return report;
}

}  // namespace plactic::fuzz
