#pragma once

// Seeded generators for property checks.  Every case gets its own engine
// derived from (seed, case index), so results do not depend on the order
// in which cases run.

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "plactic/insertion.hpp"
#include "plactic/rsk.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic::gen {

using Rng = std::mt19937_64;

inline Rng case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// p/q with 1 <= q <= denom_bound and 1 <= p <= max_units * q.
inline Duration positive_duration(Rng& rng, long denom_bound, long max_units = 2) {
  const long q = uniform(rng, 1, denom_bound);
  return Duration(uniform(rng, 1, max_units * q), q);
}

inline TimedWord word(Rng& rng, int n, std::size_t max_segments, long denom_bound) {
  std::vector<Segment> segs(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_segments))));
  for (auto& s : segs) s = {static_cast<int>(uniform(rng, 1, n)), positive_duration(rng, denom_bound)};
  return TimedWord(n, segs);
}

inline TimedWord row(Rng& rng, int n, long denom_bound) {
  std::vector<Segment> segs;
  for (int c = 1; c <= n; ++c) {
    if (chance(rng, 0.5)) segs.push_back({c, positive_duration(rng, denom_bound)});
  }
  return TimedWord(n, segs);
}

inline TimedTableau tableau(Rng& rng, int n, std::size_t max_segments, long denom_bound) {
  return insertion_tableau(word(rng, n, max_segments, denom_bound));
}

// A word whose durations share one denominator D <= denom_bound and whose
// total length is at most max_units / D, so that it scales to at most
// max_units unit letters.
inline TimedWord small_word(Rng& rng, int n, long max_units, long denom_bound) {
  const long d = uniform(rng, 1, denom_bound);
  long budget = uniform(rng, 0, max_units);
  std::vector<Segment> segs;
  while (budget > 0) {
    const long units = uniform(rng, 1, std::min(budget, 3L));
    segs.push_back({static_cast<int>(uniform(rng, 1, n)), Duration(units, d)});
    budget -= units;
  }
  return TimedWord(n, segs);
}

// Entries p/q with q <= denom_bound, each zero with probability zero_prob.
inline NonNegMatrix matrix(Rng& rng, std::size_t max_m, std::size_t max_n, long denom_bound,
                           double zero_prob = 0.3) {
  const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_m)));
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_n)));
  NonNegMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!chance(rng, zero_prob)) a.set(i, j, positive_duration(rng, denom_bound, 3));
  return a;
}

inline NonNegMatrix integer_matrix(Rng& rng, std::size_t m, std::size_t n, long max_entry,
                                   double zero_prob = 0.3) {
  NonNegMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!chance(rng, zero_prob)) a.set(i, j, Duration(uniform(rng, 0, max_entry)));
  return a;
}

}  // namespace plactic::gen
