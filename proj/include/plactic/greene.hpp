#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <map>
#include <utility>
#include <vector>

#include "plactic/error.hpp"
#include "plactic/insertion.hpp"
#include "plactic/word.hpp"

namespace plactic {

// a_k(w), read off the shape of the insertion tableau.
inline Duration greene(const TimedWord& w, std::size_t k) {
  if (k < 1) throw domain_error("k must be at least 1");
  return insertion_tableau(w).shape().partial_sum(k);
}

inline constexpr std::size_t default_oracle_cap = 14;

namespace detail {

// Maximum number of positions of `letters` coverable by k disjoint weakly
// increasing subsequences.  Exhaustive over assignments of each position to
// one of k slots or to none; slots are interchangeable, so the state is the
// sorted vector of each slot's last letter (0 for an unused slot).
class ChainCover {
 public:
  ChainCover(std::vector<int> letters, std::size_t k)
      : letters_(std::move(letters)), k_(k) {}

  std::size_t solve() {
    std::vector<int> slots(k_, 0);
    return best(0, slots);
  }

 private:
  std::size_t best(std::size_t pos, std::vector<int>& slots) {
    if (pos == letters_.size()) return 0;
    auto id = std::make_pair(pos, slots);
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;

    std::size_t result = best(pos + 1, slots);  // leave this position out
    const int c = letters_[pos];
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i] > c) break;  // sorted: later slots are larger still
      if (i > 0 && slots[i] == slots[i - 1]) continue;
      std::vector<int> next = slots;
      next[i] = c;
      std::sort(next.begin(), next.end());
      result = std::max(result, 1 + best(pos + 1, next));
    }
    memo_.emplace(std::move(id), result);
    return result;
  }

  std::vector<int> letters_;
  std::size_t k_;
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> memo_;
};

}  // namespace detail

// a_k(w) by exhaustive search, independent of insertion.  The word is
// scaled by the least common denominator of its durations so every segment
// becomes a run of unit letters; a_k is homogeneous of degree one, so the
// integer optimum divided by the scale is the answer.  Throws
// oracle_too_large when the scaled length exceeds `cap`.
inline Duration greene_oracle(const TimedWord& w, std::size_t k,
                              std::size_t cap = default_oracle_cap) {
  if (k < 1) throw domain_error("k must be at least 1");
  mpz_class lcd = 1;
  for (const auto& s : w.segments()) {
    mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), s.length.denominator().get_mpz_t());
  }
  const Duration scale_factor{mpq_class(lcd)};
  const Duration scaled_length = w.length() * scale_factor;
  if (scaled_length > Duration(static_cast<long>(cap))) {
    throw oracle_too_large("scaled length " + scaled_length.str() + " exceeds oracle cap " +
                           std::to_string(cap));
  }

  std::vector<int> letters;
  for (const auto& s : w.segments()) {
    const long units = (s.length * scale_factor).numerator().get_si();
    letters.insert(letters.end(), static_cast<std::size_t>(units), s.letter);
  }
  const std::size_t slots = std::min(k, std::max<std::size_t>(letters.size(), 1));
  detail::ChainCover cover(std::move(letters), slots);
  return Duration(static_cast<long>(cover.solve())) / scale_factor;
}

}  // namespace plactic
