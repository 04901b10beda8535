#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plactic/error.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic {

// RINS(u, v) = (bumped, row).
struct RowInsertion {
  TimedWord bumped;
  TimedWord row;
  friend bool operator==(const RowInsertion&, const RowInsertion&) = default;
};

// The pair (u, v) recovered by inverting a row insertion.
struct RowPair {
  TimedWord u;
  TimedWord v;
  friend bool operator==(const RowPair&, const RowPair&) = default;
};

// DELETE_lambda(T') = (row, tableau) with INSERT(tableau, row) = T'.
struct Deletion {
  TimedWord row;
  TimedTableau tableau;
  friend bool operator==(const Deletion&, const Deletion&) = default;
};

namespace detail {

// One elementary step: insert c^t into the row u.  When something is
// displaced, `start` is t_0 and `displaced` the length of the bumped piece.
struct BumpStep {
  TimedWord bumped;
  TimedWord row;
  std::optional<Duration> start;
  Duration displaced;
};

inline BumpStep insert_letter(const TimedWord& u, int c, const Duration& t) {
  const int n = u.alphabet_size();
  Duration t0;
  bool found = false;
  for (const auto& s : u.segments()) {
    if (s.letter > c) { found = true; break; }
    t0 += s.length;
  }
  const TimedWord piece = letter_word(n, c, t);
  if (!found) return {TimedWord(n), concat(u, piece), std::nullopt, Duration()};

  const Duration tail = u.length() - t0;
  if (tail > t) {
    return {u.slice(t0, t0 + t), concat(u.slice(0, t0), piece, u.slice(t0 + t, u.length())), t0, t};
  }
  // Tie l(u) - t0 == t lands here: the whole tail is bumped.
  return {u.slice(t0, u.length()), concat(u.slice(0, t0), piece), t0, tail};
}

inline void require_row(const TimedWord& w, const char* what) {
  if (!is_row(w)) throw not_a_row(std::string(what) + " is not a row: " + format_word(w));
}

inline void require_same_alphabet(const TimedWord& a, const TimedWord& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw alphabet_error("alphabet sizes differ: " + std::to_string(a.alphabet_size()) + " vs " +
                         std::to_string(b.alphabet_size()));
  }
}

}  // namespace detail

// Timed row insertion of v into u, one segment of v at a time.
inline RowInsertion rins(const TimedWord& u, const TimedWord& v) {
  detail::require_row(u, "u");
  detail::require_row(v, "v");
  detail::require_same_alphabet(u, v);
  RowInsertion out{TimedWord(u.alphabet_size()), u};
  for (const auto& s : v.segments()) {
    auto step = detail::insert_letter(out.row, s.letter, s.length);
    out.bumped = concat(out.bumped, step.bumped);
    out.row = std::move(step.row);
  }
  return out;
}

// Inverse of rins given l(u) = r: the unique (u, v) with
// rins(u, v) = (bumped, row).  Requires row ◁ bumped and
// l(bumped) <= r <= l(row).
inline RowPair rins_inverse(const TimedWord& bumped, const TimedWord& row, const Duration& r) {
  detail::require_row(bumped, "bumped word");
  detail::require_row(row, "row");
  detail::require_same_alphabet(bumped, row);
  if (r.sign() < 0 || r > row.length() || r < bumped.length()) {
    throw domain_error("row length " + r.str() + " outside [" + bumped.length().str() + ", " +
                       row.length().str() + "]");
  }
  if (!dominates(row, bumped)) throw domain_error("bumped word does not sit above the row");

  // RINS(row_[0,r)^#, bumped^#) = (v1^#, u^#).
  const RowInsertion mirrored = rins(sharp(row.slice(0, r)), sharp(bumped));
  RowPair out{sharp(mirrored.row), concat(sharp(mirrored.bumped), row.slice(r, row.length()))};
  if (rins(out.u, out.v) != RowInsertion{bumped, row}) {
    throw reconstruction_error("row insertion inverse failed to reproduce its input");
  }
  return out;
}

// INSERT(T, v): cascade row insertion upwards; leftover becomes a new top row.
inline TimedTableau insert(const TimedTableau& t, const TimedWord& v) {
  detail::require_row(v, "inserted word");
  if (v.alphabet_size() != t.alphabet_size()) {
    throw alphabet_error("row and tableau alphabets differ");
  }
  std::vector<TimedWord> rows;
  rows.reserve(t.row_count() + 1);
  TimedWord carry = v;
  for (const auto& row : t.rows()) {
    if (carry.empty()) {
      rows.push_back(row);
      continue;
    }
    auto step = rins(row, carry);
    rows.push_back(std::move(step.row));
    carry = std::move(step.bumped);
  }
  if (!carry.empty()) rows.push_back(std::move(carry));
  return TimedTableau(t.alphabet_size(), std::move(rows));
}

// Inverse of insert onto a prescribed shape lambda, which must interleave
// below shape(T').  Works top-down through rins_inverse.
inline Deletion delete_row(const TimedTableau& t2, const RealPartition& lambda) {
  const RealPartition mu = t2.shape();
  if (!interleaves(mu, lambda)) {
    throw interleaving_error(format_partition(lambda) + " does not interleave below " +
                             format_partition(mu));
  }
  const int n = t2.alphabet_size();
  const std::size_t l = lambda.size();
  const auto rows2 = t2.rows();

  TimedWord carry = l < rows2.size() ? rows2[l] : TimedWord(n);
  std::vector<TimedWord> rows(l, TimedWord(n));
  for (std::size_t i = l; i-- > 0;) {
    auto pair = rins_inverse(carry, rows2[i], lambda[i]);
    rows[i] = std::move(pair.u);
    carry = std::move(pair.v);
  }
  Deletion out{std::move(carry), TimedTableau(n, std::move(rows))};
  if (insert(out.tableau, out.row) != t2) {
    throw reconstruction_error("deletion failed to reproduce the tableau");
  }
  return out;
}

// P(w): insert the rows of w, in reading order, into the empty tableau.
inline TimedTableau insertion_tableau(const TimedWord& w) {
  TimedTableau t(w.alphabet_size());
  for (const auto& row : row_decomposition(w)) t = insert(t, row);
  return t;
}

}  // namespace plactic
