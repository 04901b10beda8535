#pragma once

#include <array>
#include <string>
#include <vector>

#include "plactic/error.hpp"
#include "plactic/insertion.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic {

// The two timed Knuth relations, for rows x, y, z with xyz a row:
//   K1:  x z y == z x y   when l(z) = l(y) and last(y) < first(z)
//   K2:  y x z == y z x   when l(x) = l(y) and last(x) < first(y)
// Forward rewrites the left side into the right side.
enum class MoveKind { k1, k2 };
enum class Direction { forward, backward };

// A rewrite located by position: the factor starting at `offset` is
// rewritten, with the factor lengths named after the relation's x, y, z.
struct KnuthMove {
  MoveKind kind = MoveKind::k1;
  Direction direction = Direction::forward;
  Duration offset;
  Duration lx, ly, lz;

  Duration span() const { return lx + ly + lz; }
  KnuthMove reversed() const {
    KnuthMove m = *this;
    m.direction = direction == Direction::forward ? Direction::backward : Direction::forward;
    return m;
  }
  friend bool operator==(const KnuthMove&, const KnuthMove&) = default;
};

namespace detail {

enum class Part { x, y, z };

// Order of the factors on each side of a relation.
inline std::array<Part, 3> layout(MoveKind kind, bool left_side) {
  if (kind == MoveKind::k1) {
    return left_side ? std::array{Part::x, Part::z, Part::y} : std::array{Part::z, Part::x, Part::y};
  }
  return left_side ? std::array{Part::y, Part::x, Part::z} : std::array{Part::y, Part::z, Part::x};
}

inline const Duration& part_length(const KnuthMove& m, Part p) {
  switch (p) {
    case Part::x: return m.lx;
    case Part::y: return m.ly;
    case Part::z: break;
  }
  return m.lz;
}

}  // namespace detail

// Rewrites one side of the relation into the other; throws invalid_move
// when the factor at the given place does not match the pattern.
inline TimedWord apply_move(const TimedWord& w, const KnuthMove& m) {
  if (m.lx.sign() <= 0 || m.ly.sign() <= 0 || m.lz.sign() <= 0) {
    throw invalid_move("degenerate move: every factor must be nonempty");
  }
  if (m.kind == MoveKind::k1 ? m.lz != m.ly : m.lx != m.ly) {
    throw invalid_move("factor lengths do not match the relation");
  }
  const Duration end = m.offset + m.span();
  if (m.offset.sign() < 0 || end > w.length()) throw invalid_move("move extends outside the word");

  const bool forward = m.direction == Direction::forward;
  const auto source = detail::layout(m.kind, forward);
  const auto target = detail::layout(m.kind, !forward);

  std::array<TimedWord, 3> parts;  // indexed by Part
  Duration at = m.offset;
  for (const auto p : source) {
    const Duration& len = detail::part_length(m, p);
    parts[static_cast<int>(p)] = w.slice(at, at + len);
    at += len;
  }
  const auto& x = parts[static_cast<int>(detail::Part::x)];
  const auto& y = parts[static_cast<int>(detail::Part::y)];
  const auto& z = parts[static_cast<int>(detail::Part::z)];
  if (!is_row(concat(x, y, z))) throw invalid_move("xyz is not a row");
  if (m.kind == MoveKind::k1 ? !(y.last_letter() < z.first_letter())
                             : !(x.last_letter() < y.first_letter())) {
    throw invalid_move("strict inequality between factors fails");
  }

  TimedWord out = w.slice(Duration(), m.offset);
  for (const auto p : target) out = concat(out, parts[static_cast<int>(p)]);
  return concat(out, w.slice(end, w.length()));
}

inline TimedWord replay(TimedWord w, const std::vector<KnuthMove>& trace) {
  for (const auto& m : trace) w = apply_move(w, m);
  return w;
}

// The image of a K1 move under w -> w^#, as a K2 move on sharp(w) (and
// conversely).  `word_length` is l(w).
inline KnuthMove transport_through_sharp(const KnuthMove& m, const Duration& word_length) {
  KnuthMove out = m;
  out.kind = m.kind == MoveKind::k1 ? MoveKind::k2 : MoveKind::k1;
  out.offset = word_length - m.offset - m.span();
  out.lx = m.lz;
  out.lz = m.lx;
  return out;
}

struct Normalization {
  TimedTableau tableau;
  std::vector<KnuthMove> trace;
};

// P(w) together with a Knuth certificate: replaying `trace` on w yields the
// reading word of P(w).  A word that is already a tableau word gets an
// empty trace.  Every elementary bump of c^t displacing y inside
// u = x' y x'' contributes
//   x' (y x'' c^t) -> x' (y c^t x'')   (K2, backward; skipped if x'' empty)
//   (x' y c^t) x'' -> (y x' c^t) x''   (K1, forward;  skipped if x' empty)
inline Normalization normalize_with_trace(const TimedWord& w) {
  const int n = w.alphabet_size();
  // Already a tableau word: nothing to certify.
  try {
    return {from_reading_word(w), {}};
  } catch (const not_a_row&) {
  } catch (const not_a_tableau&) {
  }
  Normalization out{TimedTableau(n), {}};

  for (const auto& incoming : row_decomposition(w)) {
    const auto old_rows = out.tableau.rows();
    // Offset of u_i in the current word is the total length above it.
    Duration above;
    for (const auto& r : old_rows) above += r.length();

    std::vector<TimedWord> rows;
    rows.reserve(old_rows.size() + 1);
    TimedWord carry = incoming;
    for (const auto& row : old_rows) {
      above -= row.length();
      if (carry.empty()) {
        rows.push_back(row);
        continue;
      }
      TimedWord u = row;
      TimedWord bumped(n);
      for (const auto& s : carry.segments()) {
        auto step = detail::insert_letter(u, s.letter, s.length);
        if (step.start) {
          const Duration base = above + bumped.length();
          const Duration& t0 = *step.start;
          const Duration& t1 = step.displaced;
          const Duration rest = u.length() - t0 - t1;
          if (rest.sign() > 0) {
            out.trace.push_back({MoveKind::k2, Direction::backward, base + t0, t1, t1, rest});
          }
          if (t0.sign() > 0) {
            out.trace.push_back({MoveKind::k1, Direction::forward, base, t0, t1, t1});
          }
        }
        bumped = concat(bumped, step.bumped);
        u = std::move(step.row);
      }
      rows.push_back(std::move(u));
      carry = std::move(bumped);
    }
    if (!carry.empty()) rows.push_back(std::move(carry));
    out.tableau = TimedTableau(n, std::move(rows));
  }
  return out;
}

// Knuth equivalence, decided by comparing insertion tableaux.
inline bool equivalent(const TimedWord& v, const TimedWord& w) {
  if (v.alphabet_size() != w.alphabet_size()) {
    throw alphabet_error("words over different alphabets");
  }
  return insertion_tableau(v) == insertion_tableau(w);
}

}  // namespace plactic
