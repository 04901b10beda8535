#pragma once

// Test-only helpers and independent oracles.  Nothing here calls into the
// insertion or RSK code paths it is used to check.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "plactic/duration.hpp"
#include "plactic/knuth.hpp"
#include "plactic/random.hpp"
#include "plactic/rsk.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

// Readable failure output.
namespace plactic {
inline std::ostream& operator<<(std::ostream& os, const TimedWord& w) {
  return os << '[' << format_word(w) << "] /" << w.alphabet_size();
}
inline std::ostream& operator<<(std::ostream& os, const TimedTableau& t) {
  os << '{';
  for (std::size_t i = 0; i < t.rows().size(); ++i) os << (i ? " | " : "") << format_word(t.rows()[i]);
  return os << "} /" << t.alphabet_size();
}
inline std::ostream& operator<<(std::ostream& os, const NonNegMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
  }
  return os << ']';
}
inline std::ostream& operator<<(std::ostream& os, const RealPartition& p) {
  return os << format_partition(p);
}
}  // namespace plactic

namespace testing_support {

using namespace plactic;
using namespace plactic::literals;

inline TimedWord W(const std::string& text, int n) { return parse_word(text, n); }

inline TimedTableau Tab(int n, const std::vector<std::string>& rows) {
  std::vector<TimedWord> out;
  for (const auto& r : rows) out.push_back(parse_word(r, n));
  return TimedTableau(n, std::move(out));
}

// Evaluate a raw (possibly non-canonical) segment list at position t.
inline int eval_raw(const std::vector<Segment>& raw, const Duration& t) {
  Duration end;
  for (const auto& s : raw) {
    end += s.length;
    if (t < end) return s.letter;
  }
  return -1;
}

// Midpoints of every piece between consecutive breakpoints of `raw`.
inline std::vector<Duration> probe_points(const std::vector<Segment>& raw) {
  std::vector<Duration> cuts{Duration()};
  for (const auto& s : raw) cuts.push_back(cuts.back() + s.length);
  std::vector<Duration> out;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i - 1] < cuts[i]) out.push_back((cuts[i - 1] + cuts[i]) / Duration(2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical (integer) Schensted insertion and RSK, letter by letter.

using IntTableau = std::vector<std::vector<int>>;

inline std::pair<std::size_t, std::size_t> classical_insert(IntTableau& t, int x) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    auto it = std::upper_bound(t[r].begin(), t[r].end(), x);
    if (it == t[r].end()) {
      t[r].push_back(x);
      return {r, t[r].size() - 1};
    }
    std::swap(*it, x);
  }
  t.push_back({x});
  return {t.size() - 1, 0};
}

inline std::vector<int> expand_integer_word(const TimedWord& w) {
  std::vector<int> out;
  for (const auto& s : w.segments()) {
    out.insert(out.end(), static_cast<std::size_t>(s.length.numerator().get_si()), s.letter);
  }
  return out;
}

inline IntTableau classical_p(const std::vector<int>& letters) {
  IntTableau t;
  for (int x : letters) classical_insert(t, x);
  return t;
}

// Rows of an integer tableau as timed rows (run-length encoded).
inline TimedTableau to_timed(const IntTableau& t, int n) {
  std::vector<TimedWord> rows;
  for (const auto& r : t) {
    std::vector<Segment> segs;
    for (int x : r) segs.push_back({x, Duration(1)});
    rows.emplace_back(n, segs);
  }
  return TimedTableau(n, std::move(rows));
}

// Knuth's RSK on the two-line array of an integer matrix: insert column
// indices, record row indices in the cells that appear.
inline std::pair<IntTableau, IntTableau> classical_rsk(const NonNegMatrix& a) {
  IntTableau p, q;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const long count = a(i, j).numerator().get_si();
      for (long c = 0; c < count; ++c) {
        const auto [r, col] = classical_insert(p, static_cast<int>(j + 1));
        if (r == q.size()) q.emplace_back();
        q[r].push_back(static_cast<int>(i + 1));
        (void)col;
      }
    }
  }
  return {p, q};
}

// Least common denominator of every duration in the given words.
inline Duration common_denominator(std::initializer_list<const TimedWord*> words) {
  mpz_class d = 1;
  for (const auto* w : words)
    for (const auto& s : w->segments()) {
      const mpz_class den = s.length.denominator();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  return Duration(mpq_class(d));
}

// Classical row insertion of a letter sequence into one row; returns the
// bumped letters in order.
inline std::vector<int> classical_row_insert(std::vector<int>& row, const std::vector<int>& letters) {
  std::vector<int> bumped;
  for (int x : letters) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
    } else {
      bumped.push_back(*it);
      *it = x;
    }
  }
  return bumped;
}

inline TimedWord from_letters(const std::vector<int>& letters, int n) {
  std::vector<Segment> segs;
  for (int x : letters) segs.push_back({x, Duration(1)});
  return TimedWord(n, segs);
}

// A random word a x z y b with xyz a row, l(z) = l(y), last(y) < z(0),
// together with the forward K1 move at l(a).
struct K1Instance {
  TimedWord word;
  KnuthMove move;
};

inline K1Instance random_k1(plactic::gen::Rng& rng, int n) {
  for (;;) {
    const int c = static_cast<int>(plactic::gen::uniform(rng, 1, n - 1));
    const auto xy = restrict(plactic::gen::row(rng, n, 4), c).with_alphabet(n);
    if (xy.empty()) continue;
    const Duration cut = xy.length() * Duration(plactic::gen::uniform(rng, 1, 5), 6);
    const auto x = xy.slice(0, cut);
    const auto y = xy.slice(cut, xy.length());
    std::vector<Segment> high;
    for (int letter = c + 1; letter <= n; ++letter)
      if (plactic::gen::chance(rng, 0.6)) high.push_back({letter, plactic::gen::positive_duration(rng, 4)});
    if (high.empty()) high.push_back({n, 1});
    const TimedWord zraw(n, high);
    const auto z = scale(zraw, y.length() / zraw.length());
    const auto a = plactic::gen::word(rng, n, 3, 4);
    const auto b = plactic::gen::word(rng, n, 3, 4);
    return {concat(a, x, z, y, b),
            KnuthMove{MoveKind::k1, Direction::forward, a.length(), x.length(), y.length(), z.length()}};
  }
}

inline NonNegMatrix sample_matrix() {
  return NonNegMatrix(std::vector<std::vector<Duration>>{
      {"0.16"_d, "0.29"_d, "0.68"_d, "0.44"_d},
      {"0.29"_d, "0.70"_d, "0.38"_d, "0.45"_d},
      {"0.32"_d, "0.29"_d, "0.43"_d, "0.70"_d}});
}

// Example tableau 3^0.8 4^1.1 1^1.4 2^1.6 3^0.7 over five letters.
inline TimedTableau example_tableau() { return Tab(5, {"1^1.4 2^1.6 3^0.7", "3^0.8 4^1.1"}); }

}  // namespace testing_support
