#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plactic/duration.hpp"
#include "plactic/error.hpp"

namespace plactic {

// One maximal constant piece c^t of a timed word.
struct Segment {
  int letter = 1;
  Duration length;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// A finite timed word over the alphabet {1, ..., n}, held in canonical form:
// every segment has positive length and adjacent segments carry different
// letters.  Two words are equal iff they are the same step function over
// the same alphabet.
class TimedWord {
 public:
  TimedWord() = default;
  explicit TimedWord(int alphabet_size) : n_(alphabet_size) {
    if (n_ < 1) throw alphabet_error("alphabet size must be positive");
  }
  // Canonicalizes: zero-length segments are dropped, equal neighbours merged.
  TimedWord(int alphabet_size, std::span<const Segment> raw);
  TimedWord(int alphabet_size, std::initializer_list<Segment> raw)
      : TimedWord(alphabet_size, std::span<const Segment>(raw.begin(), raw.size())) {}

  int alphabet_size() const noexcept { return n_; }
  std::span<const Segment> segments() const& noexcept { return segments_; }
  std::span<const Segment> segments() const&& = delete;
  std::size_t segment_count() const noexcept { return segments_.size(); }
  const Duration& length() const noexcept { return length_; }
  bool empty() const noexcept { return segments_.empty(); }

  int first_letter() const { return segments_.at(0).letter; }
  int last_letter() const { return segments_.at(segments_.size() - 1).letter; }

  // w(t) for 0 <= t < l(w).
  int at(const Duration& t) const;

  // w_[a, b): the piece of the word between positions a and b.
  TimedWord slice(const Duration& a, const Duration& b) const;

  // The same step function viewed over a different alphabet.
  TimedWord with_alphabet(int alphabet_size) const;

  friend bool operator==(const TimedWord&, const TimedWord&) = default;

 private:
  int n_ = 1;
  std::vector<Segment> segments_;
  Duration length_;

  friend TimedWord concat(const TimedWord&, const TimedWord&);
  void push(const Segment& s);
};

inline void TimedWord::push(const Segment& s) {
  if (s.length.is_zero()) return;
  length_ += s.length;
  if (!segments_.empty() && segments_.back().letter == s.letter) {
    segments_.back().length += s.length;
  } else {
    segments_.push_back(s);
  }
}

inline TimedWord::TimedWord(int alphabet_size, std::span<const Segment> raw)
    : TimedWord(alphabet_size) {
  segments_.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.letter < 1 || s.letter > n_) {
      throw alphabet_error("letter " + std::to_string(s.letter) + " outside alphabet of size " +
                           std::to_string(n_));
    }
    if (s.length.sign() < 0) throw domain_error("negative duration " + s.length.str());
    push(s);
  }
}

inline int TimedWord::at(const Duration& t) const {
  if (t.sign() < 0 || t >= length_) throw domain_error("position outside the word");
  Duration end;
  for (const auto& s : segments_) {
    end += s.length;
    if (t < end) return s.letter;
  }
  throw domain_error("position outside the word");  // unreachable
}

inline TimedWord TimedWord::slice(const Duration& a, const Duration& b) const {
  if (a.sign() < 0 || b > length_ || b < a) {
    throw interval_error("slice [" + a.str() + ", " + b.str() + ") outside [0, " + length_.str() + ")");
  }
  TimedWord out(n_);
  Duration start;
  for (const auto& s : segments_) {
    if (start >= b) break;
    const Duration end = start + s.length;
    const Duration lo = max(start, a);
    const Duration hi = min(end, b);
    if (lo < hi) out.push({s.letter, hi - lo});
    start = end;
  }
  return out;
}

inline TimedWord TimedWord::with_alphabet(int alphabet_size) const {
  return TimedWord(alphabet_size, std::span<const Segment>(segments_));
}

inline TimedWord concat(const TimedWord& a, const TimedWord& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw alphabet_error("cannot concatenate words over alphabets of size " +
                         std::to_string(a.alphabet_size()) + " and " +
                         std::to_string(b.alphabet_size()));
  }
  TimedWord out = a;
  for (const auto& s : b.segments()) out.push(s);
  return out;
}

template <typename... Rest>
TimedWord concat(const TimedWord& a, const TimedWord& b, const Rest&... rest) {
  return concat(concat(a, b), rest...);
}

// Single-letter word c^t.
inline TimedWord letter_word(int alphabet_size, int letter, const Duration& t) {
  const Segment s{letter, t};
  return TimedWord(alphabet_size, std::span<const Segment>(&s, 1));
}

// Component i-1 is the total length of letter i.
inline std::vector<Duration> weight(const TimedWord& w) {
  std::vector<Duration> out(static_cast<std::size_t>(w.alphabet_size()));
  for (const auto& s : w.segments()) out[static_cast<std::size_t>(s.letter - 1)] += s.length;
  return out;
}

// A finite union of half-open intervals [a, b), sorted and disjoint.
class IntervalSet {
 public:
  struct Interval {
    Duration begin;
    Duration end;
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      const auto& iv = intervals_[i];
      if (iv.begin.sign() < 0) throw interval_error("interval starts before 0");
      if (!(iv.begin < iv.end)) throw interval_error("empty or reversed interval");
      if (i > 0 && intervals_[i - 1].end > iv.begin) {
        throw interval_error("intervals overlap or are out of order");
      }
    }
  }

  std::span<const Interval> intervals() const& noexcept { return intervals_; }
  std::span<const Interval> intervals() const&& = delete;
  Duration measure() const {
    Duration total;
    for (const auto& iv : intervals_) total += iv.end - iv.begin;
    return total;
  }

 private:
  std::vector<Interval> intervals_;
};

// w_S: the pieces of w inside S, concatenated in order.
inline TimedWord subword(const TimedWord& w, const IntervalSet& s) {
  TimedWord out(w.alphabet_size());
  for (const auto& iv : s.intervals()) {
    if (iv.end > w.length()) throw interval_error("interval extends past the end of the word");
    out = concat(out, w.slice(iv.begin, iv.end));
  }
  return out;
}

// Reverse the word and the alphabet: c -> n - c + 1.
inline TimedWord sharp(const TimedWord& w) {
  const int n = w.alphabet_size();
  std::vector<Segment> out;
  out.reserve(w.segment_count());
  for (auto it = w.segments().rbegin(); it != w.segments().rend(); ++it) {
    out.push_back({n - it->letter + 1, it->length});
  }
  return TimedWord(n, out);
}

// Delete every letter larger than k; the result lives over {1, ..., k}.
inline TimedWord restrict(const TimedWord& w, int k) {
  if (k < 1 || k > w.alphabet_size()) {
    throw alphabet_error("restriction to " + std::to_string(k) + " outside [1, " +
                         std::to_string(w.alphabet_size()) + "]");
  }
  std::vector<Segment> out;
  for (const auto& s : w.segments()) {
    if (s.letter <= k) out.push_back(s);
  }
  return TimedWord(k, out);
}

// Multiply every duration by c > 0.
inline TimedWord scale(const TimedWord& w, const Duration& c) {
  if (c.sign() <= 0) throw domain_error("scale factor must be positive");
  std::vector<Segment> out(w.segments().begin(), w.segments().end());
  for (auto& s : out) s.length *= c;
  return TimedWord(w.alphabet_size(), out);
}

// Weakly increasing, i.e. canonical letters strictly increase.
inline bool is_row(const TimedWord& w) {
  const auto segs = w.segments();
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i - 1].letter >= segs[i].letter) return false;
  }
  return true;
}

// Maximal rows, in reading order: the word is their concatenation and each
// cut sits at a strict descent.
inline std::vector<TimedWord> row_decomposition(const TimedWord& w) {
  std::vector<TimedWord> rows;
  const auto segs = w.segments();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= segs.size(); ++i) {
    if (i == segs.size() || segs[i - 1].letter > segs[i].letter) {
      rows.emplace_back(w.alphabet_size(), segs.subspan(start, i - start));
      start = i;
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Text format: whitespace-separated tokens L^D, e.g. "3^0.8 1^0.5 4^1.1".

inline TimedWord parse_word(std::string_view text, std::optional<int> alphabet_size = std::nullopt) {
  std::vector<Segment> raw;
  int max_letter = 0;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    if (is_space(text[i])) { ++i; continue; }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) throw parse_error(start, "expected L^D");
    if (caret == 0) throw parse_error(start, "missing letter");
    long letter = 0;
    for (std::size_t k = 0; k < caret; ++k) {
      const char c = token[k];
      if (c < '0' || c > '9') throw parse_error(start + k, "letter must be a positive integer");
      letter = letter * 10 + (c - '0');
      if (letter > 1'000'000) throw parse_error(start, "letter too large");
    }
    if (letter < 1) throw parse_error(start, "letter must be positive");
    raw.push_back({static_cast<int>(letter), Duration::parse(token.substr(caret + 1), start + caret + 1)});
    max_letter = std::max(max_letter, static_cast<int>(letter));
  }
  const int n = alphabet_size.value_or(std::max(max_letter, 1));
  return TimedWord(n, raw);
}

inline std::string format_word(const TimedWord& w) {
  std::string out;
  for (const auto& s : w.segments()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.letter) + "^" + s.length.str();
  }
  return out;
}

}  // namespace plactic
