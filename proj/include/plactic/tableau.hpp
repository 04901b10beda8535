#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "plactic/duration.hpp"
#include "plactic/error.hpp"
#include "plactic/word.hpp"

namespace plactic {

// Weakly decreasing nonnegative parts; trailing zeros are never stored, so
// equality ignores them.
class RealPartition {
 public:
  RealPartition() = default;
  explicit RealPartition(std::vector<Duration> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i].sign() < 0) throw domain_error("negative part " + parts_[i].str());
      if (i > 0 && parts_[i - 1] < parts_[i]) throw domain_error("parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back().is_zero()) parts_.pop_back();
  }
  RealPartition(std::initializer_list<Duration> parts)
      : RealPartition(std::vector<Duration>(parts)) {}

  std::span<const Duration> parts() const& noexcept { return parts_; }
  std::span<const Duration> parts() const&& = delete;
  // Number of nonzero parts.
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  // 0-based; zero past the last stored part.
  Duration operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : Duration(); }

  Duration partial_sum(std::size_t k) const {
    Duration s;
    for (std::size_t i = 0; i < k && i < parts_.size(); ++i) s += parts_[i];
    return s;
  }
  Duration sum() const { return partial_sum(parts_.size()); }

  std::vector<Duration> padded(std::size_t k) const {
    std::vector<Duration> out(parts_);
    out.resize(std::max(k, out.size()));
    return out;
  }

  friend bool operator==(const RealPartition&, const RealPartition&) = default;

 private:
  std::vector<Duration> parts_;
};

inline std::string format_partition(const RealPartition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].str();
  }
  return out + ")";
}

// True iff larger_1 >= smaller_1 >= larger_2 >= smaller_2 >= ... with both
// sides zero-padded.  Argument order follows that chain: the parts of
// `smaller` sit between consecutive parts of `larger`.
inline bool interleaves(const RealPartition& larger, const RealPartition& smaller) {
  const std::size_t len = std::max(larger.size(), smaller.size()) + 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (larger[i] < smaller[i]) return false;
    if (smaller[i] < larger[i + 1]) return false;
  }
  return true;
}

// u ◁ v: l(u) >= l(v) and u(t) < v(t) on [0, l(v)).
inline bool dominates(const TimedWord& u, const TimedWord& v) {
  if (!is_row(u) || !is_row(v)) throw not_a_row("dominance is defined for rows only");
  if (u.length() < v.length()) return false;
  const auto us = u.segments();
  const auto vs = v.segments();
  // Two-pointer sweep over [0, l(v)); l(u) >= l(v) keeps u's pointer in range.
  std::size_t i = 0;
  Duration u_end = us.empty() ? Duration() : us[0].length;
  Duration v_end;
  for (const auto& seg : vs) {
    v_end += seg.length;
    while (true) {
      if (us[i].letter >= seg.letter) return false;
      if (u_end >= v_end) break;
      ++i;
      u_end += us[i].length;
    }
  }
  return true;
}

// A timed tableau over {1, ..., n}, stored as its rows u_1, ..., u_l from
// the bottom (longest) row up, with u_1 ◁ u_2 ◁ ... ◁ u_l.  Construction
// validates; an invalid tableau value cannot exist.
class TimedTableau {
 public:
  explicit TimedTableau(int alphabet_size = 1) : n_(alphabet_size) {
    if (n_ < 1) throw alphabet_error("alphabet size must be positive");
  }

  // Trailing empty rows are dropped.
  TimedTableau(int alphabet_size, std::vector<TimedWord> rows) : TimedTableau(alphabet_size) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    rows_.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!is_row(rows[i])) {
        throw not_a_row("row " + std::to_string(i + 1) + " is not weakly increasing");
      }
      rows_.push_back(rows[i].alphabet_size() == n_ ? std::move(rows[i]) : rows[i].with_alphabet(n_));
      if (i > 0 && !dominates(rows_[i - 1], rows_[i])) {
        throw not_a_tableau(i, "row " + std::to_string(i) + " does not dominate row " +
                                   std::to_string(i + 1));
      }
    }
  }

  int alphabet_size() const noexcept { return n_; }
  std::span<const TimedWord> rows() const& noexcept { return rows_; }
  std::span<const TimedWord> rows() const&& = delete;
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  // u_l ... u_2 u_1.
  TimedWord reading_word() const {
    TimedWord w(n_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w = concat(w, *it);
    return w;
  }

  RealPartition shape() const {
    std::vector<Duration> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(r.length());
    return RealPartition(std::move(parts));
  }

  TimedTableau with_alphabet(int alphabet_size) const {
    return TimedTableau(alphabet_size, rows_);
  }

  friend bool operator==(const TimedTableau&, const TimedTableau&) = default;

 private:
  int n_ = 1;
  std::vector<TimedWord> rows_;
};

inline std::vector<Duration> weight(const TimedTableau& t) { return weight(t.reading_word()); }
inline RealPartition shape(const TimedTableau& t) { return t.shape(); }

// Validates the row decomposition of `w` as a dominance chain.
inline TimedTableau from_reading_word(const TimedWord& w) {
  auto rows = row_decomposition(w);
  std::reverse(rows.begin(), rows.end());
  return TimedTableau(w.alphabet_size(), std::move(rows));
}

// Restriction to {1, ..., k}, row by row.
inline TimedTableau restrict(const TimedTableau& t, int k) {
  std::vector<TimedWord> rows;
  rows.reserve(t.row_count());
  for (const auto& r : t.rows()) rows.push_back(restrict(r, k));
  return TimedTableau(k, std::move(rows));
}

// INFL_mu(T, m): append m^{mu_i - lambda_i} to row i of T (new rows as
// needed).  The result lives over {1, ..., m} and restricts back to T.
inline TimedTableau inflate(const TimedTableau& t, const RealPartition& mu, int m) {
  if (m < 1) throw alphabet_error("inflation letter must be positive");
  const RealPartition lambda = t.shape();
  if (!interleaves(mu, lambda)) {
    throw interleaving_error("shape " + format_partition(lambda) + " does not interleave " +
                             format_partition(mu));
  }
  std::vector<TimedWord> rows;
  rows.reserve(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    TimedWord row(m);
    if (i < t.row_count()) {
      const auto& old = t.rows()[i];
      if (!old.empty() && old.last_letter() >= m) {
        throw alphabet_error("tableau uses letter " + std::to_string(old.last_letter()) +
                             ", expected letters below " + std::to_string(m));
      }
      row = old.with_alphabet(m);
    }
    rows.push_back(concat(row, letter_word(m, m, mu[i] - lambda[i])));
  }
  return TimedTableau(m, std::move(rows));
}

// Triangular array: row j (1-based) holds lambda^(j)_1..j, and
// lambda^(j)_i >= lambda^(j-1)_i >= lambda^(j)_{i+1}.
class GTPattern {
 public:
  GTPattern() = default;
  explicit GTPattern(std::vector<std::vector<Duration>> rows) : rows_(std::move(rows)) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (rows_[j].size() != j + 1) {
        throw domain_error("pattern row " + std::to_string(j + 1) + " must have " +
                           std::to_string(j + 1) + " entries");
      }
      for (const auto& x : rows_[j]) {
        if (x.sign() < 0) throw domain_error("negative pattern entry " + x.str());
      }
      if (j == 0) continue;
      const auto& top = rows_[j];
      const auto& below = rows_[j - 1];
      for (std::size_t i = 0; i < j; ++i) {
        if (top[i] < below[i] || below[i] < top[i + 1]) {
          throw interleaving_error("pattern rows " + std::to_string(j) + " and " +
                                   std::to_string(j + 1) + " do not interleave");
        }
      }
    }
  }

  std::size_t size() const noexcept { return rows_.size(); }
  // 1-based: row(j) = lambda^(j).
  std::span<const Duration> row(std::size_t j) const& { return rows_.at(j - 1); }
  std::span<const Duration> row(std::size_t j) const&& = delete;
  const std::vector<std::vector<Duration>>& rows() const& noexcept { return rows_; }
  const std::vector<std::vector<Duration>>& rows() const&& = delete;
  RealPartition shape() const {
    return rows_.empty() ? RealPartition() : RealPartition(rows_.back());
  }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;

 private:
  std::vector<std::vector<Duration>> rows_;
};

inline GTPattern to_gt(const TimedTableau& t) {
  const int n = t.alphabet_size();
  std::vector<std::vector<Duration>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const RealPartition lambda = restrict(t, k).shape();
    if (lambda.size() > static_cast<std::size_t>(k)) {
      throw not_a_tableau(static_cast<std::size_t>(k), "restriction has more rows than letters");
    }
    std::vector<Duration> row = lambda.padded(static_cast<std::size_t>(k));
    rows.push_back(std::move(row));
  }
  return GTPattern(std::move(rows));
}

inline TimedTableau from_gt(const GTPattern& g) {
  if (g.size() == 0) throw domain_error("empty pattern");
  TimedTableau t(1);
  for (std::size_t m = 1; m <= g.size(); ++m) {
    const auto row = g.row(m);
    t = inflate(t, RealPartition(std::vector<Duration>(row.begin(), row.end())),
                static_cast<int>(m));
  }
  return t;
}

}  // namespace plactic
