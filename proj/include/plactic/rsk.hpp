#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "plactic/error.hpp"
#include "plactic/greene.hpp"
#include "plactic/insertion.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic {

// m x n matrix of nonnegative rationals, 0-indexed.  Row i reads as the
// letter i + 1 of the recording alphabet, column j as letter j + 1 of the
// insertion alphabet.
class NonNegMatrix {
 public:
  NonNegMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw domain_error("matrix must have at least one row and column");
  }

  explicit NonNegMatrix(const std::vector<std::vector<Duration>>& rows)
      : NonNegMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rows[i].size() != cols_) throw domain_error("ragged matrix rows");
      for (std::size_t j = 0; j < cols_; ++j) set(i, j, rows[i][j]);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Duration& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, Duration value) {
    if (value.sign() < 0) throw domain_error("negative matrix entry " + value.str());
    entries_.at(i * cols_ + j) = std::move(value);
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Duration& d) { return d.is_zero(); });
  }
  Duration total() const {
    Duration s;
    for (const auto& d : entries_) s += d;
    return s;
  }
  std::vector<Duration> row_sums() const {
    std::vector<Duration> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
    return out;
  }
  std::vector<Duration> col_sums() const {
    std::vector<Duration> out(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
    return out;
  }

  NonNegMatrix transpose() const {
    NonNegMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  NonNegMatrix scaled(const Duration& c) const {
    if (c.sign() < 0) throw domain_error("negative scale factor");
    NonNegMatrix out = *this;
    for (auto& d : out.entries_) d *= c;
    return out;
  }

  // The first `count` columns.
  NonNegMatrix leading_columns(std::size_t count) const {
    NonNegMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) out.set(i, j, (*this)(i, j));
    return out;
  }

  friend bool operator==(const NonNegMatrix&, const NonNegMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Duration> entries_;
};

// u_A: column numbers read along the rows, timed by the entries.
inline TimedWord column_word(const NonNegMatrix& a) {
  std::vector<Segment> segs;
  segs.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) segs.push_back({static_cast<int>(j + 1), a(i, j)});
  return TimedWord(static_cast<int>(a.cols()), segs);
}

// v_A: row numbers read along the columns.
inline TimedWord row_word(const NonNegMatrix& a) { return column_word(a.transpose()); }

// 1^{a_i1} 2^{a_i2} ... n^{a_in} for 0-based row i.
inline TimedWord matrix_row_word(const NonNegMatrix& a, std::size_t i) {
  std::vector<Segment> segs;
  segs.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) segs.push_back({static_cast<int>(j + 1), a(i, j)});
  return TimedWord(static_cast<int>(a.cols()), segs);
}

struct RskResult {
  TimedTableau p;  // insertion tableau, over {1..n}
  TimedTableau q;  // recording tableau, over {1..m}
  friend bool operator==(const RskResult&, const RskResult&) = default;
};

// (P(u_A), P(v_A)).
inline RskResult rsk(const NonNegMatrix& a) {
  return {insertion_tableau(column_word(a)), insertion_tableau(row_word(a))};
}

// Insert the matrix rows one by one; record each new shape by inflating Q
// with the row's letter.
inline RskResult rsk_recording(const NonNegMatrix& a) {
  TimedTableau p(static_cast<int>(a.cols()));
  TimedTableau q(1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    p = insert(p, matrix_row_word(a, i));
    q = inflate(q, p.shape(), static_cast<int>(i + 1));
  }
  return {std::move(p), std::move(q)};
}

// 0-based support position.
struct LeadingPoint {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const LeadingPoint&, const LeadingPoint&) = default;
};

// Which antichain of the support is peeled.  `minimal` is the one that
// reproduces RSK; `maximal` exists to exercise the differential checks.
enum class LeadingRule { minimal, maximal };

// Antichain of the support, ordered by increasing column (so decreasing
// row).  Throws on the zero matrix.
inline std::vector<LeadingPoint> leading_points(const NonNegMatrix& a,
                                                LeadingRule rule = LeadingRule::minimal) {
  std::vector<LeadingPoint> out;
  if (rule == LeadingRule::minimal) {
    // (i, j) is minimal iff i is the first nonzero row of column j and
    // lies strictly above every such row in earlier columns.
    std::size_t bound = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t i = 0; i < a.rows() && i < bound; ++i) {
        if (a(i, j).sign() > 0) {
          out.push_back({i, j});
          bound = i;
          break;
        }
      }
    }
  } else {
    std::size_t floor = 0;  // rows must exceed floor - 1
    for (std::size_t j = a.cols(); j-- > 0;) {
      for (std::size_t i = a.rows(); i-- > floor;) {
        if (a(i, j).sign() > 0) {
          out.push_back({i, j});
          floor = i + 1;
          break;
        }
      }
    }
    std::reverse(out.begin(), out.end());
  }
  if (out.empty()) throw domain_error("leading points of the zero matrix");
  return out;
}

// One outer pass of light-and-shadows: peel leading antichains off A until
// it is exhausted.  Each peel contributes its first column to the row word
// p and its last row to the recording word q; the mass bumped between
// consecutive leading points lands in the shadow matrix.
struct ShadowPass {
  TimedWord p;  // over {1..n}
  TimedWord q;  // over {1..m}
  NonNegMatrix shadow;
};

inline ShadowPass shadow_pass(NonNegMatrix a, LeadingRule rule = LeadingRule::minimal) {
  NonNegMatrix shadow(a.rows(), a.cols());
  std::vector<Segment> p, q;
  while (!a.is_zero()) {
    const auto points = leading_points(a, rule);
    Duration step = a(points[0].row, points[0].col);
    for (const auto& pt : points) step = min(step, a(pt.row, pt.col));
    for (const auto& pt : points) a.set(pt.row, pt.col, a(pt.row, pt.col) - step);
    // Points run left to right and bottom to top; each consecutive pair
    // casts its shadow at (lower row, right column).
    for (std::size_t s = 0; s + 1 < points.size(); ++s) {
      const auto r = points[s].row;
      const auto c = points[s + 1].col;
      shadow.set(r, c, shadow(r, c) + step);
    }
    p.push_back({static_cast<int>(points.front().col + 1), step});
    q.push_back({static_cast<int>(points.back().row + 1), step});
  }
  return {TimedWord(static_cast<int>(a.cols()), p), TimedWord(static_cast<int>(a.rows()), q),
          std::move(shadow)};
}

// Light-and-shadows real RSK: pass k yields row k of P and of Q, and the
// next pass runs on the shadow matrix.
inline RskResult rsk_shadows(NonNegMatrix a, LeadingRule rule = LeadingRule::minimal) {
  const int n = static_cast<int>(a.cols());
  const int m = static_cast<int>(a.rows());
  std::vector<TimedWord> p_rows, q_rows;  // bottom-up
  while (!a.is_zero()) {
    auto pass = shadow_pass(std::move(a), rule);
    p_rows.push_back(std::move(pass.p));
    q_rows.push_back(std::move(pass.q));
    a = std::move(pass.shadow);
  }
  return {TimedTableau(n, std::move(p_rows)), TimedTableau(m, std::move(q_rows))};
}

// Undo the insertion-recording algorithm: strip letter i from Q to learn
// the previous shape, then delete down to that shape from P to recover
// matrix row i.
inline NonNegMatrix rsk_inverse(const TimedTableau& p, const TimedTableau& q) {
  if (p.shape() != q.shape()) {
    throw shape_mismatch("P has shape " + format_partition(p.shape()) + " but Q has shape " +
                         format_partition(q.shape()));
  }
  const auto m = static_cast<std::size_t>(q.alphabet_size());
  const auto n = static_cast<std::size_t>(p.alphabet_size());
  NonNegMatrix a(m, n);
  TimedTableau pp = p;
  TimedTableau qq = q;
  for (std::size_t i = m; i >= 1; --i) {
    const int prev = static_cast<int>(i) - 1;
    TimedTableau q_prev = prev >= 1 ? restrict(qq, prev) : TimedTableau(1);
    auto d = delete_row(pp, q_prev.shape());
    for (const auto& s : d.row.segments()) a.set(i - 1, static_cast<std::size_t>(s.letter - 1), s.length);
    pp = std::move(d.tableau);
    qq = std::move(q_prev);
  }
  if (!pp.empty()) throw reconstruction_error("insertion tableau not exhausted");
  return a;
}

struct PartialSumCheck {
  Duration lhs;  // lambda^(j)_1 + ... + lambda^(j)_k from GT(P)
  Duration rhs;  // max weight of a union of k chains in the first j columns
};

// Piecewise-linear identity for the GT pattern of P.  The chain side comes
// from the Greene oracle on the column word of the first j columns (1-based
// j), whose row subwords are exactly the chains of the index poset.  The
// recording side follows by applying this to the transpose.
inline PartialSumCheck gt_partial_sum_check(const NonNegMatrix& a, std::size_t j, std::size_t k,
                                            std::size_t cap = default_oracle_cap) {
  if (j < 1 || j > a.cols()) throw domain_error("column index out of range");
  if (k < 1) throw domain_error("k must be at least 1");
  const GTPattern gt = to_gt(rsk(a).p);
  const auto row = gt.row(j);
  Duration lhs;
  for (std::size_t i = 0; i < k && i < row.size(); ++i) lhs += row[i];
  return {lhs, greene_oracle(column_word(a.leading_columns(j)), k, cap)};
}

inline TimedTableau scale(const TimedTableau& t, const Duration& c) {
  std::vector<TimedWord> rows;
  for (const auto& r : t.rows()) rows.push_back(scale(r, c));
  return TimedTableau(t.alphabet_size(), std::move(rows));
}

}  // namespace plactic
