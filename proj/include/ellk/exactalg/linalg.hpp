#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "ellk/exactalg/rational.hpp"

namespace ellk {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const { return QVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  QVector column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  QVector apply(const QVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("QMatrix::apply: dimension mismatch");
    QVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0 && x[c] != 0) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  /// Vertical concatenation; column counts must agree.
  static QMatrix stack(const QMatrix& top, const QMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("QMatrix::stack: column mismatch");
    QMatrix m(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Incrementally maintained semi-echelon basis of a subspace of Q^n.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(QVector v) const { return is_zero(reduce(std::move(v))); }

  /// Adds v; returns true when it enlarged the span.
  bool insert(QVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back({p, std::move(v)});
    return true;
  }

 private:
  struct Row {
    std::size_t pivot;
    QVector v;
  };

  QVector reduce(QVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanTracker: dimension mismatch");
    for (const auto& r : rows_) {
      if (v[r.pivot] == 0) continue;
      const Rational f = v[r.pivot];
      for (std::size_t i = 0; i < dim_; ++i)
        if (r.v[i] != 0) v[i] -= f * r.v[i];
    }
    return v;
  }
  static bool is_zero(const QVector& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }

  std::size_t dim_;
  std::vector<Row> rows_;
};

inline std::size_t rank(const QMatrix& m) {
  SpanTracker s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  return s.rank();
}

/// Basis of {x : m x = 0} from the reduced row echelon form.
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  QMatrix a = m;
  std::vector<std::ptrdiff_t> pivot_row_of_col(C, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t sel = row;
    while (sel < R && a(sel, col) == 0) ++sel;
    if (sel == R) continue;
    if (sel != row)
      for (std::size_t c = 0; c < C; ++c) std::swap(a(sel, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = 0; c < C; ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < C; ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    pivot_row_of_col[col] = static_cast<std::ptrdiff_t>(row);
    ++row;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    QVector v(C);
    v[free] = 1;
    for (std::size_t col = 0; col < C; ++col)
      if (pivot_row_of_col[col] >= 0) v[col] = -a(static_cast<std::size_t>(pivot_row_of_col[col]), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ellk
