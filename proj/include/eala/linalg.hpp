#pragma once

// Dense exact linear algebra over a field F (Rational or Cyclotomic).
// F must provide + - * /, unary -, ==, and the free functions is_zero,
// zero_like and one_like.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eala/error.hpp"
#include "eala/exactnum.hpp"

namespace eala {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const F& zero)
      : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows * cols, zero_like(zero)) {}

  static Matrix identity(size_t n, const F& zero) {
    Matrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }
  // Columns of the result are the given vectors (all of length `rows`).
  static Matrix from_columns(const std::vector<Vec<F>>& cols, size_t rows, const F& zero) {
    Matrix m(rows, cols.size(), zero);
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<F>>& rows, size_t cols, const F& zero) {
    Matrix m(rows.size(), cols, zero);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const F& zero() const { return zero_; }
  bool square() const { return rows_ == cols_; }

  F& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> row(size_t i) const { return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vec<F> col(size_t j) const {
    Vec<F> c;
    c.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(rows_, zero_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix product: dimension mismatch");
    Matrix p(a.rows_, b.cols_, a.zero_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix s = a;
    for (size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix s = a;
    for (size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
    return s;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(long e) const {
    if (!square()) fail(ErrorCode::NotSquare, "matrix power of a non-square matrix");
    Matrix result = identity(rows_, zero_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  bool is_identity() const { return square() && *this == identity(rows_, zero_); }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      fail(ErrorCode::InvalidArgument, "matrix sum: dimension mismatch");
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  F zero_{};
  std::vector<F> data_;
};

using RatVector = Vec<Rational>;
using RatMatrix = Matrix<Rational>;

template <class F>
struct RowEchelon {
  Matrix<F> reduced;            // reduced row echelon form
  std::vector<size_t> pivots;   // pivot column of each nonzero row
};

template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = one_like(m.zero()) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

// Basis of {v : m v = 0}; one vector per free column, with a 1 there.
template <class F>
std::vector<Vec<F>> kernel(const Matrix<F>& m) {
  auto [rref, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), m.zero());
    v[free] = one_like(m.zero());
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of {v : m v = v}.
template <class F>
std::vector<Vec<F>> fixed_subspace(const Matrix<F>& m) {
  if (!m.square()) fail(ErrorCode::NotSquare, "fixed_subspace: matrix is not square");
  return kernel(m - Matrix<F>::identity(m.rows(), m.zero()));
}

// Some x with m x = b, or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  Matrix<F> aug(m.rows(), m.cols() + 1, m.zero());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [rref, pivots] = row_reduce(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), m.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rref(r, m.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.square()) fail(ErrorCode::NotSquare, "inverse: matrix is not square");
  const size_t n = m.rows();
  Matrix<F> aug(n, 2 * n, m.zero());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one_like(m.zero());
  }
  auto [rref, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n, m.zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = rref(i, n + j);
  return inv;
}

// Indices of a maximal independent subset of the vectors, greedy in order.
template <class F>
std::vector<size_t> independent_subset(const std::vector<Vec<F>>& vectors, size_t dim, const F& zero) {
  if (vectors.empty()) return {};
  auto pivots = row_reduce(Matrix<F>::from_columns(vectors, dim, zero)).pivots;
  return pivots;
}

template <class F>
std::vector<Vec<F>> span_basis(const std::vector<Vec<F>>& vectors, size_t dim, const F& zero) {
  std::vector<Vec<F>> basis;
  for (size_t i : independent_subset(vectors, dim, zero)) basis.push_back(vectors[i]);
  return basis;
}

// Coordinates of v in the (independent) basis, or nullopt if v is outside the span.
template <class F>
std::optional<Vec<F>> coordinates(const std::vector<Vec<F>>& basis, const Vec<F>& v, const F& zero) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!is_zero(x)) return std::nullopt;
    return Vec<F>{};
  }
  return solve(Matrix<F>::from_columns(basis, v.size(), zero), v);
}

// ---- vector helpers --------------------------------------------------------

template <class F>
Vec<F> vadd(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
template <class F>
Vec<F> vsub(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
template <class F>
Vec<F> vneg(const Vec<F>& a) {
  Vec<F> r = a;
  for (auto& x : r) x = -x;
  return r;
}
template <class F>
Vec<F> scale(const F& s, const Vec<F>& a) {
  Vec<F> r = a;
  for (auto& x : r) x = s * x;
  return r;
}
template <class F>
bool is_zero_vector(const Vec<F>& a) {
  return std::all_of(a.begin(), a.end(), [](const F& x) { return is_zero(x); });
}

// x^T G y
template <class F>
F bilinear(const Matrix<F>& gram, const Vec<F>& x, const Vec<F>& y) {
  F sum = zero_like(gram.zero());
  for (size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j]) && !is_zero(gram(i, j))) sum += x[i] * gram(i, j) * y[j];
  }
  return sum;
}

// Coordinates with respect to a fixed independent list of vectors, using an
// invertible square minor so each lookup is one small product plus a check.
template <class F>
class SpanChart {
 public:
  SpanChart() = default;
  SpanChart(std::vector<Vec<F>> basis, size_t dim, const F& zero)
      : basis_(std::move(basis)), dim_(dim), zero_(zero_like(zero)) {
    if (basis_.empty()) return;
    auto b = Matrix<F>::from_columns(basis_, dim_, zero_);
    rows_ = row_reduce(b.transpose()).pivots;
    if (rows_.size() != basis_.size())
      fail(ErrorCode::InvalidArgument, "SpanChart: basis vectors are dependent");
    Matrix<F> minor(rows_.size(), rows_.size(), zero_);
    for (size_t i = 0; i < rows_.size(); ++i)
      for (size_t j = 0; j < basis_.size(); ++j) minor(i, j) = basis_[j][rows_[i]];
    minor_inverse_ = *inverse(minor);
  }

  size_t rank() const { return basis_.size(); }
  size_t dim() const { return dim_; }
  const std::vector<Vec<F>>& basis() const { return basis_; }

  std::optional<Vec<F>> coords(const Vec<F>& v) const {
    if (basis_.empty()) {
      if (is_zero_vector(v)) return Vec<F>{};
      return std::nullopt;
    }
    Vec<F> sub;
    sub.reserve(rows_.size());
    for (size_t r : rows_) sub.push_back(v[r]);
    Vec<F> c = minor_inverse_.apply(sub);
    if (embed(c) != v) return std::nullopt;
    return c;
  }
  Vec<F> embed(const Vec<F>& c) const {
    Vec<F> v(dim_, zero_);
    for (size_t j = 0; j < basis_.size(); ++j) {
      if (is_zero(c[j])) continue;
      for (size_t i = 0; i < dim_; ++i)
        if (!is_zero(basis_[j][i])) v[i] += c[j] * basis_[j][i];
    }
    return v;
  }
  bool contains(const Vec<F>& v) const { return coords(v).has_value(); }

 private:
  std::vector<Vec<F>> basis_;
  size_t dim_ = 0;
  F zero_{};
  std::vector<size_t> rows_;
  Matrix<F> minor_inverse_;
};

RatVector rat_vector(std::initializer_list<long> xs);
RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows);
std::string to_string(const RatVector& v);

// Witness vector with v^T G v < 0, or nullopt if G (symmetric) is positive
// semidefinite. Exact: symmetric Gaussian elimination with rational pivots.
std::optional<RatVector> negative_direction(const RatMatrix& gram);

}  // namespace eala
