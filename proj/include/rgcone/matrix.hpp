#pragma once

// Dense exact matrices over Q or over a FieldContext.

#include <optional>
#include <string>
#include <vector>

#include "rgcone/algebraic.hpp"
#include "rgcone/errors.hpp"

namespace rgcone {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const AlgebraicNumber& x) { return x.is_zero(); }

template <class T>
using Vec = std::vector<T>;
using QVector = Vec<Rational>;
using FVector = Vec<AlgebraicNumber>;
using ZVector = std::vector<Integer>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& r : init) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<T>>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<T> column(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vec<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!is_zero(x[j])) y[i] += a(i, j) * x[j];
    return y;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using FMatrix = Matrix<AlgebraicNumber>;

// ---------------------------------------------------------------------------

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> scaled(const Vec<T>& v, const T& s) {
  Vec<T> r = v;
  for (auto& x : r) x *= s;
  return r;
}

template <class T>
bool is_zero_vector(const Vec<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

/// Fraction-free Bareiss determinant over Q.
Rational det(const QMatrix& m);
/// Gaussian elimination determinant over a field context.
AlgebraicNumber det(const FMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right nullspace {x : m x = 0}; one vector per free column,
/// with that free coordinate equal to 1.
template <class T>
std::vector<Vec<T>> nullspace(Matrix<T> m) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
Vec<T> solve(const Matrix<T>& m, const Vec<T>& b) {
  if (!m.square() || b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  Vec<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

/// Monic characteristic polynomial det(tI - M), ascending coefficients.
/// Faddeev-LeVerrier; n <= 4.
template <class T>
Vec<T> charpoly(const Matrix<T>& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
  const std::size_t n = m.rows();
  if (n > 4) throw Error(ErrorCode::DimensionTooLarge, "charpoly supports n <= 4");
  Vec<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> Mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Mk = m * Mk;
    for (std::size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k + 1];
    Matrix<T> AM = m * Mk;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / T(static_cast<long>(k));
  }
  return c;
}

/// Evaluates a polynomial (ascending coefficients) at a square matrix.
template <class T>
Matrix<T> eval_poly(const Vec<T>& p, const Matrix<T>& m) {
  Matrix<T> acc(m.rows(), m.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, long k) {
  Matrix<T> base = k < 0 ? inverse(m) : m;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Matrix<T> r = Matrix<T>::identity(m.rows());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

/// A = U diag(lambda) U^-1 with the eigen relations checked exactly.
FMatrix matrix_from_eigenbasis(const FMatrix& U, const FVector& lambda);

bool is_unimodular(const QMatrix& m);
bool is_unimodular(const FMatrix& m);
/// Exact check of M u = lambda u.
bool verify_eigen(const FMatrix& m, const FVector& u, const AlgebraicNumber& lambda);

/// Entry-wise conversion when every entry is rational.
std::optional<QMatrix> to_rational(const FMatrix& m);
FMatrix to_field(const QMatrix& m);
FVector to_field(const QVector& v);
std::optional<QVector> to_rational(const FVector& v);

bool is_integral(const QMatrix& m);

std::string to_string(const QMatrix& m);
std::string to_string(const FMatrix& m);

}  // namespace rgcone
