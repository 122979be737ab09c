#include "rgcone/matrix.hpp"

#include <sstream>

namespace rgcone {

Rational det(const QMatrix& m0) {
  if (!m0.square()) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, run Bareiss over Z, then divide back.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m0(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m0(i, j).get_num() * (l / m0(i, j).get_den());
    scale *= l;
  }
  int s = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return Rational(s * a[n - 1][n - 1]) / scale;
}

AlgebraicNumber det(const FMatrix& m0) {
  if (!m0.square()) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
  FMatrix m = m0;
  const std::size_t n = m.rows();
  AlgebraicNumber d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return AlgebraicNumber(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    AlgebraicNumber inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      AlgebraicNumber f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

FMatrix matrix_from_eigenbasis(const FMatrix& U, const FVector& lambda) {
  if (!U.square() || lambda.size() != U.rows())
    throw Error(ErrorCode::DimensionMismatch, "eigenbasis and eigenvalue count differ");
  const std::size_t n = U.rows();
  FMatrix UD = U;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) UD(i, j) *= lambda[j];
  FMatrix A = UD * inverse(U);
  for (std::size_t j = 0; j < n; ++j)
    if (!verify_eigen(A, U.column(j), lambda[j]))
      throw Error(ErrorCode::SingularMatrix, "eigen relation failed after assembly");
  return A;
}

bool is_integral(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

bool is_unimodular(const QMatrix& m) {
  if (!m.square() || !is_integral(m)) return false;
  Rational d = det(m);
  return d == 1 || d == -1;
}

bool is_unimodular(const FMatrix& m) {
  auto q = to_rational(m);
  return q && is_unimodular(*q);
}

bool verify_eigen(const FMatrix& m, const FVector& u, const AlgebraicNumber& lambda) {
  if (m.cols() != u.size() || !m.square()) return false;
  FVector mu = m * u;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (mu[i] != lambda * u[i]) return false;
  return true;
}

std::optional<QMatrix> to_rational(const FMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      q(i, j) = m(i, j).rational_value();
    }
  return q;
}

std::optional<QVector> to_rational(const FVector& v) {
  QVector q;
  for (const auto& x : v) {
    if (!x.is_rational()) return std::nullopt;
    q.push_back(x.rational_value());
  }
  return q;
}

FMatrix to_field(const QMatrix& m) {
  FMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = AlgebraicNumber(m(i, j));
  return f;
}

FVector to_field(const QVector& v) {
  FVector f;
  for (const auto& x : v) f.emplace_back(x);
  return f;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string to_string(const FMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace rgcone
