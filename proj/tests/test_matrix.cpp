#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rgcone/matrix.hpp"

using namespace rgcone;

namespace {

// Cofactor expansion, used as an independent determinant.
Rational det_cofactor(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Rational term = m(0, j) * det_cofactor(minor);
    s += (j % 2 ? -term : term);
  }
  return s;
}

QMatrix random_q(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j).canonicalize();
  return m;
}

}  // namespace

TEST_CASE("determinant and inverse") {
  QMatrix a{{3, 2}, {4, 3}};
  CHECK(det(a) == 1);
  CHECK(det(QMatrix{{2, 5}, {7, 18}}) == 1);
  QMatrix ai = inverse(a);
  CHECK(ai == QMatrix{{3, -2}, {-4, 3}});
  CHECK(ai * a == QMatrix::identity(2));
  CHECK_THROWS_AS(inverse(QMatrix{{1, 2}, {2, 4}}), Error);
  CHECK(det(QMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(QMatrix{{0, 0}, {1, 0}}) == 0);
}

TEST_CASE("charpoly") {
  CHECK(charpoly(QMatrix{{3, 2}, {4, 3}}) == QVector{1, -6, 1});
  CHECK(charpoly(QMatrix::identity(3)) == QVector{-1, 3, -3, 1});
  CHECK(charpoly(QMatrix{{2, 5}, {7, 18}}) == QVector{1, -20, 1});
  CHECK_THROWS_AS(charpoly(QMatrix::identity(5)), Error);
}

TEST_CASE("matrix from eigenbasis") {
  auto s2 = FieldContext::sqrt(2);
  auto r2 = AlgebraicNumber::generator(s2);
  FMatrix U = FMatrix::from_columns({{1, r2}, {-1, r2}});
  FMatrix A = matrix_from_eigenbasis(U, {3 + 2 * r2, 3 - 2 * r2});
  CHECK(to_rational(A).value() == QMatrix{{3, 2}, {4, 3}});
  CHECK(matrix_from_eigenbasis(U, {1, 1}) == FMatrix::identity(2));

  auto s3 = FieldContext::sqrt(3);
  auto r3 = AlgebraicNumber::generator(s3);
  FMatrix U3 = FMatrix::from_columns({{1, r3}, {-1, r3}});
  FMatrix A3 = matrix_from_eigenbasis(U3, {2 + r3, 2 - r3});
  CHECK(to_rational(A3).value() == QMatrix{{2, 1}, {3, 2}});
}

TEST_CASE("unimodularity and eigen checks") {
  QMatrix q{{Rational(13, 7), Rational(-5, 7)}, {Rational(24, 7), Rational(-13, 7)}};
  CHECK_FALSE(is_unimodular(q));
  CHECK(det(q) == -1);
  CHECK(is_unimodular(QMatrix::identity(3)));
  auto s2 = FieldContext::sqrt(2);
  auto r2 = AlgebraicNumber::generator(s2);
  CHECK(verify_eigen(to_field(QMatrix{{3, 2}, {4, 3}}), {1, r2}, 3 + 2 * r2));
  CHECK_FALSE(verify_eigen(to_field(QMatrix{{3, 2}, {4, 3}}), {1, r2}, 3 - 2 * r2));
}

TEST_CASE("random properties: solve, Cayley-Hamilton, Bareiss vs cofactor") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + it % 4;
    QMatrix m = random_q(rng, n);
    CHECK(det(m) == det_cofactor(m));
    CHECK(eval_poly(charpoly(m), m) == QMatrix(n, n));
    CHECK(charpoly(m)[0] == (n % 2 ? -det(m) : det(m)));
    if (det(m) != 0) {
      QVector b(n);
      for (auto& x : b) x = Rational(static_cast<long>(rng() % 11) - 5);
      QVector x = solve(m, b);
      CHECK(m * x == b);
      CHECK(inverse(m) * m == QMatrix::identity(n));
    }
  }
}

TEST_CASE("eigenbasis round trip in a quadratic field") {
  std::mt19937_64 rng(5);
  auto s5 = FieldContext::sqrt(5);
  auto r = AlgebraicNumber::generator(s5);
  std::uniform_int_distribution<long> c(-4, 4);
  int done = 0;
  for (int it = 0; it < 100 && done < 40; ++it) {
    FMatrix U(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) U(i, j) = c(rng) + c(rng) * r;
    if (det(U).is_zero()) continue;
    FVector lam{c(rng) + c(rng) * r, c(rng) + r, AlgebraicNumber(c(rng))};
    FMatrix A = matrix_from_eigenbasis(U, lam);
    for (std::size_t j = 0; j < 3; ++j) CHECK(verify_eigen(A, U.column(j), lam[j]));
    CHECK(det(A) == lam[0] * lam[1] * lam[2]);
    ++done;
  }
  CHECK(done == 40);
}
