#include "rgcone/pell.hpp"

#include "rgcone/errors.hpp"

namespace rgcone {

namespace {

void check_radicand(const Integer& D) {
  if (D < 2) throw Error(ErrorCode::InvalidArgument, "D must be at least 2");
  if (is_perfect_square(D)) throw Error(ErrorCode::PerfectSquare, "D is a perfect square");
  for (Integer p = 2; p * p <= D; ++p)
    if (D % (p * p) == 0) throw Error(ErrorCode::NotSquarefree, "D is not squarefree");
}

// Last convergent of the first period: norm (-1)^period.
PellSolution period_convergent(const Integer& D) {
  auto [a0, period] = sqrt_continued_fraction(D);
  Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (std::size_t i = 0; i + 1 < period.size(); ++i) {
    Integer pn = period[i] * p + p_prev;
    Integer qn = period[i] * q + q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
  }
  return {D, p, q, period.size() % 2 ? -1 : 1};
}

}  // namespace

std::pair<Integer, std::vector<Integer>> sqrt_continued_fraction(const Integer& D) {
  check_radicand(D);
  const Integer a0 = isqrt(D);
  Integer m = 0, d = 1, a = a0;
  std::vector<Integer> period;
  // The period of sqrt(D) ends exactly when a = 2 a0.
  do {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    period.push_back(a);
  } while (a != 2 * a0);
  return {a0, period};
}

PellSolution fundamental_solution(const Integer& D) {
  PellSolution s = period_convergent(D);
  if (s.norm == -1) {
    Integer x = s.x * s.x + D * s.y * s.y;
    Integer y = 2 * s.x * s.y;
    s = {D, x, y, 1};
  }
  return s;
}

std::optional<PellSolution> negative_solution(const Integer& D) {
  PellSolution s = period_convergent(D);
  if (s.norm == -1) return s;
  return std::nullopt;
}

std::pair<Integer, Integer> unit_power(const PellSolution& sol, long k) {
  Integer bx = sol.x, by = k < 0 ? Integer(-sol.y) : sol.y;
  if (k < 0 && sol.norm == -1) {
    bx = -bx;
    by = -by;
  }
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer rx = 1, ry = 0;
  while (e) {
    if (e & 1) {
      Integer nx = rx * bx + sol.D * ry * by;
      ry = rx * by + ry * bx;
      rx = nx;
    }
    e >>= 1;
    if (e) {
      Integer nx = bx * bx + sol.D * by * by;
      by = 2 * bx * by;
      bx = nx;
    }
  }
  return {rx, ry};
}

std::pair<Rational, Rational> fundamental_norm_one_unit(const Integer& D) {
  PellSolution s = fundamental_solution(D);
  if (D % 4 == 1) {
    // A half-integral unit e = (T + V sqrt D)/2 of norm 1 has e^3 with
    // rational part (T^3 - 3T)/2; solve T^3 - 3T = 2x.
    Integer lo = 3, hi = 3;
    while (hi * hi * hi - 3 * hi < 2 * s.x) hi *= 2;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (mid * mid * mid - 3 * mid < 2 * s.x) lo = mid + 1;
      else hi = mid;
    }
    const Integer T = lo;
    if (T * T * T - 3 * T == 2 * s.x && (T * T - 4) % D == 0) {
      Integer v2 = (T * T - 4) / D;
      if (is_perfect_square(v2)) {
        Integer V = isqrt(v2);
        Rational a(T, 2), b(V, 2);
        a.canonicalize();
        b.canonicalize();
        // cube must reproduce (x, y)
        Rational a2 = a * a + D * b * b, b2 = 2 * a * b;
        Rational a3 = a2 * a + D * b2 * b, b3 = a2 * b + b2 * a;
        if (a3 == Rational(s.x) && b3 == Rational(s.y)) return {a, b};
      }
    }
  }
  return {Rational(s.x), Rational(s.y)};
}

std::pair<long, QMatrix> smallest_integral_power(const FMatrix& U, long cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be positive");
  if (!U.square()) throw Error(ErrorCode::DimensionMismatch, "power of non-square matrix");
  if (det(U).is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  FMatrix P = U;
  for (long k = 1; k <= cap; ++k) {
    if (auto q = to_rational(P); q && is_integral(*q)) return {k, *q};
    P = P * U;
  }
  throw Error(ErrorCode::CapExceeded, "no integral power up to " + std::to_string(cap));
}

}  // namespace rgcone
