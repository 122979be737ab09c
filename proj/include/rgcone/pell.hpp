#pragma once

// Pell equations x^2 - D y^2 = +-1 and powers of quadratic units.

#include <optional>
#include <utility>
#include <vector>

#include "rgcone/algebraic.hpp"
#include "rgcone/matrix.hpp"

namespace rgcone {

struct PellSolution {
  Integer D;
  Integer x;
  Integer y;
  int norm = 1;
};

/// Partial quotients of one period of the continued fraction of sqrt(D)
/// (a0 first, then the periodic block).
std::pair<Integer, std::vector<Integer>> sqrt_continued_fraction(const Integer& D);

/// Minimal positive solution of x^2 - D y^2 = 1.
/// Throws PerfectSquare or NotSquarefree.
PellSolution fundamental_solution(const Integer& D);

/// Minimal positive solution of x^2 - D y^2 = -1, if one exists.
std::optional<PellSolution> negative_solution(const Integer& D);

/// Coefficients of (x + y sqrt D)^k.  Negative k is allowed for norm +-1.
std::pair<Integer, Integer> unit_power(const PellSolution& sol, long k);

/// Generator of the norm +1 units of the maximal order of Q(sqrt D),
/// greater than 1, as a + b sqrt(D) (a, b may be half-integers when
/// D = 1 mod 4).
std::pair<Rational, Rational> fundamental_norm_one_unit(const Integer& D);

/// Least 1 <= k <= cap with U^k integer; throws CapExceeded otherwise.
std::pair<long, QMatrix> smallest_integral_power(const FMatrix& U, long cap = 64);

}  // namespace rgcone
