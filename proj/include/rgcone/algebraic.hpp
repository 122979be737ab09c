#pragma once

// Exact real algebraic numbers of degree <= 4.
//
// A FieldContext fixes a monic irreducible integer polynomial p(t) and a
// rational interval isolating one of its real roots.  An AlgebraicNumber is
// a polynomial in t of degree < deg p with rational coefficients, read as
// its value at that root.  Numbers without a context are plain rationals
// and combine with numbers of any context.

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rgcone {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial, coefficients in ascending degree order.
using Polynomial = std::vector<Rational>;

namespace poly {

void trim(Polynomial& p);
int degree(const Polynomial& p);  // -1 for the zero polynomial
Rational eval(const Polynomial& p, const Rational& x);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);
/// Remainder of a divided by b (b nonzero).
Polynomial rem(const Polynomial& a, const Polynomial& b);
/// Number of distinct real roots in (lo, hi], via a Sturm sequence.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);
std::string to_string(const Polynomial& p, const char* var = "t");

}  // namespace poly

struct RationalInterval {
  Rational lo;
  Rational hi;
};

class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

class FieldContext {
 public:
  /// minpoly in ascending order, monic, 1 <= degree <= 4, irreducible over Q.
  /// (lo, hi) must isolate exactly one real root.  Throws InvalidContext.
  static ContextPtr make(std::vector<Integer> minpoly, Rational lo, Rational hi);

  /// Q(sqrt(D)) with the positive root selected.  D squarefree, D >= 2.
  static ContextPtr sqrt(const Integer& D);

  /// Degree-one context t - 0.
  static ContextPtr rational();

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<Integer>& minpoly() const { return minpoly_; }
  const Polynomial& minpoly_q() const { return minpoly_q_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_quadratic_sqrt() const { return quadratic_sqrt_; }
  /// D for contexts t^2 - D; zero otherwise.
  const Integer& radicand() const { return radicand_; }

  bool same_as(const FieldContext& other) const;

  /// Isolating interval of width <= 2^-bits.  Degree-one contexts return the
  /// exact root as a point interval.
  RationalInterval root_enclosure(unsigned bits) const;

 private:
  FieldContext() = default;
  void bisect(RationalInterval& iv) const;

  std::vector<Integer> minpoly_;
  Polynomial minpoly_q_;
  Rational lo_;
  Rational hi_;
  RationalInterval refined_;  // width <= 2^-64, computed once
  bool quadratic_sqrt_ = false;
  Integer radicand_ = 0;
};

class AlgebraicNumber {
 public:
  AlgebraicNumber() : coeffs_{Rational(0)} {}
  AlgebraicNumber(long v) : coeffs_{Rational(v)} {}  // NOLINT(implicit)
  AlgebraicNumber(int v) : coeffs_{Rational(v)} {}   // NOLINT(implicit)
  AlgebraicNumber(const Integer& v) : coeffs_{Rational(v)} {}  // NOLINT(implicit)
  AlgebraicNumber(const Rational& v) : coeffs_{v} { coeffs_[0].canonicalize(); }  // NOLINT(implicit)
  AlgebraicNumber(ContextPtr ctx, std::vector<Rational> coeffs);

  /// The designated root t itself.
  static AlgebraicNumber generator(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of t^i (zero beyond the stored degree).
  Rational coeff(std::size_t i) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  /// Throws InvalidArgument when the value is irrational.
  Rational rational_value() const;

  int sign() const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber conjugate() const;

  /// Interval containing the value, obtained from a root enclosure of
  /// width 2^-bits.
  RationalInterval enclose(unsigned bits) const;
  double to_double() const;
  Integer floor() const;
  /// Rational within 2^-bits of the value.
  Rational approximate(unsigned bits) const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o);

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }
  /// Ordering of real values.
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (a - b).sign() < 0; }
  friend bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return b < a; }
  friend bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(b < a); }
  friend bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a < b); }

  std::string to_string() const;

 private:
  static ContextPtr join(const ContextPtr& a, const ContextPtr& b);
  void promote(const ContextPtr& ctx);
  void reduce();

  ContextPtr ctx_;
  std::vector<Rational> coeffs_;  // size deg(ctx), or 1 without context
};

int sign(const AlgebraicNumber& x);
/// a + b sqrt(D) -> a - b sqrt(D).  Throws NotQuadratic for other contexts.
AlgebraicNumber galois_conjugate(const AlgebraicNumber& x);
AlgebraicNumber abs(const AlgebraicNumber& x);
AlgebraicNumber pow(const AlgebraicNumber& x, long k);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

}  // namespace rgcone
