#include "rgcone/algebraic.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "rgcone/errors.hpp"

namespace rgcone {

// ---------------------------------------------------------------------------
// Polynomials over Q

namespace poly {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Polynomial& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Rational eval(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

namespace {

// Quotient and remainder of a / b.
std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  const int db = degree(b);
  if (db < 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(a);
  Polynomial q(std::max<int>(0, degree(a) - db + 1), Rational(0));
  while (degree(a) >= db) {
    const int da = degree(a);
    Rational c = a[da] / b[db];
    q[da - db] = c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

Polynomial rem(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  std::vector<Polynomial> seq{p, derivative(p)};
  trim(seq[0]);
  while (degree(seq.back()) > 0) {
    Polynomial r = rem(seq[seq.size() - 2], seq.back());
    if (degree(r) < 0) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

std::string to_string(const Polynomial& p, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace poly

// ---------------------------------------------------------------------------

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

bool squarefree(const Integer& n) {
  Integer m = abs(n);
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m > Integer("1000000000000"))
    throw Error(ErrorCode::InvalidContext, "constant term too large for the irreducibility test");
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  std::vector<Integer> signed_out;
  for (const auto& d : out) {
    signed_out.push_back(d);
    signed_out.push_back(-d);
  }
  return signed_out;
}

Integer eval_int(const std::vector<Integer>& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool has_integer_root(const std::vector<Integer>& p) {
  if (p[0] == 0) return true;
  for (const auto& d : divisors(p[0]))
    if (eval_int(p, d) == 0) return true;
  return false;
}

// Monic quartic with integer coefficients: does it split into two monic
// integer quadratics?  By Gauss's lemma this is the only way it can
// factor once integer roots are excluded.
bool has_quadratic_factor(const std::vector<Integer>& p) {
  const Integer &c0 = p[0], &c1 = p[1], &c2 = p[2], &c3 = p[3];
  for (const auto& b : divisors(c0)) {
    Integer e = c0 / b;
    if (b != e) {
      Integer num = c1 - b * c3;
      Integer den = e - b;
      if (num % den != 0) continue;
      Integer a = num / den;
      Integer c = c3 - a;
      if (b + e + a * c == c2) return true;
    } else {
      if (c1 != b * c3) continue;
      Integer disc = c3 * c3 - 4 * (c2 - 2 * b);
      if (disc < 0 || !is_perfect_square(disc)) continue;
      Integer s = isqrt(disc);
      if ((c3 + s) % 2 == 0) return true;
    }
  }
  return false;
}

struct QInterval {
  Rational lo, hi;
};

QInterval imul(const QInterval& a, const QInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

QInterval horner(std::span<const Rational> c, const RationalInterval& t) {
  QInterval acc{c.back(), c.back()};
  const QInterval tt{t.lo, t.hi};
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    acc = imul(acc, tt);
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

Rational pow2_neg(unsigned bits) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

// s with s*a = 1 mod m, for a coprime to m.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  Polynomial r0 = m, r1 = a, s0{}, s1{Rational(1)};
  poly::trim(r1);
  if (poly::degree(r1) < 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  while (poly::degree(r1) > 0) {
    // q = r0 / r1
    Polynomial q, r = r0;
    const int db = poly::degree(r1);
    q.assign(std::max(0, poly::degree(r) - db + 1), Rational(0));
    while (poly::degree(r) >= db) {
      const int dr = poly::degree(r);
      Rational c = r[dr] / r1[db];
      q[dr - db] = c;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * r1[i];
      poly::trim(r);
    }
    Polynomial s2 = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (poly::degree(r1) < 0)
      throw Error(ErrorCode::InvalidContext, "minimal polynomial is not irreducible");
  }
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return poly::rem(s1, m);
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldContext

ContextPtr FieldContext::make(std::vector<Integer> minpoly, Rational lo, Rational hi) {
  lo.canonicalize();
  hi.canonicalize();
  if (minpoly.size() < 2 || minpoly.size() > 5)
    throw Error(ErrorCode::InvalidContext, "minimal polynomial degree must be between 1 and 4");
  if (minpoly.back() != 1) throw Error(ErrorCode::InvalidContext, "minimal polynomial must be monic");
  const int d = static_cast<int>(minpoly.size()) - 1;
  if (d >= 2 && has_integer_root(minpoly))
    throw Error(ErrorCode::InvalidContext, "minimal polynomial has a rational root");
  if (d == 4 && has_quadratic_factor(minpoly))
    throw Error(ErrorCode::InvalidContext, "minimal polynomial has a quadratic factor");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidContext, "root interval must satisfy lo < hi");

  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->minpoly_ = std::move(minpoly);
  for (const auto& c : ctx->minpoly_) ctx->minpoly_q_.emplace_back(c);
  ctx->lo_ = lo;
  ctx->hi_ = hi;
  const Polynomial& p = ctx->minpoly_q_;
  if (poly::eval(p, lo) == 0 || poly::eval(p, hi) == 0)
    throw Error(ErrorCode::InvalidContext, "root interval endpoint is a root");
  if (poly::sturm_count(p, lo, hi) != 1)
    throw Error(ErrorCode::InvalidContext, "root interval does not isolate exactly one real root");

  if (d == 1) {
    Rational r = -p[0];
    ctx->refined_ = {r, r};
  } else {
    RationalInterval iv{lo, hi};
    const Rational target = pow2_neg(64);
    while (iv.hi - iv.lo > target) ctx->bisect(iv);
    ctx->refined_ = iv;
  }
  if (d == 2 && ctx->minpoly_[1] == 0 && ctx->minpoly_[0] < 0) {
    Integer D = -ctx->minpoly_[0];
    if (squarefree(D)) {
      ctx->quadratic_sqrt_ = true;
      ctx->radicand_ = D;
    }
  }
  return ctx;
}

ContextPtr FieldContext::sqrt(const Integer& D) {
  if (D < 2) throw Error(ErrorCode::InvalidContext, "radicand must be at least 2");
  if (!squarefree(D)) throw Error(ErrorCode::NotSquarefree, "radicand must be squarefree");
  Integer r = isqrt(D);
  return make({-D, 0, 1}, Rational(r), Rational(r + 1));
}

ContextPtr FieldContext::rational() {
  static const ContextPtr ctx = make({0, 1}, Rational(-1), Rational(1));
  return ctx;
}

bool FieldContext::same_as(const FieldContext& other) const {
  return this == &other || (minpoly_ == other.minpoly_ && lo_ == other.lo_ && hi_ == other.hi_);
}

void FieldContext::bisect(RationalInterval& iv) const {
  Rational mid = (iv.lo + iv.hi) / 2;
  int sm = sgn(poly::eval(minpoly_q_, mid));
  if (sm == 0) {
    iv = {mid, mid};
    return;
  }
  int sl = sgn(poly::eval(minpoly_q_, iv.lo));
  if (sl * sm < 0) iv.hi = mid;
  else iv.lo = mid;
}

RationalInterval FieldContext::root_enclosure(unsigned bits) const {
  RationalInterval iv = refined_;
  const Rational target = pow2_neg(bits);
  while (iv.hi - iv.lo > target) bisect(iv);
  return iv;
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber::AlgebraicNumber(ContextPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  for (auto& c : coeffs_) c.canonicalize();
  if (!ctx_ && coeffs_.size() > 1) {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0)
        throw Error(ErrorCode::ContextMismatch, "irrational coefficients require a field context");
    coeffs_.resize(1);
  }
  reduce();
}

AlgebraicNumber AlgebraicNumber::generator(const ContextPtr& ctx) {
  return AlgebraicNumber(ctx, {Rational(0), Rational(1)});
}

void AlgebraicNumber::reduce() {
  if (!ctx_) return;
  const std::size_t d = static_cast<std::size_t>(ctx_->degree());
  if (coeffs_.size() > d) {
    Polynomial r = poly::rem(coeffs_, ctx_->minpoly_q());
    coeffs_ = std::move(r);
  }
  coeffs_.resize(d, Rational(0));
}

Rational AlgebraicNumber::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

ContextPtr AlgebraicNumber::join(const ContextPtr& a, const ContextPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  throw Error(ErrorCode::ContextMismatch, "operands live in different field contexts");
}

void AlgebraicNumber::promote(const ContextPtr& ctx) {
  if (ctx_ || !ctx) return;
  ctx_ = ctx;
  reduce();
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool AlgebraicNumber::is_rational() const {
  if (ctx_ && ctx_->degree() == 1) return true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is irrational: " + to_string());
  return coeffs_[0];
}

bool AlgebraicNumber::is_integer() const {
  return is_rational() && coeffs_[0].get_den() == 1;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  ContextPtr c = join(ctx_, o.ctx_);
  promote(c);
  if (o.ctx_ == c || !c) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeff(i);
  } else {
    AlgebraicNumber t = o;
    t.promote(c);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += t.coeffs_[i];
  }
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) { return *this += -o; }

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  ContextPtr c = join(ctx_, o.ctx_);
  if (o.is_rational() && (!o.ctx_ || o.ctx_->degree() > 1)) {
    Rational f = o.coeffs_[0];
    promote(c);
    for (auto& x : coeffs_) x *= f;
    return *this;
  }
  if (is_rational() && (!ctx_ || ctx_->degree() > 1)) {
    Rational f = coeffs_[0];
    *this = o;
    promote(c);
    for (auto& x : coeffs_) x *= f;
    return *this;
  }
  promote(c);
  AlgebraicNumber t = o;
  t.promote(c);
  Polynomial prod = poly::mul(coeffs_, t.coeffs_);
  coeffs_ = prod.empty() ? Polynomial{Rational(0)} : std::move(prod);
  reduce();
  return *this;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (!ctx_ || ctx_->degree() == 1 || is_rational()) {
    AlgebraicNumber r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t i = 1; i < r.coeffs_.size(); ++i) r.coeffs_[i] = 0;
    return r;
  }
  Polynomial a = coeffs_;
  poly::trim(a);
  Polynomial inv = inverse_mod(a, ctx_->minpoly_q());
  return AlgebraicNumber(ctx_, inv);
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= o.inverse();
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  ContextPtr c = AlgebraicNumber::join(a.ctx_, b.ctx_);
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  (void)c;
  for (std::size_t i = 0; i < n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

RationalInterval AlgebraicNumber::enclose(unsigned bits) const {
  if (is_rational()) {
    Rational v = ctx_ && ctx_->degree() == 1 ? coeffs_[0] : coeffs_[0];
    return {v, v};
  }
  RationalInterval t = ctx_->root_enclosure(bits);
  QInterval v = horner(coeffs_, t);
  return {v.lo, v.hi};
}

int AlgebraicNumber::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  // Nonzero polynomial of degree < deg p at a root of irreducible p: the
  // value is nonzero, so refinement terminates.  The first 256 bisections
  // form the fast path; continuing past them stays certified.
  RationalInterval t = ctx_->root_enclosure(0);
  for (unsigned step = 0;; ++step) {
    QInterval v = horner(coeffs_, t);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    Rational mid = (t.lo + t.hi) / 2;
    int sm = sgn(poly::eval(ctx_->minpoly_q(), mid));
    int sl = sgn(poly::eval(ctx_->minpoly_q(), t.lo));
    if (sl * sm < 0) t.hi = mid;
    else t.lo = mid;
    (void)step;
  }
}

Rational AlgebraicNumber::approximate(unsigned bits) const {
  if (is_rational()) return coeffs_[0];
  const Rational target = pow2_neg(bits);
  for (unsigned b = bits + 8;; b += 16) {
    RationalInterval iv = enclose(b);
    if (iv.hi - iv.lo <= target) {
      Rational m = (iv.lo + iv.hi) / 2;
      return m;
    }
  }
}

double AlgebraicNumber::to_double() const { return approximate(64).get_d(); }

Integer AlgebraicNumber::floor() const {
  if (is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), coeffs_[0].get_num_mpz_t(), coeffs_[0].get_den_mpz_t());
    return q;
  }
  for (unsigned b = 16;; b += 16) {
    RationalInterval iv = enclose(b);
    Integer fl, fh;
    mpz_fdiv_q(fl.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    if (fl == fh) return fl;
  }
}

AlgebraicNumber AlgebraicNumber::conjugate() const {
  if (!ctx_) return *this;
  if (ctx_->degree() != 2)
    throw Error(ErrorCode::NotQuadratic, "Galois conjugation needs a quadratic context");
  // t -> -p1 - t, the other root of t^2 + p1 t + p0.
  const Rational p1 = ctx_->minpoly_q()[1];
  return AlgebraicNumber(ctx_, {coeffs_[0] - coeffs_[1] * p1, -coeffs_[1]});
}

std::string AlgebraicNumber::to_string() const {
  Polynomial p(coeffs_.begin(), coeffs_.end());
  return poly::to_string(p, "t");
}

int sign(const AlgebraicNumber& x) { return x.sign(); }

AlgebraicNumber galois_conjugate(const AlgebraicNumber& x) { return x.conjugate(); }

AlgebraicNumber abs(const AlgebraicNumber& x) { return x.sign() < 0 ? -x : x; }

AlgebraicNumber pow(const AlgebraicNumber& x, long k) {
  AlgebraicNumber base = k < 0 ? x.inverse() : x;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  AlgebraicNumber result(1);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  if (x.context()) result += AlgebraicNumber(x.context(), {Rational(0)});
  return result;
}

}  // namespace rgcone
