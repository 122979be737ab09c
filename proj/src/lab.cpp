#include "rgcone/lab.hpp"

#include <algorithm>

#include "rgcone/errors.hpp"

namespace rgcone {

namespace {

std::vector<std::array<Integer, 3>> scan_z(long k, long z) {
  std::vector<std::array<Integer, 3>> out;
  const unsigned long e = static_cast<unsigned long>(2 * k);
  Integer zp, xp, rest, y;
  mpz_ui_pow_ui(zp.get_mpz_t(), static_cast<unsigned long>(z), e);
  for (long x = 0; x <= z; ++x) {
    mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x), e);
    rest = zp - xp;
    if (mpz_root(y.get_mpz_t(), rest.get_mpz_t(), e) != 0) out.push_back({Integer(x), y, Integer(z)});
  }
  return out;
}

void check_scan_args(long k, long z_max) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "exponent parameter k must be at least 2");
  if (z_max > 10000) throw Error(ErrorCode::BoundTooLarge, "z_max above 10^4");
}

AlgebraicNumber root2() { return AlgebraicNumber::generator(FieldContext::sqrt(2)); }

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

AlgebraicNumber half(const AlgebraicNumber& x) { return x * AlgebraicNumber(Rational(1, 2)); }

}  // namespace

bool FermatScanResult::only_trivial() const {
  return std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h[0] == 0 || h[1] == 0; });
}

FermatScanResult fermat_scan(long k, long z_max) {
  check_scan_args(k, z_max);
  FermatScanResult r{k, z_max, {}};
  std::vector<std::vector<std::array<Integer, 3>>> per_z(static_cast<std::size_t>(std::max(z_max, 0L)));
#pragma omp parallel for schedule(dynamic)
  for (long z = 1; z <= z_max; ++z) per_z[static_cast<std::size_t>(z - 1)] = scan_z(k, z);
  for (auto& h : per_z) r.hits.insert(r.hits.end(), h.begin(), h.end());
  return r;
}

FermatScanResult fermat_scan_serial(long k, long z_max) {
  check_scan_args(k, z_max);
  FermatScanResult r{k, z_max, {}};
  for (long z = 1; z <= z_max; ++z) {
    auto h = scan_z(k, z);
    r.hits.insert(r.hits.end(), h.begin(), h.end());
  }
  return r;
}

FMatrix four_dim_rays() {
  const AlgebraicNumber s = root2();
  return FMatrix{{1, 0, -1, 1}, {s, 0, s, -s}, {0, 1, -2, 1}, {0, s, 2 * s, -s}};
}

QMatrix four_dim_block() {
  return QMatrix{{3, 2, 0, 0}, {4, 3, 0, 0}, {0, 0, 3, 2}, {0, 0, 4, 3}};
}

Cone build_4d_cone() {
  FMatrix M = four_dim_rays();
  std::vector<FVector> u;
  for (std::size_t j = 0; j < 4; ++j) u.push_back(M.column(j));
  return Cone::pointed(M(1, 0).context(), u);
}

Cone build_4d_subcone() {
  FMatrix M = four_dim_rays();
  std::vector<FVector> u;
  for (std::size_t j = 0; j < 4; ++j) u.push_back(M.column(j));
  auto add = [](FVector x, const FVector& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  };
  return Cone::pointed(M(1, 0).context(), {u[0], add(u[0], u[1]), u[2], add(u[2], u[3])});
}

bool FamilyCheck::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

FamilyCheck family_point(long n1) {
  if (n1 < 0) throw Error(ErrorCode::InvalidArgument, "family index must be nonnegative");
  if (n1 > 20) throw Error(ErrorCode::IndexTooLarge, "family index above 20");
  const AlgebraicNumber s = root2();
  const long e = 2 * n1 + 1;
  FamilyCheck f;
  f.n1 = n1;
  AlgebraicNumber a2 = half(pow(s - 1, e));
  AlgebraicNumber a4 = AlgebraicNumber(Rational(1, 2));
  AlgebraicNumber a1 = half(a2 + a4.conjugate());
  AlgebraicNumber a3 = half(a4 - a2.conjugate());
  f.alpha = {a1, a2, a3, a4};

  bool coords_integral = true;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational ai = 2 * f.alpha[i].coeff(0), bi = 4 * f.alpha[i].coeff(1);
    coords_integral = coords_integral && ai.get_den() == 1 && bi.get_den() == 1;
    f.a[i] = ai.get_num();
    f.b[i] = bi.get_num();
  }
  f.checks["coordinates_quarter_integral"] = coords_integral;
  f.checks["lattice_relations"] =
      a3 == a1.conjugate() - a2.conjugate() && a4 == 2 * a1.conjugate() - a2.conjugate();

  FVector Mv = four_dim_rays() * f.alpha;
  bool integral = std::all_of(Mv.begin(), Mv.end(), [](const AlgebraicNumber& x) { return x.is_integer(); });
  f.checks["integral"] = integral;
  if (integral)
    for (const auto& x : Mv) f.v.push_back(x.rational_value().get_num());
  if (integral && coords_integral) {
    ZVector expect{(f.a[1] + f.a[3]) / 2, (f.b[1] - f.b[3]) / 2, f.a[1], f.b[1]};
    f.checks["closed_form_point"] = f.v == expect && f.v == ZVector{f.a[0], f.b[0], f.a[1], f.b[1]};
  } else {
    f.checks["closed_form_point"] = false;
  }
  f.checks["in_open_cone"] =
      std::all_of(f.alpha.begin(), f.alpha.end(), [](const AlgebraicNumber& x) { return x.sign() > 0; });
  f.checks["a2_odd"] = mpz_odd_p(f.a[1].get_mpz_t()) != 0;
  f.checks["b2_even"] = mpz_even_p(f.b[1].get_mpz_t()) != 0;
  f.checks["alpha2_norm"] = a2 * a2.conjugate() == AlgebraicNumber(Rational(-1, 4));
  AlgebraicNumber prod = a1 * a4;
  f.checks["alpha1_alpha4_below_quarter"] =
      prod == half(half(a2)) + AlgebraicNumber(Rational(1, 8)) && prod < AlgebraicNumber(Rational(1, 4));
  f.checks["alpha2_at_most_alpha1"] = a2.sign() > 0 && a2 <= a1;

  f.ratio = a1 / a2;
  f.checks["ratio_closed_form"] = f.ratio == AlgebraicNumber(Rational(1, 2)) + half(pow(s + 1, e));

  // Eigen-ratios survive the block matrix.
  if (integral) {
    Cone c = build_4d_cone();
    QVector Av = four_dim_block() * QVector(f.v.begin(), f.v.end());
    FVector beta = c.eigen_coordinates(Av);
    f.checks["ratio_invariant_under_block"] = beta[0] / beta[1] == a1 / a2 && beta[2] / beta[3] == a3 / a4;
  } else {
    f.checks["ratio_invariant_under_block"] = false;
  }
  return f;
}

SubtractionReport check_non_subtractable(const FVector& alpha) {
  if (alpha.size() != 4) throw Error(ErrorCode::DimensionMismatch, "four eigen-coordinates expected");
  const AlgebraicNumber s2 = root2();
  const AlgebraicNumber& a1 = alpha[0];
  const AlgebraicNumber& a3 = alpha[2];
  const AlgebraicNumber& a4 = alpha[3];
  SubtractionReport r;
  // a = s + conj s lies in [0, alpha1 + alpha4 / 2]
  // b = sqrt2 (s - conj s) lies in [-sqrt2 alpha1, sqrt2 alpha4 / 2]
  r.a_min = 0;
  r.a_max = (a1 + half(a4)).floor().get_si();
  r.b_min = (-(s2 * a1)).floor().get_si();
  r.b_max = half(s2 * a4).floor().get_si();
  const AlgebraicNumber zero(0);
  for (long a = r.a_min; a <= r.a_max; ++a)
    for (long b = r.b_min; b <= r.b_max; ++b) {
      if (a == 0 && b == 0) continue;
      AlgebraicNumber s = AlgebraicNumber(frac(a, 2)) + s2 * AlgebraicNumber(frac(b, 4));
      AlgebraicNumber sb = s.conjugate();
      if (sb >= zero && sb <= a1 && s >= zero && s <= a3 && 2 * s <= a4) r.subtractable.emplace_back(a, b);
    }
  r.non_subtractable = r.subtractable.empty();

  bool trivial_only = true;
  for (long a = r.a_min; a <= r.a_max; ++a)
    for (long b = r.b_min; b <= r.b_max; ++b) {
      long q = 2 * a * a - b * b;
      if (q >= 0 && q < 1 && (a != 0 || b != 0)) trivial_only = false;
    }
  r.product_argument = a1 * a4 < AlgebraicNumber(Rational(1, 4)) && trivial_only;
  return r;
}

FVector BoundaryForm::beta(long a, long b) const {
  AlgebraicNumber s = AlgebraicNumber(frac(a, 2)) + root2() * AlgebraicNumber(frac(b, 4));
  FVector out(4);
  for (std::size_t i = 0; i < 4; ++i) out[i] = (conj[i] ? s.conjugate() : s) * AlgebraicNumber(coeff[i]);
  return out;
}

std::vector<BoundaryForm> boundary_forms() {
  return {
      {0, {0, -1, 1, 1}, {false, true, false, false}},
      {1, {1, 0, 1, 2}, {true, false, false, false}},
      {2, {1, 1, 0, 1}, {false, false, false, true}},
      {3, {1, 2, -1, 0}, {false, false, true, false}},
  };
}

bool cross_validate_boundary_forms(long range) {
  Cone c = build_4d_cone();
  LatticeConstraints lc = eigen_lattice_constraints(c);
  const FMatrix& M = c.ray_matrix();
  for (const auto& form : boundary_forms())
    for (long a = -range; a <= range; ++a)
      for (long b = -range; b <= range; ++b) {
        FVector beta = form.beta(a, b);
        if (!beta[static_cast<std::size_t>(form.zero)].is_zero()) return false;
        FVector x = M * beta;
        if (!std::all_of(x.begin(), x.end(), [](const AlgebraicNumber& v) { return v.is_integer(); })) return false;
        QVector vars;
        for (const auto& bi : beta) {
          vars.push_back(bi.coeff(0));
          vars.push_back(bi.coeff(1));
        }
        QVector irr = lc.irrational_part * vars, rat = lc.rational_part * vars;
        for (std::size_t i = 0; i < 4; ++i)
          if (irr[i] != 0 || rat[i] != x[i].rational_value()) return false;
      }
  return true;
}

}  // namespace rgcone
