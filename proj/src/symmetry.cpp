#include "rgcone/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "rgcone/errors.hpp"
#include "rgcone/pell.hpp"

namespace rgcone {

const char* to_string(GroupClass g) {
  switch (g) {
    case GroupClass::Trivial: return "trivial";
    case GroupClass::Z2: return "Z2";
    case GroupClass::Z: return "Z";
    case GroupClass::InfiniteDihedral: return "infinite_dihedral";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::FGCertified: return "FG_certified";
    case Status::NotFGCertified: return "notFG_certified";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

namespace {

int context_degree(const ContextPtr& ctx) { return ctx ? ctx->degree() : 1; }

ContextPtr rays_context(const std::vector<FVector>& rays) {
  for (const auto& r : rays)
    for (const auto& x : r)
      if (x.context()) return x.context();
  return nullptr;
}

bool is_rational_vector(const FVector& v) {
  return std::all_of(v.begin(), v.end(), [](const AlgebraicNumber& x) { return x.is_rational(); });
}

// Primitive integer representative of a rational direction.
ZVector primitive(const FVector& v) {
  auto q = to_rational(v).value();
  Integer l = 1, g = 0;
  for (auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVector z(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational s = q[i] * l;
    z[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  for (auto& x : z) x /= g;
  return z;
}

// Entry-wise maximum of |a_ij|.
Rational max_entry(const QMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, Rational(::abs(m(i, j))));
  return best;
}

bool lex_less(const QMatrix& a, const QMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

// True when Q u1 = mu u2 with mu > 0.
bool maps_positively(const QMatrix& q, const FVector& from, const FVector& to) {
  FVector img = to_field(q) * from;
  std::size_t k = 0;
  while (k < to.size() && to[k].is_zero()) ++k;
  AlgebraicNumber m = img[k] / to[k];
  for (std::size_t i = 0; i < to.size(); ++i)
    if (img[i] != m * to[i]) return false;
  return m.sign() > 0;
}

bool is_switcher(const QMatrix& q, const FVector& u1, const FVector& u2) {
  return is_integral(q) && q * q == QMatrix::identity(2) && maps_positively(q, u1, u2);
}

Verdict make_verdict(Status s, std::string tag, std::string reason) {
  Verdict v;
  v.status = s;
  v.reason_tag = std::move(tag);
  v.reason = std::move(reason);
  return v;
}

FVector eigenvalues_of(const QMatrix& a, const std::vector<FVector>& rays) {
  FMatrix f = to_field(a);
  FVector ev;
  for (const auto& r : rays) ev.push_back(eigenvalue_on(f, r).value());
  return ev;
}

// Linear system for E_C(Q): unknown entries A(k, j) at index k*n + j.
QMatrix eigen_system(const std::vector<FVector>& rays) {
  const std::size_t n = rays.at(0).size();
  const int deg = context_degree(rays_context(rays));
  std::vector<QVector> rows;
  for (const auto& u : rays)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) {
        // (A u)_k u_l - (A u)_l u_k = 0
        std::vector<AlgebraicNumber> coef(n * n, AlgebraicNumber(0));
        for (std::size_t j = 0; j < n; ++j) {
          coef[k * n + j] += u[j] * u[l];
          coef[l * n + j] -= u[j] * u[k];
        }
        for (int c = 0; c < deg; ++c) {
          QVector row(n * n);
          bool any = false;
          for (std::size_t v = 0; v < n * n; ++v) {
            row[v] = coef[v].coeff(c);
            any = any || row[v] != 0;
          }
          if (any) rows.push_back(std::move(row));
        }
      }
  QMatrix m(rows.size(), n * n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n * n; ++j) m(i, j) = rows[i][j];
  return m;
}

QMatrix reshape(const QVector& v, std::size_t n) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
  return a;
}

// Eigenvalue vector of a rational matrix on the rays; nullopt when some ray
// is not an eigenvector.
std::optional<FVector> eigen_vector_of(const QMatrix& a, const std::vector<FVector>& rays) {
  FMatrix f = to_field(a);
  FVector ev;
  for (const auto& r : rays) {
    auto l = eigenvalue_on(f, r);
    if (!l) return std::nullopt;
    ev.push_back(*l);
  }
  return ev;
}

bool distinct(const FVector& v, const std::vector<bool>& use) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (use[i] && use[j] && v[i] == v[j]) return false;
  return true;
}

// A matrix in span(basis) with distinct positive eigenvalues on all rays,
// found by aiming the eigenvalues at 1, 2, ..., n and rounding.
std::optional<QMatrix> generating_matrix(const std::vector<QMatrix>& basis, const Cone& c) {
  const std::size_t n = static_cast<std::size_t>(c.dim());
  if (basis.size() != n || !c.is_simple()) return std::nullopt;
  std::vector<FVector> lam;
  for (const auto& b : basis) lam.push_back(eigen_vector_of(b, c.rays()).value());
  // Solve sum_j c_j lam[j][i] = i + 1 in floating point.
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = lam[j][i].to_double();
    m[i][n] = static_cast<double>(i + 1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[p][col])) p = r;
    std::swap(m[p], m[col]);
    if (std::fabs(m[col][col]) < 1e-300) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  const std::vector<bool> all(n, true);
  for (long denom : {1L << 10, 1L << 20, 1L << 30, 1L << 40}) {
    QMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational cj(static_cast<long>(std::llround(m[j][n] / m[j][j] * static_cast<double>(denom))), denom);
      cj.canonicalize();
      a = a + cj * basis[j];
    }
    auto ev = eigen_vector_of(a, c.rays());
    if (!ev) continue;
    bool pos = std::all_of(ev->begin(), ev->end(), [](const AlgebraicNumber& x) { return x.sign() > 0; });
    if (pos && distinct(*ev, all)) return a;
  }
  return std::nullopt;
}

template <bool Parallel>
std::vector<QMatrix> search_impl(const Cone& c, long bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "negative bound");
  if (bound > 10) throw Error(ErrorCode::BoundTooLarge, "entry bound above 10");
  if (c.kind() != ConeKind::Pointed) throw Error(ErrorCode::InvalidArgument, "search needs a pointed cone");
  const std::size_t n = static_cast<std::size_t>(c.dim());
  QMatrix sys = eigen_system(c.rays());
  auto piv = rref(sys);
  std::vector<bool> is_pivot(n * n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < n * n; ++v)
    if (!is_pivot[v]) free.push_back(v);
  const std::size_t nf = free.size();
  const long width = 2 * bound + 1;
  std::vector<std::vector<QMatrix>> found(static_cast<std::size_t>(width));

  auto scan = [&](long first) {
    std::vector<long> x(nf, -bound);
    if (nf == 0) return;
    x[0] = first;
    while (true) {
      QVector entries(n * n);
      for (std::size_t k = 0; k < nf; ++k) entries[free[k]] = x[k];
      bool ok = true;
      for (std::size_t r = 0; r < piv.size() && ok; ++r) {
        Rational s = 0;
        for (std::size_t k = 0; k < nf; ++k) s -= sys(r, free[k]) * x[k];
        if (s.get_den() != 1 || ::abs(s) > bound) ok = false;
        entries[piv[r]] = s;
      }
      if (ok) {
        QMatrix a = reshape(entries, n);
        Rational d = det(a);
        if (d == 1 || d == -1) {
          FMatrix f = to_field(a);
          for (const auto& u : c.rays()) {
            auto l = eigenvalue_on(f, u);
            if (!l || l->sign() <= 0) {
              ok = false;
              break;
            }
          }
          if (ok) found[static_cast<std::size_t>(first + bound)].push_back(std::move(a));
        }
      }
      std::size_t i = 1;
      while (i < nf && x[i] == bound) x[i++] = -bound;
      if (i >= nf) break;
      ++x[i];
    }
  };

  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long f = -bound; f <= bound; ++f) scan(f);
  } else {
    for (long f = -bound; f <= bound; ++f) scan(f);
  }
  std::vector<QMatrix> out;
  for (auto& v : found)
    for (auto& a : v) out.push_back(std::move(a));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

std::pair<Integer, Rational> squarefree_split(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::InvalidArgument, "squarefree_split needs a positive value");
  Integer m = x.get_num() * x.get_den();
  if (m > Integer("1000000000000000000")) throw Error(ErrorCode::InvalidArgument, "value too large to factor");
  Integer D = 1, s = 1;
  // Trial division to the cube root leaves at most two prime factors.
  for (Integer p = 2; p * p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) D *= p;
    for (int i = 0; i < e / 2; ++i) s *= p;
  }
  if (m > 1) {
    if (is_perfect_square(m))
      s *= isqrt(m);
    else
      D *= m;
  }
  Rational f(s, x.get_den());
  f.canonicalize();
  return {D, f};
}

std::pair<Integer, AlgebraicNumber> quadratic_sqrt(const ContextPtr& ctx) {
  if (!ctx || ctx->degree() != 2) throw Error(ErrorCode::NotQuadratic, "context is not quadratic");
  const Rational q = ctx->minpoly()[0], p = ctx->minpoly()[1];
  auto [D, f] = squarefree_split(p * p - 4 * q);
  AlgebraicNumber t = AlgebraicNumber::generator(ctx);
  return {D, (2 * t + p) / f};
}

std::vector<QMatrix> eigen_subspace(const std::vector<FVector>& rays) {
  if (rays.empty()) throw Error(ErrorCode::InvalidArgument, "no rays");
  const std::size_t n = rays[0].size();
  std::vector<QMatrix> out;
  for (const auto& v : nullspace(eigen_system(rays))) out.push_back(reshape(v, n));
  return out;
}

std::optional<AlgebraicNumber> eigenvalue_on(const FMatrix& a, const FVector& u) {
  if (!a.square() || a.cols() != u.size()) return std::nullopt;
  std::size_t k = 0;
  while (k < u.size() && u[k].is_zero()) ++k;
  if (k == u.size()) return std::nullopt;
  FVector img = a * u;
  AlgebraicNumber l = img[k] / u[k];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (img[i] != l * u[i]) return std::nullopt;
  return l;
}

bool SuppliedReport::necessary_ok() const {
  return square && integral && unimodular && non_identity && positive &&
         std::all_of(eigen.begin(), eigen.end(), [](bool b) { return b; });
}

bool SuppliedReport::sufficient_ok() const { return necessary_ok() && distinct_irrational; }

// ---------------------------------------------------------------------------

std::optional<QMatrix> find_fixing_matrix_2d(const Cone& c, long cap, UnitInfo* info) {
  if (c.dim() != 2 || c.kind() != ConeKind::Pointed) throw Error(ErrorCode::InvalidArgument, "planar pointed cone expected");
  const auto& u1 = c.rays()[0];
  const auto& u2 = c.rays()[1];
  // A rational ray forces eigenvalue 1 there; det 1 then forces A = I.
  if (is_rational_vector(u1) || is_rational_vector(u2)) return std::nullopt;
  AlgebraicNumber s1 = u1[1] / u1[0], s2 = u2[1] / u2[0];
  AlgebraicNumber sum = s1 + s2, prod = s1 * s2;
  // Both slopes must be roots of one rational quadratic.
  if (!sum.is_rational() || !prod.is_rational()) return std::nullopt;
  const Rational p = -sum.rational_value(), q = prod.rational_value();
  auto [D, f] = squarefree_split(p * p - 4 * q);
  if (D == 1) throw Error(ErrorCode::InvalidArgument, "irrational slopes with a square discriminant");
  auto [a, b] = fundamental_norm_one_unit(D);
  // N has eigenvectors (1, s) with eigenvalue s.
  QMatrix N{{0, 1}, {-q, -p}};
  QMatrix A = (a + b * p / f) * QMatrix::identity(2) + Rational(2 * b / f) * N;
  auto [k, Ak] = smallest_integral_power(to_field(A), cap);
  if (Ak(0, 1) < 0) Ak = inverse(Ak);
  if (info) *info = UnitInfo{D, a, b, k};
  return Ak;
}

std::optional<QMatrix> find_switcher_2d(const Cone& c, long cap) {
  if (c.dim() != 2 || c.kind() != ConeKind::Pointed) throw Error(ErrorCode::InvalidArgument, "planar pointed cone expected");
  const auto& u1 = c.rays()[0];
  const auto& u2 = c.rays()[1];
  const bool r1 = is_rational_vector(u1), r2 = is_rational_vector(u2);
  if (r1 != r2) return std::nullopt;
  if (r1) {
    // An integral unimodular map sends primitive vectors to primitive ones.
    ZVector p1 = primitive(u1), p2 = primitive(u2);
    QMatrix from{{Rational(p1[0]), Rational(p2[0])}, {Rational(p1[1]), Rational(p2[1])}};
    QMatrix to{{Rational(p2[0]), Rational(p1[0])}, {Rational(p2[1]), Rational(p1[1])}};
    QMatrix q = to * inverse(from);
    if (is_switcher(q, u1, u2)) return q;
    return std::nullopt;
  }

  // Q = [[a, b], [c, -a]] with (Q u1) ^ u2 = 0, unknowns ordered (c, a, b).
  const AlgebraicNumber &x1 = u1[0], &y1 = u1[1], &x2 = u2[0], &y2 = u2[1];
  const std::vector<AlgebraicNumber> coef{-x1 * x2, x1 * y2 + y1 * x2, y1 * y2};
  const int deg = context_degree(c.context());
  QMatrix sys(deg, 3);
  for (int k = 0; k < deg; ++k)
    for (int j = 0; j < 3; ++j) sys(k, j) = coef[j].coeff(k);
  auto ns = nullspace(sys);
  auto build = [](const Rational& a, const Rational& b, const Rational& cc) { return QMatrix{{a, b}, {cc, -a}}; };

  if (ns.size() == 1) {
    const auto& v = ns[0];
    Rational norm = v[1] * v[1] + v[2] * v[0];
    if (norm <= 0) return std::nullopt;
    Rational inv = 1 / norm;
    if (!is_perfect_square(inv.get_num()) || !is_perfect_square(inv.get_den())) return std::nullopt;
    Rational t(isqrt(inv.get_num()), isqrt(inv.get_den()));
    for (Rational s : {t, Rational(-t)}) {
      QMatrix q = build(s * v[1], s * v[2], s * v[0]);
      if (is_switcher(q, u1, u2)) return q;
    }
    return std::nullopt;
  }
  if (ns.size() != 2) return std::nullopt;

  // c = alpha a + beta b.
  Matrix<Rational> r = sys;
  auto piv = rref(r);
  if (piv.empty() || piv[0] != 0) throw Error(ErrorCode::InvalidArgument, "switcher system without pivot on c");
  const Rational alpha = -r(0, 1), beta = -r(0, 2);

  // Closed forms for slopes s1, s2, each tried with both signs.
  const AlgebraicNumber s1 = y1 / x1, s2 = y2 / x2;
  std::vector<QMatrix> closed;
  if ((s1 * s2) == AlgebraicNumber(1)) closed.push_back(QMatrix{{0, 1}, {1, 0}});
  if (auto t = s1 + s2; t.is_integer()) closed.push_back(QMatrix{{1, 0}, {t.rational_value(), -1}});
  if (auto t = s1.inverse() + s2.inverse(); t.is_integer()) closed.push_back(QMatrix{{1, -t.rational_value()}, {0, -1}});
  for (const auto& q : closed)
    for (Rational s : {Rational(1), Rational(-1)}) {
      QMatrix cand = s * q;
      if (is_switcher(cand, u1, u2)) return cand;
    }

  // Switchers form a coset Q A^k, so one has its scale in [l0^-1/2, l0^1/2]
  // where l0 is the larger eigenvalue of the fixing generator.  Then
  // |b| = |mu - 1/mu| / |s1 - s2| < sqrt(l0) / |s1 - s2|.
  auto A = find_fixing_matrix_2d(c, cap);
  if (!A) return std::nullopt;
  double l0 = std::max(eigenvalue_on(to_field(*A), u1)->to_double(), eigenvalue_on(to_field(*A), u2)->to_double());
  double gap = std::fabs((s1 - s2).to_double());
  long B = static_cast<long>(std::floor(std::sqrt(l0) / gap)) + 2;
  std::optional<QMatrix> best;
  for (long bi = -B; bi <= B; ++bi) {
    Rational b = bi;
    // a^2 + alpha b a + (beta b^2 - 1) = 0
    Rational disc = alpha * alpha * b * b - 4 * (beta * b * b - 1);
    if (disc < 0 || !is_perfect_square(disc.get_num()) || !is_perfect_square(disc.get_den())) continue;
    Rational sq(isqrt(disc.get_num()), isqrt(disc.get_den()));
    for (Rational root : {sq, Rational(-sq)}) {
      Rational a = (-alpha * b + root) / 2;
      QMatrix q = build(a, b, alpha * a + beta * b);
      if (!is_switcher(q, u1, u2)) continue;
      if (!best || max_entry(q) < max_entry(*best) || (max_entry(q) == max_entry(*best) && lex_less(q, *best))) best = q;
    }
  }
  return best;
}

SymmetryCertificate classify_group_2d(const Cone& c, long cap) {
  SymmetryCertificate cert;
  UnitInfo info;
  auto A = find_fixing_matrix_2d(c, cap, &info);
  auto Q = find_switcher_2d(c, cap);
  if (A) {
    cert.generators.push_back(*A);
    cert.eigenvalues.push_back(eigenvalues_of(*A, c.rays()));
    cert.units.push_back(info);
  }
  if (Q) {
    cert.switchers.push_back(*Q);
    if (A && *Q * *A * *Q != inverse(*A)) throw Error(ErrorCode::InvalidArgument, "switcher does not invert the generator");
  }
  cert.group_class = A ? (Q ? GroupClass::InfiniteDihedral : GroupClass::Z) : (Q ? GroupClass::Z2 : GroupClass::Trivial);
  return cert;
}

Verdict decide_2d(const Cone& c, long cap) {
  if (c.all_rays_rational()) {
    auto v = make_verdict(Status::FGCertified, "rational_rays", "all extreme rays are rational");
    v.certificate = classify_group_2d(c, cap);
    return v;
  }
  SymmetryCertificate cert;
  try {
    cert = classify_group_2d(c, cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    auto v = make_verdict(Status::Unknown, "power_cap_exceeded", "no integral unit power within the cap");
    v.warnings.push_back(e.what());
    return v;
  }
  if (!cert.generators.empty()) {
    auto v = make_verdict(Status::FGCertified, "fixing_matrix",
                          "both rays are eigenvectors with positive eigenvalues of a non-identity unimodular matrix");
    v.certificate = cert;
    return v;
  }
  auto rat = c.ray_rationality();
  Verdict v = (rat[0] || rat[1])
                  ? make_verdict(Status::NotFGCertified, "rational_ray_forces_identity",
                                 "a rational ray has eigenvalue 1, so det 1 forces the identity")
                  : make_verdict(Status::NotFGCertified, "slopes_not_conjugate",
                                 "the ray slopes are not the two roots of one rational quadratic");
  v.certificate = cert;
  return v;
}

Verdict decide_halfspace(const Cone& c, long cap) {
  if (c.kind() != ConeKind::Halfspace) throw Error(ErrorCode::InvalidArgument, "half-plane expected");
  const FVector& r = c.rays()[0];
  if (is_rational_vector(r)) {
    auto v = make_verdict(Status::FGCertified, "rational_boundary", "the boundary line is rational");
    v.certificate = SymmetryCertificate{};
    return v;
  }
  AlgebraicNumber s = r[1] / r[0];
  // s^2 = -p s - q for rational p, q?
  const int deg = context_degree(c.context());
  AlgebraicNumber s2 = s * s;
  QMatrix sys(deg, 3);
  for (int k = 0; k < deg; ++k) {
    sys(k, 0) = AlgebraicNumber(1).coeff(k);
    sys(k, 1) = s.coeff(k);
    sys(k, 2) = s2.coeff(k);
  }
  auto ns = nullspace(sys);
  if (ns.empty() || ns[0][2] == 0)
    return make_verdict(Status::NotFGCertified, "boundary_not_quadratic",
                        "the boundary slope has degree above two, so no rational matrix fixes it");
  const Rational p = ns[0][1] / ns[0][2];
  AlgebraicNumber conj = AlgebraicNumber(-p) - s;
  Cone pair = Cone::pointed(c.context(), {FVector{1, s}, FVector{1, conj}});
  UnitInfo info;
  std::optional<QMatrix> A;
  try {
    A = find_fixing_matrix_2d(pair, cap, &info);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    auto v = make_verdict(Status::Unknown, "power_cap_exceeded", "no integral unit power within the cap");
    v.warnings.push_back(e.what());
    return v;
  }
  if (!A) throw Error(ErrorCode::InvalidArgument, "conjugate pair without a fixing matrix");
  SymmetryCertificate cert;
  cert.generators.push_back(*A);
  cert.eigenvalues.push_back(eigenvalues_of(*A, c.rays()));
  cert.units.push_back(info);
  auto v = make_verdict(Status::FGCertified, "fixing_matrix",
                        "the boundary is an eigenvector with positive eigenvalue of a det 1 unimodular matrix");
  v.certificate = cert;
  return v;
}

std::optional<SymmetryCertificate> pair_unit_generators(const Cone& c, long cap) {
  if (c.kind() != ConeKind::Pointed || !c.is_simple()) return std::nullopt;
  const auto& rays = c.rays();
  const std::size_t n = rays.size();
  auto rat = c.ray_rationality();
  SymmetryCertificate cert;
  if (std::all_of(rat.begin(), rat.end(), [](bool b) { return b; })) return cert;
  if (context_degree(c.context()) != 2) return std::nullopt;
  auto [D, e] = quadratic_sqrt(c.context());
  auto [ua, ub] = fundamental_norm_one_unit(D);
  const AlgebraicNumber eta = AlgebraicNumber(ua) + AlgebraicNumber(ub) * e;
  const AlgebraicNumber eta_bar = AlgebraicNumber(ua) - AlgebraicNumber(ub) * e;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (rat[i] || used[i]) continue;
    FVector cj;
    for (const auto& x : rays[i]) cj.push_back(x.conjugate());
    FVector neg = scaled(cj, AlgebraicNumber(-1));
    std::size_t j = i + 1;
    while (j < n && (used[j] || rat[j] || (rays[j] != cj && rays[j] != neg))) ++j;
    if (j == n) return std::nullopt;
    used[i] = used[j] = true;
    FVector lam(n, AlgebraicNumber(1));
    // Put the larger unit on the first ray of the pair.
    const bool big = eta.sign() > 0 && (eta - AlgebraicNumber(1)).sign() > 0;
    lam[i] = big ? eta : eta_bar;
    lam[j] = big ? eta_bar : eta;
    FMatrix A = matrix_from_eigenbasis(c.ray_matrix(), lam);
    auto [k, Ak] = smallest_integral_power(A, cap);
    cert.generators.push_back(Ak);
    cert.eigenvalues.push_back(eigenvalues_of(Ak, rays));
    cert.units.push_back(UnitInfo{D, ua, ub, k});
  }
  return cert;
}

SuppliedReport verify_supplied(const Cone& c, const QMatrix& a) {
  SuppliedReport r;
  const std::size_t n = static_cast<std::size_t>(c.dim());
  r.square = a.square() && a.rows() == n;
  if (!r.square) return r;
  r.integral = is_integral(a);
  r.unimodular = is_unimodular(a);
  r.non_identity = a != QMatrix::identity(n);
  FMatrix f = to_field(a);
  r.positive = true;
  for (const auto& u : c.rays()) {
    auto l = eigenvalue_on(f, u);
    r.eigen.push_back(l.has_value());
    r.eigenvalues.push_back(l.value_or(AlgebraicNumber(0)));
    if (!l || l->sign() <= 0) r.positive = false;
  }
  bool all_eigen = std::all_of(r.eigen.begin(), r.eigen.end(), [](bool b) { return b; });
  auto rat = c.ray_rationality();
  std::vector<bool> irr(rat.size());
  for (std::size_t i = 0; i < rat.size(); ++i) irr[i] = !rat[i];
  r.distinct_irrational = all_eigen && distinct(r.eigenvalues, irr);
  return r;
}

namespace {

// Shared tail for dimension three and above once the cone is known to be
// simple with a rational eigen-subspace.
Verdict certify_sufficient(const Cone& c, const std::vector<QMatrix>& basis, const DecideOptions& opt,
                           std::string tag, std::string reason) {
  auto v = make_verdict(Status::FGCertified, std::move(tag), std::move(reason));
  SymmetryCertificate cert;
  try {
    if (auto p = pair_unit_generators(c, opt.power_cap)) cert = *p;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    v.warnings.push_back(e.what());
  }
  if (cert.generators.empty()) {
    auto rat = c.ray_rationality();
    std::vector<bool> irr(rat.size());
    for (std::size_t i = 0; i < rat.size(); ++i) irr[i] = !rat[i];
    for (const auto& m : search_eigen_symmetry(c, std::min(opt.search_bound, 10L))) {
      auto ev = eigen_vector_of(m, c.rays()).value();
      if (m != QMatrix::identity(m.rows()) && distinct(ev, irr)) {
        cert.generators.push_back(m);
        cert.eigenvalues.push_back(ev);
        break;
      }
    }
    if (cert.generators.empty()) v.warnings.push_back("no unimodular generator constructed; certificate is a generating matrix");
  }
  if (auto g = generating_matrix(basis, c)) {
    cert.generating_matrix = *g;
    cert.generating_eigenvalues = eigen_vector_of(*g, c.rays());
  } else {
    throw Error(ErrorCode::InvalidArgument, "rational eigen-subspace without a generating matrix");
  }
  v.certificate = cert;
  return v;
}

std::optional<Verdict> try_supplied(const Cone& c, const DecideOptions& opt, Verdict* note) {
  if (!opt.supplied) return std::nullopt;
  auto rep = verify_supplied(c, *opt.supplied);
  if (rep.sufficient_ok() && c.is_simple()) {
    auto v = make_verdict(Status::FGCertified, "supplied_matrix",
                          "the supplied unimodular matrix has every ray as eigenvector with distinct positive eigenvalues");
    SymmetryCertificate cert;
    cert.generators.push_back(*opt.supplied);
    cert.eigenvalues.push_back(rep.eigenvalues);
    v.certificate = cert;
    return v;
  }
  note->warnings.push_back("supplied matrix rejected");
  return std::nullopt;
}

}  // namespace

Verdict decide_3d(const Cone& c, const DecideOptions& opt) {
  if (c.dim() != 3 || c.kind() != ConeKind::Pointed) throw Error(ErrorCode::InvalidArgument, "3D pointed cone expected");
  if (c.all_rays_rational()) {
    auto v = make_verdict(Status::FGCertified, "rational_rays", "all extreme rays are rational");
    v.certificate = SymmetryCertificate{};
    return v;
  }
  if (!c.is_simple())
    return make_verdict(Status::NotFGCertified, "not_simple", "an irrational pointed 3D cone must be simple");
  Verdict note;
  if (auto v = try_supplied(c, opt, &note)) return *v;
  auto basis = eigen_subspace(c.rays());
  if (basis.size() < 3) {
    auto v = make_verdict(Status::NotFGCertified, "eigen_subspace_not_rational",
                          "the rational matrices with these eigenrays form a space of dimension " +
                              std::to_string(basis.size()) + " < 3, so none has distinct eigenvalues");
    v.warnings = note.warnings;
    return v;
  }
  auto v = certify_sufficient(c, basis, opt, "eigen_subspace_rational",
                              "a rational matrix with these eigenrays and distinct positive eigenvalues exists");
  v.warnings.insert(v.warnings.begin(), note.warnings.begin(), note.warnings.end());
  return v;
}

Verdict decide(const Cone& c, const DecideOptions& opt) {
  if (c.kind() == ConeKind::Halfspace) return decide_halfspace(c, opt.power_cap);
  if (c.dim() == 2) return decide_2d(c, opt.power_cap);
  if (c.dim() == 3) return decide_3d(c, opt);
  if (c.all_rays_rational()) {
    auto v = make_verdict(Status::FGCertified, "rational_rays", "all extreme rays are rational");
    v.certificate = SymmetryCertificate{};
    return v;
  }
  Verdict note;
  auto basis = eigen_subspace(c.rays());
  if (basis.size() == 1)
    return make_verdict(Status::NotFGCertified, "only_scalar_symmetries",
                        "only scalar matrices have these eigenrays, so no non-identity symmetry exists");
  if (auto v = try_supplied(c, opt, &note)) return *v;
  if (c.is_simple() && basis.size() == static_cast<std::size_t>(c.dim())) {
    auto v = certify_sufficient(c, basis, opt, "eigen_subspace_rational",
                                "simple cone with a rational matrix having distinct positive eigenvalues on its rays");
    v.warnings.insert(v.warnings.begin(), note.warnings.begin(), note.warnings.end());
    return v;
  }
  auto v = make_verdict(Status::Unknown, "dim4_undecided", "dim >= 4 undecided");
  v.warnings = note.warnings;
  auto found = search_eigen_symmetry(c, std::min(opt.search_bound, 10L));
  if (found.size() > 1)
    v.warnings.push_back("necessary condition holds: a non-identity symmetry exists within entry bound " +
                         std::to_string(opt.search_bound));
  else
    v.warnings.push_back("no non-identity symmetry within entry bound " + std::to_string(opt.search_bound));
  return v;
}

std::vector<QMatrix> search_eigen_symmetry(const Cone& c, long bound) { return search_impl<true>(c, bound); }
std::vector<QMatrix> search_eigen_symmetry_serial(const Cone& c, long bound) { return search_impl<false>(c, bound); }

}  // namespace rgcone
