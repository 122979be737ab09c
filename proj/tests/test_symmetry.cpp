#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rgcone/symmetry.hpp"

using namespace rgcone;

namespace {

struct Field {
  ContextPtr ctx;
  AlgebraicNumber r;
  explicit Field(long D) : ctx(FieldContext::sqrt(D)), r(AlgebraicNumber::generator(ctx)) {}
};

bool positive_eigen(const QMatrix& a, const std::vector<FVector>& rays) {
  for (const auto& u : rays) {
    auto l = eigenvalue_on(to_field(a), u);
    if (!l || l->sign() <= 0) return false;
  }
  return true;
}

// Every 2x2 integer matrix with entries in [-B, B], det +-1, fixing the rays
// with positive eigenvalues.  Independent of the eigen-subspace machinery.
std::vector<QMatrix> brute_gl2(const Cone& c, long B) {
  std::vector<QMatrix> out;
  for (long a = -B; a <= B; ++a)
    for (long b = -B; b <= B; ++b)
      for (long cc = -B; cc <= B; ++cc)
        for (long d = -B; d <= B; ++d) {
          long det = a * d - b * cc;
          if (det != 1 && det != -1) continue;
          QMatrix m{{a, b}, {cc, d}};
          if (positive_eigen(m, c.rays())) out.push_back(m);
        }
  return out;
}

bool max_entry_below(const QMatrix& a, long b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > b || a(i, j) < -b) return false;
  return true;
}

QMatrix block4(long x, long y) {
  return QMatrix{{x, y, 0, 0}, {2 * y, x, 0, 0}, {0, 0, x, y}, {0, 0, 2 * y, x}};
}

std::vector<FVector> section_rays(const Field& f) {
  const auto& r = f.r;
  return {{1, r, 0, 0}, {0, 0, 1, r}, {-1, r, -2, 2 * r}, {1, -r, 1, -r}};
}

}  // namespace

TEST_CASE("squarefree split and quadratic square roots") {
  CHECK(squarefree_split(Rational(8)) == std::make_pair(Integer(2), Rational(2)));
  CHECK(squarefree_split(Rational(396, 25)) == std::make_pair(Integer(11), Rational(6, 5)));
  CHECK(squarefree_split(Rational(9, 4)).first == 1);
  auto ctx = FieldContext::make({-1, -1, 1}, Rational(1), Rational(2));  // golden ratio
  auto [D, e] = quadratic_sqrt(ctx);
  CHECK(D == 5);
  CHECK(e * e == AlgebraicNumber(5));
  CHECK(e.conjugate() == -e);
}

TEST_CASE("fixing matrices of planar cones") {
  Field f2(2);
  Cone c34 = Cone::pointed(f2.ctx, {{1, f2.r}, {-1, f2.r}});
  UnitInfo info;
  CHECK(find_fixing_matrix_2d(c34, 64, &info) == QMatrix{{3, 2}, {4, 3}});
  CHECK(info.D == 2);
  CHECK(info.power == 1);

  CHECK_FALSE(find_fixing_matrix_2d(Cone::pointed(nullptr, {{2, 1}, {3, 5}})).has_value());

  Field f11(11);
  const auto& s = f11.r;
  Cone c38 = Cone::pointed(f11.ctx, {{1, (8 - 3 * s) / 5}, {1, (8 + 3 * s) / 5}});
  CHECK(find_fixing_matrix_2d(c38) == QMatrix{{2, 5}, {7, 18}});

  // a rational ray forces the identity
  CHECK_FALSE(find_fixing_matrix_2d(Cone::pointed(f2.ctx, {{1, f2.r}, {0, 1}})).has_value());
  // slopes from different quadratics
  Cone mixed = Cone::pointed(f2.ctx, {{1, f2.r}, {1, 3 * f2.r + 1}});
  CHECK_FALSE(find_fixing_matrix_2d(mixed).has_value());
}

TEST_CASE("switchers and group classes") {
  Field f2(2);
  Cone c34 = Cone::pointed(f2.ctx, {{1, f2.r}, {-1, f2.r}});
  CHECK(find_switcher_2d(c34) == QMatrix{{-1, 0}, {0, 1}});
  Cone c37 = Cone::pointed(nullptr, {{1, 1}, {-1, 1}});
  CHECK(find_switcher_2d(c37) == QMatrix{{-1, 0}, {0, 1}});
  Cone c36 = Cone::pointed(nullptr, {{2, 1}, {3, 5}});
  CHECK_FALSE(find_switcher_2d(c36).has_value());

  CHECK(classify_group_2d(c36).group_class == GroupClass::Trivial);
  CHECK(classify_group_2d(c37).group_class == GroupClass::Z2);
  Field f11(11);
  const auto& s = f11.r;
  Cone c38 = Cone::pointed(f11.ctx, {{1, (8 - 3 * s) / 5}, {1, (8 + 3 * s) / 5}});
  CHECK(classify_group_2d(c38).group_class == GroupClass::Z);
  auto cert = classify_group_2d(c34);
  CHECK(cert.group_class == GroupClass::InfiniteDihedral);
  const QMatrix& A = cert.generators[0];
  const QMatrix& Q = cert.switchers[0];
  CHECK(Q * Q == QMatrix::identity(2));
  CHECK(Q * A * Q == inverse(A));
  CHECK(cert.eigenvalues[0] == FVector{3 + 2 * f2.r, 3 - 2 * f2.r});
}

TEST_CASE("switcher found only by the bounded search") {
  // slopes (1 +- sqrt 5) / 3 match none of the closed forms
  Field f5(5);
  const auto& r = f5.r;
  Cone c = Cone::pointed(f5.ctx, {{3, 1 + r}, {3, 1 - r}});
  auto Q = find_switcher_2d(c);
  auto A = find_fixing_matrix_2d(c);
  REQUIRE(A.has_value());
  if (Q) {
    CHECK(*Q * *Q == QMatrix::identity(2));
    CHECK(*Q * *A * *Q == inverse(*A));
  }
  // Oracle: brute force over small involutions.
  bool brute = false;
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b)
      for (long cc = -12; cc <= 12; ++cc) {
        QMatrix q{{a, b}, {cc, -a}};
        if (q * q != QMatrix::identity(2)) continue;
        auto img = to_field(q) * c.rays()[0];
        FVector u2 = c.rays()[1];
        AlgebraicNumber mu = img[0] / u2[0];
        if (img[1] == mu * u2[1] && mu.sign() > 0) brute = true;
      }
  CHECK(Q.has_value() == brute);
}

TEST_CASE("planar decisions") {
  Field f2(2);
  CHECK(decide_2d(Cone::pointed(f2.ctx, {{1, f2.r}, {-1, f2.r}})).status == Status::FGCertified);
  auto rat = decide_2d(Cone::pointed(nullptr, {{1, 0}, {0, 1}}));
  CHECK(rat.status == Status::FGCertified);
  CHECK(rat.certificate->group_class.has_value());
  Cone mixed = Cone::pointed(f2.ctx, {{1, f2.r}, {0, 1}});
  auto v = decide_2d(mixed);
  CHECK(v.status == Status::NotFGCertified);
  CHECK(v.reason_tag == "rational_ray_forces_identity");
  // Oracle: nothing but the identity up to entry 50.
  auto all = brute_gl2(mixed, 50);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == QMatrix::identity(2));
}

TEST_CASE("half-planes") {
  Field f2(2), f3(3);
  CHECK(decide_halfspace(Cone::halfspace(nullptr, {1, 2})).status == Status::FGCertified);
  auto v2 = decide_halfspace(Cone::halfspace(f2.ctx, {1, f2.r}));
  CHECK(v2.status == Status::FGCertified);
  CHECK(v2.certificate->generators[0] == QMatrix{{3, 2}, {4, 3}});
  auto v3 = decide_halfspace(Cone::halfspace(f3.ctx, {1, f3.r}));
  REQUIRE(v3.status == Status::FGCertified);
  const QMatrix& A = v3.certificate->generators[0];
  CHECK(A == QMatrix{{2, 1}, {3, 2}});
  CHECK(det(A) == 1);
  auto l = eigenvalue_on(to_field(A), FVector{1, f3.r});
  REQUIRE(l.has_value());
  CHECK(l->sign() > 0);

  auto cub = FieldContext::make({-2, 0, 0, 1}, Rational(1), Rational(2));
  auto t = AlgebraicNumber::generator(cub);
  CHECK(decide_halfspace(Cone::halfspace(cub, {1, t})).status == Status::NotFGCertified);
  // slope t^2 - t satisfies no rational quadratic either; slope t + 1 of a
  // quadratic does
  auto g = FieldContext::make({-1, -1, 1}, Rational(1), Rational(2));
  auto phi = AlgebraicNumber::generator(g);
  auto vg = decide_halfspace(Cone::halfspace(g, {2, phi + 1}));
  REQUIRE(vg.status == Status::FGCertified);
  CHECK(is_unimodular(vg.certificate->generators[0]));
  CHECK(det(vg.certificate->generators[0]) == 1);
}

TEST_CASE("three dimensional decisions") {
  Field f2(2);
  const auto& r = f2.r;
  Cone blk = Cone::pointed(f2.ctx, {{1, 0, 0}, {0, 1, r}, {0, -1, r}});
  auto v = decide_3d(blk);
  REQUIRE(v.status == Status::FGCertified);
  CHECK(v.certificate->generators[0] == QMatrix{{1, 0, 0}, {0, 3, 2}, {0, 4, 3}});
  CHECK(v.certificate->eigenvalues[0] == FVector{1, 3 + 2 * r, 3 - 2 * r});

  Cone four = Cone::pointed(f2.ctx, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -r, 1}});
  CHECK(decide_3d(four).status == Status::NotFGCertified);
  CHECK(decide_3d(four).reason_tag == "not_simple");

  Cone simplex = Cone::pointed(nullptr, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(decide_3d(simplex).status == Status::FGCertified);

  // two rational rays and one irrational: every symmetry is the identity
  Cone two = Cone::pointed(f2.ctx, {{1, 0, 0}, {0, 1, 0}, {1, 1, r}});
  auto vt = decide_3d(two);
  CHECK(vt.status == Status::NotFGCertified);
  CHECK(eigen_subspace(two.rays()).size() < 3);
  // three rays over one quadratic field cannot all be eigenvectors
  Cone three = Cone::pointed(f2.ctx, {{1, r, 0}, {1, -r, 0}, {1, 1, r}});
  CHECK(decide_3d(three).status == Status::NotFGCertified);
}

TEST_CASE("totally real cubic rays") {
  // roots of t^3 - 3t + 1: r, r^2 - 2, 2 - r - r^2
  auto ctx = FieldContext::make({1, -3, 0, 1}, Rational(3, 2), Rational(2));
  auto r = AlgebraicNumber::generator(ctx);
  std::vector<AlgebraicNumber> roots{r, r * r - 2, 2 - r - r * r};
  std::vector<FVector> rays;
  for (const auto& x : roots) rays.push_back({1, x, x * x});
  Cone c = Cone::pointed(ctx, rays);
  CHECK(eigen_subspace(c.rays()).size() == 3);
  DecideOptions opt;
  opt.search_bound = 3;
  auto v = decide_3d(c, opt);
  REQUIRE(v.status == Status::FGCertified);
  REQUIRE(!v.certificate->generators.empty());
  auto rep = verify_supplied(c, v.certificate->generators[0]);
  CHECK(rep.sufficient_ok());
  REQUIRE(v.certificate->generating_matrix.has_value());
  auto rep2 = verify_supplied(c, *v.certificate->generating_matrix);
  CHECK(rep2.positive);
  CHECK(rep2.distinct_irrational);

  // without a search budget the verdict rests on the generating matrix
  auto w = decide_3d(c);
  CHECK(w.status == Status::FGCertified);
  CHECK(w.certificate->generating_matrix.has_value());

  // supplied companion square
  QMatrix comp{{0, 1, 0}, {0, 0, 1}, {-1, 3, 0}};
  DecideOptions sup;
  sup.supplied = comp * comp;
  auto vs = decide_3d(c, sup);
  CHECK(vs.status == Status::FGCertified);
  CHECK(vs.reason_tag == "supplied_matrix");
}

TEST_CASE("bounded eigen-symmetry search") {
  Field f2(2);
  Cone c34 = Cone::pointed(f2.ctx, {{1, f2.r}, {-1, f2.r}});
  auto found = search_eigen_symmetry(c34, 4);
  CHECK(std::find(found.begin(), found.end(), QMatrix{{3, 2}, {4, 3}}) != found.end());
  CHECK(found == brute_gl2(c34, 4));

  Cone c36 = Cone::pointed(nullptr, {{2, 1}, {3, 5}});
  CHECK(search_eigen_symmetry(c36, 8) == std::vector<QMatrix>{QMatrix::identity(2)});

  auto u = section_rays(f2);
  auto add = [](const FVector& a, const FVector& b) {
    FVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
  };
  Cone sub = Cone::pointed(f2.ctx, {u[0], add(u[0], u[1]), u[2], add(u[2], u[3])});
  auto subs = search_eigen_symmetry(sub, 4);
  CHECK(subs == std::vector<QMatrix>{block4(1, 0), block4(3, -2), block4(3, 2)});
  CHECK(search_eigen_symmetry_serial(sub, 4) == subs);

  CHECK_THROWS_AS(search_eigen_symmetry(c34, 11), Error);
}

TEST_CASE("supplied matrices") {
  Field f2(2);
  Cone c4 = Cone::pointed(f2.ctx, section_rays(f2));
  auto rep = verify_supplied(c4, block4(3, 2));
  CHECK(rep.unimodular);
  CHECK(rep.non_identity);
  CHECK(std::all_of(rep.eigen.begin(), rep.eigen.end(), [](bool b) { return b; }));
  CHECK(rep.positive);
  CHECK_FALSE(rep.distinct_irrational);
  CHECK(rep.necessary_ok());
  CHECK_FALSE(rep.sufficient_ok());

  Cone c34 = Cone::pointed(f2.ctx, {{1, f2.r}, {-1, f2.r}});
  CHECK(verify_supplied(c34, QMatrix{{3, 2}, {4, 3}}).sufficient_ok());
  auto id = verify_supplied(c34, QMatrix::identity(2));
  CHECK_FALSE(id.non_identity);
  CHECK_FALSE(id.sufficient_ok());
  CHECK_FALSE(verify_supplied(c34, QMatrix::identity(3)).square);
}

TEST_CASE("four dimensional dispatch") {
  Field f2(2);
  Cone c4 = Cone::pointed(f2.ctx, section_rays(f2));
  auto v = decide(c4);
  CHECK(v.status == Status::Unknown);
  CHECK(v.reason == "dim >= 4 undecided");
  CHECK(eigen_subspace(c4.rays()).size() == 2);

  const auto& r = f2.r;
  Cone prod = Cone::pointed(f2.ctx, {{1, r, 0, 0}, {1, -r, 0, 0}, {0, 0, 1, r}, {0, 0, 1, -r}});
  auto vp = decide(prod);
  REQUIRE(vp.status == Status::FGCertified);
  CHECK(vp.certificate->generators.size() == 2);
  for (const auto& g : vp.certificate->generators) CHECK(verify_supplied(prod, g).necessary_ok());

  // a single irrational ray among rational ones
  Cone lone = Cone::pointed(f2.ctx, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, r}});
  CHECK(decide(lone).status == Status::NotFGCertified);
  CHECK(decide(Cone::pointed(nullptr, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})).status ==
        Status::FGCertified);
}

TEST_CASE("random planar cones: decision against bounded search") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(-3, 3), pos(1, 3), pick(0, 3);
  const long radicands[] = {2, 3, 5, 6, 7};
  int tested = 0, fg = 0;
  while (tested < 200) {
    Field f(radicands[tested % 5]);
    auto make = [&](int kind) -> FVector {
      if (kind == 0) return {small(rng), small(rng)};
      return {pos(rng), AlgebraicNumber(small(rng)) + AlgebraicNumber(pos(rng)) * f.r};
    };
    int k = static_cast<int>(pick(rng));
    FVector u1 = make(k == 0 ? 0 : 1);
    FVector u2;
    if (k == 3) {
      u2 = {u1[0], u1[1].conjugate()};  // conjugate pair
    } else {
      u2 = make(k == 1 ? 0 : 1);
    }
    std::unique_ptr<Cone> c;
    try {
      c = std::make_unique<Cone>(Cone::pointed(f.ctx, {u1, u2}));
    } catch (const Error&) {
      continue;
    }
    ++tested;
    auto v = decide_2d(*c);
    auto found = search_eigen_symmetry(*c, 6);
    REQUIRE(!found.empty());
    if (c->all_rays_rational()) {
      CHECK(v.status == Status::FGCertified);
      CHECK(found.size() == 1);  // rational eigenrays have eigenvalue 1
      continue;
    }
    if (found.size() > 1) CHECK(v.status == Status::FGCertified);
    if (v.status != Status::FGCertified) continue;
    ++fg;
    const QMatrix& A = v.certificate->generators[0];
    // scalar matrices never appear
    CHECK(A(0, 1) != 0);
    // every bounded symmetry is a power of the generator
    for (const auto& m : found) {
      bool power_of = false;
      for (long e = -12; e <= 12 && !power_of; ++e) power_of = power(A, e) == m;
      CHECK(power_of);
    }
    if (max_entry_below(A, 6)) CHECK(std::find(found.begin(), found.end(), A) != found.end());
    for (const auto& Q : v.certificate->switchers) {
      CHECK(Q * Q == QMatrix::identity(2));
      CHECK(Q * A * Q == inverse(A));
    }
  }
  CHECK(fg > 20);
}
