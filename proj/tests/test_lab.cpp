#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "rgcone/errors.hpp"
#include "rgcone/lab.hpp"
#include "rgcone/symmetry.hpp"

using namespace rgcone;

namespace {

ZVector Z(std::initializer_list<long> v) {
  ZVector z;
  for (auto x : v) z.push_back(Integer(x));
  return z;
}

// Independent oracle: fixed-width integers, exhaustive over x, y <= z.
std::set<std::array<long, 3>> fermat_oracle(int k, long z_max) {
  std::set<std::array<long, 3>> out;
  auto p = [k](long v) {
    unsigned __int128 r = 1;
    for (int i = 0; i < 2 * k; ++i) r *= static_cast<unsigned __int128>(v);
    return r;
  };
  for (long z = 1; z <= z_max; ++z)
    for (long x = 0; x <= z; ++x)
      for (long y = 0; y <= z; ++y)
        if (p(x) + p(y) == p(z)) out.insert({x, y, z});
  return out;
}

std::set<std::array<long, 3>> as_set(const FermatScanResult& r) {
  std::set<std::array<long, 3>> out;
  for (const auto& h : r.hits) out.insert({h[0].get_si(), h[1].get_si(), h[2].get_si()});
  return out;
}

}  // namespace

TEST_CASE("fermat boundary scan") {
  auto one = fermat_scan(2, 1);
  CHECK(as_set(one) == std::set<std::array<long, 3>>{{0, 1, 1}, {1, 0, 1}});

  auto r2 = fermat_scan(2, 100);
  CHECK(r2.only_trivial());
  CHECK(r2.hits.size() == 200);
  CHECK(as_set(fermat_scan(2, 40)) == fermat_oracle(2, 40));
  CHECK(as_set(fermat_scan(3, 20)) == fermat_oracle(3, 20));

  auto r3 = fermat_scan(3, 50);
  CHECK(r3.only_trivial());
  CHECK(as_set(r3) == as_set(fermat_scan_serial(3, 50)));

  CHECK_THROWS_AS(fermat_scan(1, 10), Error);
  CHECK_THROWS_AS(fermat_scan(2, 10001), Error);
}

TEST_CASE("four dimensional cones") {
  FMatrix M = four_dim_rays();
  QMatrix A = four_dim_block();
  const AlgebraicNumber s = M(1, 0);
  const AlgebraicNumber up = 3 + 2 * s, down = 3 - 2 * s;
  FMatrix Af = to_field(A);
  for (std::size_t j = 0; j < 4; ++j) CHECK(verify_eigen(Af, M.column(j), j < 2 ? up : down));
  CHECK_FALSE(det(M).is_zero());

  // r4 = (u1 + u2 + u4) / 2
  FVector r4 = M * FVector{Rational(1, 2), Rational(1, 2), 0, Rational(1, 2)};
  CHECK(r4 == FVector{1, 0, 1, 0});
  // r1 = u1/2 + u3/2 + u4
  CHECK(M * FVector{Rational(1, 2), 0, Rational(1, 2), 1} == FVector{1, 0, 0, 0});

  Cone c = build_4d_cone();
  CHECK(c.is_simple());
  CHECK(c.ray_matrix() == M);
  Cone sub = build_4d_subcone();
  CHECK(sub.is_simple());
  CHECK(sub.contains(FVector{1, s, 1, s}));

  // the only symmetries in a small box are powers of the block matrix
  auto found = search_eigen_symmetry(sub, 4);
  std::vector<QMatrix> expect;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      QMatrix B{{x, y, 0, 0}, {2 * y, x, 0, 0}, {0, 0, x, y}, {0, 0, 2 * y, x}};
      if (x * x - 2 * y * y == 1 && x > 0) expect.push_back(B);
    }
  std::sort(found.begin(), found.end(), [](const QMatrix& p, const QMatrix& q) { return to_string(p) < to_string(q); });
  std::sort(expect.begin(), expect.end(), [](const QMatrix& p, const QMatrix& q) { return to_string(p) < to_string(q); });
  CHECK(found == expect);
  CHECK(found.size() == 3);
}

TEST_CASE("family points") {
  auto f0 = family_point(0);
  CHECK(f0.all_passed());
  CHECK(f0.v == Z({0, 1, -1, 2}));
  CHECK(f0.a[1] == -1);
  CHECK(f0.b[1] == 2);
  CHECK(f0.a[0] == 0);
  CHECK(f0.b[0] == 1);

  AlgebraicNumber prev = f0.ratio;
  for (long n = 1; n <= 10; ++n) {
    auto f = family_point(n);
    INFO("n1 = " << n);
    for (const auto& [name, ok] : f.checks) {
      INFO(name);
      CHECK(ok);
    }
    CHECK(f.ratio > prev);  // grows without bound
    prev = f.ratio;
  }
  CHECK(prev.to_double() > 1e7);

  CHECK_THROWS_AS(family_point(-1), Error);
  try {
    family_point(21);
    FAIL("expected IndexTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexTooLarge);
  }
}

TEST_CASE("no boundary vector can be subtracted") {
  for (long n = 0; n <= 10; ++n) {
    auto r = check_non_subtractable(family_point(n));
    INFO("n1 = " << n);
    CHECK(r.non_subtractable);
    CHECK(r.product_argument);
  }
  // doubling the point leaves room for s = 1/2
  FVector twice;
  for (const auto& a : family_point(0).alpha) twice.push_back(2 * a);
  auto r = check_non_subtractable(twice);
  CHECK_FALSE(r.non_subtractable);
  CHECK(std::find(r.subtractable.begin(), r.subtractable.end(), std::pair<long, long>{1, 0}) != r.subtractable.end());
}

TEST_CASE("boundary forms") {
  auto forms = boundary_forms();
  REQUIRE(forms.size() == 4);
  FMatrix M = four_dim_rays();
  auto beta = forms[1].beta(1, 0);
  CHECK(beta == FVector{Rational(1, 2), 0, Rational(1, 2), 1});
  CHECK(M * beta == FVector{1, 0, 0, 0});
  CHECK(M * forms[0].beta(0, 0) == FVector{0, 0, 0, 0});
  FVector x = M * forms[3].beta(1, 0);
  CHECK(std::all_of(x.begin(), x.end(), [](const AlgebraicNumber& v) { return v.is_integer(); }));
  CHECK(cross_validate_boundary_forms(5));
}
