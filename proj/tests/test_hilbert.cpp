#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "rgcone/errors.hpp"
#include "rgcone/hilbert.hpp"

using namespace rgcone;

namespace {

// Irreducible cone points in the box [-B, B]^n, by increasing grading.
std::vector<IVec> brute_hilbert(const RationalCone& c, std::int64_t B) {
  const std::size_t n = c.dim();
  std::vector<IVec> pts;
  IVec z(n, -B);
  while (true) {
    if (std::any_of(z.begin(), z.end(), [](auto v) { return v != 0; }) && c.contains(z)) pts.push_back(z);
    std::size_t i = 0;
    while (i < n && z[i] == B) z[i++] = -B;
    if (i == n) break;
    ++z[i];
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [&](const IVec& a, const IVec& b) { return idot(c.grading(), a) < idot(c.grading(), b); });
  std::vector<IVec> irr;
  for (const auto& p : pts) {
    bool red = false;
    for (const auto& h : irr) {
      IVec d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = p[k] - h[k];
      if (c.contains(d)) {
        red = true;
        break;
      }
    }
    if (!red) irr.push_back(p);
  }
  std::sort(irr.begin(), irr.end());
  return irr;
}

IVec sum_of(const std::vector<std::pair<IVec, std::int64_t>>& terms, std::size_t n) {
  IVec s(n, 0);
  for (const auto& [v, k] : terms)
    for (std::size_t i = 0; i < n; ++i) s[i] += k * v[i];
  return s;
}

std::vector<IVec> random_generators(std::mt19937_64& rng, int dim, int count) {
  std::uniform_int_distribution<int> e(-9, 9), last(1, 9);
  std::vector<IVec> g;
  for (int i = 0; i < count; ++i) {
    IVec v(dim);
    for (int k = 0; k + 1 < dim; ++k) v[k] = e(rng);
    v[dim - 1] = last(rng);
    g.push_back(v);
  }
  return g;
}

}  // namespace

TEST_CASE("parallelepiped points") {
  CHECK(parallelepiped_points({{0, 1}, {2, 3}}) == std::vector<IVec>{{0, 0}, {1, 2}});
  CHECK(parallelepiped_points({{1, 0}, {0, 1}}) == std::vector<IVec>{{0, 0}});
  CHECK(parallelepiped_points({{1, 0}, {1, 4}}) == std::vector<IVec>{{0, 0}, {1, 1}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(parallelepiped_points({{1, 2}, {2, 4}}), Error);
  CHECK(parallelepiped_points_serial({{1, 0}, {1, 4}}) == parallelepiped_points({{1, 0}, {1, 4}}));
}

TEST_CASE("hilbert bases of small cones") {
  RationalCone a({{0, 1}, {2, 3}});
  CHECK(hilbert_basis(a).elements == std::vector<IVec>{{0, 1}, {1, 2}, {2, 3}});
  RationalCone b({{1, 0}, {0, 1}});
  CHECK(hilbert_basis(b).elements == std::vector<IVec>{{0, 1}, {1, 0}});
  RationalCone c({{1, 0}, {1, 4}});
  CHECK(hilbert_basis(c).elements == std::vector<IVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(brute_hilbert(a, 10) == hilbert_basis(a).elements);
  CHECK(brute_hilbert(c, 10) == hilbert_basis(c).elements);
  CHECK_THROWS_AS(RationalCone({{1, 0}, {-1, 0}, {0, 1}}), Error);
  // non-extreme and repeated generators are dropped
  RationalCone d({{2, 0}, {1, 1}, {0, 3}, {1, 0}});
  CHECK(d.rays().size() == 2);
  CHECK(d.is_simple());
}

TEST_CASE("decompose_nonneg") {
  RationalCone a({{0, 1}, {2, 3}});
  auto hb = hilbert_basis(a);
  using T = std::vector<std::pair<IVec, std::int64_t>>;
  CHECK(decompose_nonneg(hb, a, {2, 3}) == T{{{2, 3}, 1}});
  CHECK(decompose_nonneg(hb, a, {2, 4}) == T{{{1, 2}, 2}});
  CHECK(decompose_nonneg(hb, a, {3, 5}) == T{{{1, 2}, 1}, {{2, 3}, 1}});
  CHECK(decompose_nonneg(hb, a, {0, 0}).empty());
  CHECK_THROWS_AS(decompose_nonneg(hb, a, {1, 1}), Error);
}

TEST_CASE("triangulation covers non-simple cones") {
  RationalCone sq({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  CHECK_FALSE(sq.is_simple());
  CHECK(sq.triangulation().size() == 2);
  CHECK(hilbert_basis(sq).elements.size() == 5);  // four rays and (0,0,1)
}

TEST_CASE("random cones against brute force") {
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 50) {
    int dim = 2 + tested % 2;
    int count = dim == 2 ? 2 : 3 + (tested / 2) % 2;
    auto gens = random_generators(rng, dim, count);
    std::unique_ptr<RationalCone> c;
    try {
      c = std::make_unique<RationalCone>(gens);
    } catch (const Error&) {
      continue;
    }
    auto hb = hilbert_basis(*c);
    CHECK(hb.elements == brute_hilbert(*c, 30));
    CHECK(hb.elements == hilbert_basis_serial(*c).elements);
    ++tested;
  }
}

TEST_CASE("decomposition round trip and irreducibility") {
  std::mt19937_64 rng(77);
  std::vector<RationalCone> cones{RationalCone({{0, 1}, {2, 3}}), RationalCone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}),
                                  RationalCone({{1, 0, 0}, {0, 0, 1}, {0, 2, 3}}), RationalCone({{3, -2, 5}, {-4, 1, 7}, {2, 5, 3}})};
  int checked = 0;
  for (const auto& c : cones) {
    auto hb = hilbert_basis(c);
    for (const auto& e : hb.elements) {
      CHECK(c.contains(e));
      // no element is a combination of the others: its decomposition is itself
      auto d = decompose_nonneg(hb, c, e);
      CHECK(d.size() == 1);
      CHECK(d[0].second == 1);
    }
    std::uniform_int_distribution<std::int64_t> u(-40, 40);
    int local = 0;
    while (local < 125) {
      IVec x(c.dim());
      for (auto& v : x) v = u(rng);
      if (!c.contains(x)) continue;
      auto d = decompose_nonneg(hb, c, x);
      CHECK(sum_of(d, c.dim()) == x);
      for (const auto& t : d) CHECK(t.second > 0);
      ++local;
    }
    checked += local;
  }
  CHECK(checked == 500);
}
