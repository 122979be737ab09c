#include "rgcone/hilbert.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rgcone/errors.hpp"

namespace rgcone {

namespace {

using i128 = __int128;
using Mat = std::vector<std::vector<std::int64_t>>;  // row-major

i128 det_small(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return i128(m[0][0]) * m[1][1] - i128(m[0][1]) * m[1][0];
  i128 s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    i128 t = i128(m[0][j]) * det_small(minor);
    s += (j % 2) ? -t : t;
  }
  return s;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::CapExceeded, "integer overflow in cone data");
  return static_cast<std::int64_t>(v);
}

// h with h . x = det[v_1; ...; v_{n-1}; x]
IVec icross(const std::vector<IVec>& vs, std::size_t n) {
  IVec h(n);
  for (std::size_t k = 0; k < n; ++k) {
    Mat m;
    for (const auto& v : vs) m.push_back(v);
    std::vector<std::int64_t> e(n, 0);
    e[k] = 1;
    m.push_back(e);
    h[k] = narrow(det_small(m));
  }
  return h;
}

std::size_t irank(std::vector<IVec> rows) {
  // fraction-free elimination in i128
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::vector<i128>> a;
  for (const auto& v : rows) a.emplace_back(v.begin(), v.end());
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      i128 f = a[i][c], g = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
      // keep entries small
      i128 d = 0;
      for (std::size_t j = c; j < cols; ++j) {
        i128 v = a[i][j] < 0 ? -a[i][j] : a[i][j];
        while (v) {
          i128 t = d % v;
          d = v;
          v = t;
        }
      }
      if (d > 1)
        for (std::size_t j = c; j < cols; ++j) a[i][j] /= d;
    }
    ++r;
  }
  return r;
}

struct Scan {
  std::size_t n;
  std::vector<IVec> adj;  // adjugate rows
  std::int64_t absdet;
  int sdet;
  IVec lo, hi;
};

Scan prepare_scan(const std::vector<IVec>& gens) {
  const std::size_t n = gens.size();
  for (const auto& g : gens)
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "need n generators of length n");
  Mat G(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G[i][j] = gens[j][i];
  i128 d = det_small(G);
  if (d == 0) throw Error(ErrorCode::DependentGenerators, "generators are linearly dependent");
  Scan s;
  s.n = n;
  s.sdet = d > 0 ? 1 : -1;
  s.absdet = narrow(d > 0 ? d : -d);
  s.adj.assign(n, IVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(i,j) = (-1)^{i+j} minor(j,i)
      Mat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(G[r][c]);
        minor.push_back(row);
      }
      i128 v = det_small(minor);
      s.adj[i][j] = narrow(((i + j) % 2) ? -v : v);
    }
  s.lo.assign(n, 0);
  s.hi.assign(n, 0);
  double volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : gens) {
      if (g[i] < 0) s.lo[i] += g[i];
      else s.hi[i] += g[i];
    }
    volume *= static_cast<double>(s.hi[i] - s.lo[i] + 1);
  }
  if (volume > 4e8) throw Error(ErrorCode::BoundTooLarge, "parallelepiped bounding box too large");
  return s;
}

// All box points with first coordinate x0 that lie in the parallelepiped.
void scan_slice(const Scan& s, std::int64_t x0, std::vector<IVec>& out) {
  const std::size_t n = s.n;
  IVec z(n);
  z[0] = x0;
  for (std::size_t i = 1; i < n; ++i) z[i] = s.lo[i];
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      i128 v = 0;
      for (std::size_t k = 0; k < n; ++k) v += i128(s.adj[j][k]) * z[k];
      v *= s.sdet;
      ok = v >= 0 && v < s.absdet;
    }
    if (ok) out.push_back(z);
    std::size_t i = n - 1;
    while (i >= 1 && z[i] == s.hi[i]) {
      z[i] = s.lo[i];
      --i;
    }
    if (i == 0) break;
    ++z[i];
  }
}

std::vector<IVec> finish(std::vector<IVec> pts, const Scan& s) {
  std::sort(pts.begin(), pts.end());
  if (static_cast<std::int64_t>(pts.size()) != s.absdet)
    throw Error(ErrorCode::NoDecomposition, "parallelepiped count differs from |det|");
  return pts;
}

bool reducible(const RationalCone& cone, const std::vector<IVec>& cands, std::size_t b) {
  const IVec& x = cands[b];
  IVec d(x.size());
  for (std::size_t h = 0; h < cands.size(); ++h) {
    if (h == b) continue;
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - cands[h][i];
    if (cone.contains(d)) return true;
  }
  return false;
}

template <bool Parallel>
HilbertBasis hilbert_impl(const RationalCone& cone) {
  std::set<IVec> pool;
  for (const auto& simplex : cone.triangulation()) {
    std::vector<IVec> gens;
    for (auto i : simplex) gens.push_back(cone.rays()[i]);
    auto pts = Parallel ? parallelepiped_points(gens) : parallelepiped_points_serial(gens);
    for (auto& p : pts)
      if (std::any_of(p.begin(), p.end(), [](auto v) { return v != 0; })) pool.insert(p);
    for (auto& g : gens) pool.insert(g);
  }
  std::vector<IVec> cands(pool.begin(), pool.end());
  // coordinate sum, then lexicographic
  std::sort(cands.begin(), cands.end(), [](const IVec& a, const IVec& b) {
    auto sa = std::accumulate(a.begin(), a.end(), std::int64_t(0));
    auto sb = std::accumulate(b.begin(), b.end(), std::int64_t(0));
    return sa != sb ? sa < sb : a < b;
  });
  std::vector<char> drop(cands.size(), 0);
  const long m = static_cast<long>(cands.size());
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long b = 0; b < m; ++b) drop[b] = reducible(cone, cands, static_cast<std::size_t>(b));
  } else {
    for (long b = 0; b < m; ++b) drop[b] = reducible(cone, cands, static_cast<std::size_t>(b));
  }
  HilbertBasis hb;
  for (std::size_t b = 0; b < cands.size(); ++b)
    if (!drop[b]) hb.elements.push_back(cands[b]);
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

}  // namespace

std::int64_t idot(const IVec& a, const IVec& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += i128(a[i]) * b[i];
  return narrow(s);
}

IVec make_primitive(IVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

RationalCone::RationalCone(const std::vector<IVec>& generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "cone needs generators");
  dim_ = static_cast<int>(generators[0].size());
  if (dim_ < 1) throw Error(ErrorCode::InvalidArgument, "empty vectors");
  if (dim_ > 4) throw Error(ErrorCode::DimensionTooLarge, "dimension must be at most 4");
  std::vector<IVec> rays;
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(dim_)) throw Error(ErrorCode::DimensionMismatch, "generator length");
    if (std::all_of(g.begin(), g.end(), [](auto v) { return v == 0; }))
      throw Error(ErrorCode::InvalidArgument, "zero generator");
    IVec p = make_primitive(g);
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
  }
  const std::size_t n = static_cast<std::size_t>(dim_);
  if (irank(rays) != n) throw Error(ErrorCode::InvalidArgument, "cone is not full-dimensional");

  if (n == 1) {
    for (std::size_t i = 1; i < rays.size(); ++i)
      if (rays[i] != rays[0]) throw Error(ErrorCode::NotPointed, "cone contains a line");
    rays_ = {rays[0]};
    facets_ = {rays[0]};
    grading_ = rays[0];
    triangulation_ = {{0}};
    return;
  }

  // facets from (n-1)-subsets
  std::vector<std::size_t> idx(n - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n - 1) {
      std::vector<IVec> vs;
      for (auto i : idx) vs.push_back(rays[i]);
      IVec h = icross(vs, n);
      if (std::all_of(h.begin(), h.end(), [](auto v) { return v == 0; })) return;
      int pos = 0, neg = 0;
      for (const auto& r : rays) {
        auto s = idot(h, r);
        pos += s > 0;
        neg += s < 0;
      }
      if (pos && neg) return;
      if (neg)
        for (auto& v : h) v = -v;
      h = make_primitive(h);
      if (std::find(facets_.begin(), facets_.end(), h) == facets_.end()) facets_.push_back(h);
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (facets_.empty() || irank(facets_) != n) throw Error(ErrorCode::NotPointed, "cone contains a line");
  for (const auto& r : rays) {
    std::vector<IVec> tight;
    for (const auto& h : facets_)
      if (idot(h, r) == 0) tight.push_back(h);
    if (irank(tight) == n - 1) rays_.push_back(r);
  }
  grading_.assign(n, 0);
  for (const auto& h : facets_)
    for (std::size_t i = 0; i < n; ++i) grading_[i] += h[i];
  triangulate();
}

bool RationalCone::contains(const IVec& x) const {
  for (const auto& h : facets_)
    if (idot(h, x) < 0) return false;
  return true;
}

void RationalCone::triangulate() {
  const std::size_t n = static_cast<std::size_t>(dim_);
  // initial simplex: first independent rays in order
  std::vector<std::size_t> first;
  std::vector<IVec> chosen;
  for (std::size_t i = 0; i < rays_.size() && first.size() < n; ++i) {
    chosen.push_back(rays_[i]);
    if (irank(chosen) == chosen.size()) first.push_back(i);
    else chosen.pop_back();
  }
  triangulation_ = {first};
  for (std::size_t v = 0; v < rays_.size(); ++v) {
    if (std::find(first.begin(), first.end(), v) != first.end()) continue;
    // boundary faces of the current triangulation with their opposite vertex
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> faces;
    for (const auto& s : triangulation_)
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != j) f.push_back(s[k]);
        auto& e = faces[f];
        e.first += 1;
        e.second = s[j];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, info] : faces) {
      if (info.first != 1) continue;
      std::vector<IVec> vs;
      for (auto i : f) vs.push_back(rays_[i]);
      IVec h = icross(vs, n);
      if (idot(h, rays_[info.second]) < 0)
        for (auto& x : h) x = -x;
      if (idot(h, rays_[v]) < 0) {
        auto s = f;
        s.push_back(v);
        std::sort(s.begin(), s.end());
        added.push_back(s);
      }
    }
    for (auto& s : added) triangulation_.push_back(s);
  }
}

std::vector<IVec> parallelepiped_points(const std::vector<IVec>& generators) {
  Scan s = prepare_scan(generators);
  std::vector<IVec> all;
  const std::int64_t lo = s.lo[0], hi = s.hi[0];
#pragma omp parallel
  {
    std::vector<IVec> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t x0 = lo; x0 <= hi; ++x0) scan_slice(s, x0, local);
#pragma omp critical
    all.insert(all.end(), local.begin(), local.end());
  }
  return finish(std::move(all), s);
}

std::vector<IVec> parallelepiped_points_serial(const std::vector<IVec>& generators) {
  Scan s = prepare_scan(generators);
  std::vector<IVec> all;
  for (std::int64_t x0 = s.lo[0]; x0 <= s.hi[0]; ++x0) scan_slice(s, x0, all);
  return finish(std::move(all), s);
}

HilbertBasis hilbert_basis(const RationalCone& cone) { return hilbert_impl<true>(cone); }
HilbertBasis hilbert_basis_serial(const RationalCone& cone) { return hilbert_impl<false>(cone); }

std::vector<std::pair<IVec, std::int64_t>> decompose_nonneg(const HilbertBasis& basis, const RationalCone& cone,
                                                            const IVec& x) {
  if (x.size() != static_cast<std::size_t>(cone.dim())) throw Error(ErrorCode::DimensionMismatch, "point length");
  if (!cone.contains(x)) throw Error(ErrorCode::NotInCone, "point is not in the cone");
  const auto& el = basis.elements;
  const std::size_t m = el.size();
  const auto& facets = cone.facets();
  // facet values of elements and of the target
  std::vector<IVec> fe(m, IVec(facets.size()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t f = 0; f < facets.size(); ++f) fe[i][f] = idot(facets[f], el[i]);
  IVec fx(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f) fx[f] = idot(facets[f], x);

  std::vector<std::int64_t> mult(m, 0), best_mult;
  std::size_t best = SIZE_MAX;
  // remainder tracked in facet coordinates and in ambient coordinates
  IVec rem = x;
  IVec frem = fx;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t i, std::size_t used) {
    bool zero = std::all_of(rem.begin(), rem.end(), [](auto v) { return v == 0; });
    if (zero) {
      if (used < best) {
        best = used;
        best_mult = mult;
      }
      return;
    }
    if (i == m || used + 1 >= best) return;
    // largest feasible multiplicity of element i
    std::int64_t mmax = INT64_MAX;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (fe[i][f] > 0) mmax = std::min(mmax, frem[f] / fe[i][f]);
    if (mmax == INT64_MAX) mmax = 0;  // cannot happen for nonzero elements of a pointed cone
    for (std::int64_t k = mmax; k >= 0; --k) {
      if (k > 0 && used + 1 >= best) continue;
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= k * el[i][c];
      for (std::size_t f = 0; f < facets.size(); ++f) frem[f] -= k * fe[i][f];
      mult[i] = k;
      dfs(i + 1, used + (k > 0));
      mult[i] = 0;
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] += k * el[i][c];
      for (std::size_t f = 0; f < facets.size(); ++f) frem[f] += k * fe[i][f];
      if (best <= 1) return;
    }
  };
  dfs(0, 0);
  if (best == SIZE_MAX) throw Error(ErrorCode::NoDecomposition, "no nonnegative decomposition found");
  std::vector<std::pair<IVec, std::int64_t>> out;
  for (std::size_t i = 0; i < m; ++i)
    if (best_mult[i] > 0) out.emplace_back(el[i], best_mult[i]);
  return out;
}

}  // namespace rgcone
