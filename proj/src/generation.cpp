#include "rgcone/generation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "rgcone/errors.hpp"

namespace rgcone {

namespace {

constexpr long kSpiralRadius = 8;
constexpr std::size_t kMaxExtensions = 64;

std::optional<IVec> to_ivec(const ZVector& z) {
  IVec v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!z[i].fits_slong_p()) return std::nullopt;
    v[i] = z[i].get_si();
  }
  return v;
}

ZVector to_zvec(const IVec& v) {
  ZVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = Integer(static_cast<long>(v[i]));
  return z;
}

QVector to_q(const ZVector& z) { return QVector(z.begin(), z.end()); }

ZVector mul(const QMatrix& m, const ZVector& x) {
  ZVector y(m.rows(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j).get_num() * x[j];
  return y;
}

bool is_zero_z(const ZVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
}

ZVector primitive_of(const FVector& v) {
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

IVec must_fit(const ZVector& z) {
  auto v = to_ivec(z);
  if (!v) throw Error(ErrorCode::InvalidArgument, "coordinate exceeds the 64-bit range");
  return *v;
}

// Calls f on every integer vector with max-norm exactly r, lexicographic.
template <class F>
bool for_shell(std::size_t n, long r, F&& f) {
  std::vector<long> z(n, -r);
  while (true) {
    long m = 0;
    for (auto v : z) m = std::max(m, std::labs(v));
    if (m == r && f(z)) return true;
    std::size_t i = n;
    while (i > 0 && z[i - 1] == r) z[--i] = -r;
    if (i == 0) return false;
    ++z[i - 1];
  }
}

long gcd_of(const std::vector<long>& z) {
  long g = 0;
  for (auto v : z) g = std::gcd(g, std::labs(v));
  return g;
}

// First primitive integer point, in max-norm then lexicographic order, whose
// eigen-coordinates are positive on rays i, j and zero elsewhere.
ZVector face_seed(const Cone& c, std::size_t i, std::size_t j) {
  const std::size_t n = static_cast<std::size_t>(c.dim());
  ZVector found;
  for (long r = 1; r <= 64; ++r) {
    bool hit = for_shell(n, r, [&](const std::vector<long>& z) {
      if (gcd_of(z) != 1) return false;
      QVector q(z.begin(), z.end());
      FVector a = c.eigen_coordinates(q);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) {
          if (a[k].sign() <= 0) return false;
        } else if (!a[k].is_zero()) {
          return false;
        }
      }
      found.assign(z.begin(), z.end());
      return true;
    });
    if (hit) return found;
  }
  throw Error(ErrorCode::NoRationalPoint, "no integer point on the face within max-norm 64");
}

// Rays with eigenvalue other than 1, per generator, as disjoint irrational pairs.
std::optional<std::vector<Block>> pair_blocks(const Cone& c, const std::vector<QMatrix>& gens) {
  auto rat = c.ray_rationality();
  std::vector<bool> used(c.rays().size(), false);
  std::vector<Block> blocks;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    FMatrix f = to_field(gens[g]);
    std::vector<std::size_t> moved;
    for (std::size_t k = 0; k < c.rays().size(); ++k) {
      auto l = eigenvalue_on(f, c.rays()[k]);
      if (!l || l->sign() <= 0) return std::nullopt;
      if (*l != AlgebraicNumber(1)) moved.push_back(k);
    }
    if (moved.size() != 2) return std::nullopt;
    for (auto k : moved)
      if (used[k] || rat[k]) return std::nullopt;
    used[moved[0]] = used[moved[1]] = true;
    blocks.push_back({g, moved[0], moved[1]});
  }
  return blocks;
}

void fill_windows(Piece& p, const std::vector<QMatrix>& gens) {
  p.center.clear();
  p.step.clear();
  const auto& gens_P = p.P.rays();
  (void)gens_P;
  for (const auto& b : p.blocks) {
    FMatrix f = to_field(gens[b.generator]);
    double mu = eigenvalue_on(f, p.cone.rays()[b.ray_i])->to_double() /
                eigenvalue_on(f, p.cone.rays()[b.ray_j])->to_double();
    // seed: a P generator on this face with positive coordinates on i and j
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& g : p.P.rays()) {
      FVector a = p.cone.eigen_coordinates(to_q(to_zvec(g)));
      if (a[b.ray_i].sign() <= 0 || a[b.ray_j].sign() <= 0) continue;
      double lr = std::log(a[b.ray_i].to_double()) - std::log(a[b.ray_j].to_double());
      // the window starts at the lower of t and G t
      if (std::isnan(best) || lr < best) best = lr;
    }
    double step = std::log(mu);
    p.center.push_back(best + std::fabs(step) / 2);
    p.step.push_back(step);
  }
}

Piece make_piece(const Cone& c, RationalCone P, std::vector<Block> blocks, const std::vector<QMatrix>& gens) {
  HilbertBasis R = hilbert_basis(P);
  Piece p{c, std::move(P), std::move(R), std::move(blocks), {}, {}};
  fill_windows(p, gens);
  return p;
}

bool word_less(const std::vector<long>& a, const std::vector<long>& b) {
  long la = 0, lb = 0;
  for (auto v : a) la += std::labs(v);
  for (auto v : b) lb += std::labs(v);
  if (la != lb) return la < lb;
  return a < b;
}

std::optional<BalanceResult> balance_in_piece(const GeneratingSet& gs, std::size_t pi, const ZVector& x, long cap) {
  const Piece& p = gs.pieces[pi];
  std::vector<long> est(gs.generators.size(), 0);
  std::vector<bool> active(gs.generators.size(), false);
  if (!p.blocks.empty()) {
    FVector a = p.cone.eigen_coordinates(to_q(x));
    for (std::size_t k = 0; k < p.blocks.size(); ++k) {
      const auto& b = p.blocks[k];
      if (a[b.ray_i].is_zero()) continue;
      double lr = std::log(a[b.ray_i].to_double()) - std::log(a[b.ray_j].to_double());
      double e = std::round((p.center[k] - lr) / p.step[k]);
      if (std::fabs(e) > static_cast<double>(cap))
        throw Error(ErrorCode::BalanceCapExceeded, "balancing word exceeds the cap");
      est[b.generator] = static_cast<long>(e);
      active[b.generator] = true;
    }
  }
  std::vector<std::size_t> dims;
  for (std::size_t g = 0; g < active.size(); ++g)
    if (active[g]) dims.push_back(g);

  auto feasible = [&](const std::vector<long>& w) -> std::optional<ZVector> {
    ZVector y = apply_word(gs, w, x);
    auto v = to_ivec(y);
    if (v && p.P.contains(*v)) return y;
    return std::nullopt;
  };

  std::vector<std::pair<std::vector<long>, ZVector>> hits;
  long first = -1;
  for (long r = 0; r <= kSpiralRadius; ++r) {
    if (first >= 0 && r > first + 1) break;
    if (dims.empty()) {
      if (auto y = feasible(est)) hits.emplace_back(est, *y);
      break;
    }
    for_shell(dims.size(), r, [&](const std::vector<long>& d) {
      std::vector<long> w = est;
      for (std::size_t k = 0; k < dims.size(); ++k) w[dims[k]] += d[k];
      if (auto y = feasible(w)) hits.emplace_back(w, *y);
      return false;
    });
    if (!hits.empty() && first < 0) first = r;
  }
  if (hits.empty()) return std::nullopt;
  auto best = std::min_element(hits.begin(), hits.end(),
                               [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
  return BalanceResult{best->first, best->second, pi};
}

std::optional<Representation> decompose_impl(const GeneratingSet& gs, const ZVector& x) {
  Representation rep;
  if (is_zero_z(x)) return rep;
  BalanceResult b;
  try {
    b = balance(gs, x);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BalanceCapExceeded) return std::nullopt;
    throw;
  }
  std::vector<long> back(b.word.size());
  for (std::size_t k = 0; k < back.size(); ++k) back[k] = -b.word[k];
  if (std::find(gs.extensions.begin(), gs.extensions.end(), b.y) != gs.extensions.end()) {
    rep.terms.push_back({Integer(1), back, b.y});
    return rep;
  }
  const Piece& p = gs.pieces[b.piece];
  std::vector<std::pair<IVec, std::int64_t>> parts;
  try {
    parts = decompose_nonneg(p.R, p.P, must_fit(b.y));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoDecomposition) return std::nullopt;
    throw;
  }
  for (const auto& [r, m] : parts) rep.terms.push_back({Integer(static_cast<long>(m)), back, to_zvec(r)});
  if (reconstruct(gs, rep) != x) throw Error(ErrorCode::NoDecomposition, "reconstruction mismatch");
  return rep;
}

template <bool Parallel>
VerifyReport verify_impl(GeneratingSet& gs, long bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "negative bound");
  if (bound > 1000) throw Error(ErrorCode::BoundTooLarge, "box bound above 1000");
  const std::size_t n = static_cast<std::size_t>(gs.cone->dim());
  const double volume = std::pow(2.0 * static_cast<double>(bound) + 1, static_cast<double>(n));
  if (volume > 5e7) throw Error(ErrorCode::BoundTooLarge, "box has too many points");
  const long width = 2 * bound + 1;

  struct Slice {
    long points = 0, decomposed = 0, max_word = 0;
    std::vector<ZVector> pending;
    std::vector<std::string> failures;
  };
  std::vector<Slice> slices(static_cast<std::size_t>(width));
  const GeneratingSet& frozen = gs;

  auto run = [&](long first) {
    Slice& s = slices[static_cast<std::size_t>(first + bound)];
    std::vector<long> z(n, -bound);
    z[0] = first;
    while (true) {
      ZVector x(z.begin(), z.end());
      if (!is_zero_z(x) && frozen.cone->contains(x)) {
        ++s.points;
        try {
          auto rep = decompose_impl(frozen, x);
          if (!rep) {
            s.pending.push_back(x);
          } else {
            ++s.decomposed;
            for (const auto& t : rep->terms)
              for (auto e : t.word) s.max_word = std::max(s.max_word, std::labs(e));
          }
        } catch (const Error& e) {
          std::string pt;
          for (const auto& v : x) pt += (pt.empty() ? "" : ",") + v.get_str();
          s.failures.push_back("(" + pt + "): " + e.what());
        }
      }
      std::size_t i = n;
      while (i > 1 && z[i - 1] == bound) z[--i] = -bound;
      if (i <= 1) break;
      ++z[i - 1];
    }
  };

  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long f = -bound; f <= bound; ++f) run(f);
  } else {
    for (long f = -bound; f <= bound; ++f) run(f);
  }

  VerifyReport rep;
  std::vector<ZVector> pending;
  for (auto& s : slices) {
    rep.points += s.points;
    rep.decomposed += s.decomposed;
    rep.max_word = std::max(rep.max_word, s.max_word);
    rep.failures.insert(rep.failures.end(), s.failures.begin(), s.failures.end());
    pending.insert(pending.end(), s.pending.begin(), s.pending.end());
  }
  // Extensions are applied by a single writer, in point order.
  const std::size_t before = gs.extensions.size();
  for (const auto& x : pending) {
    try {
      decompose_point(gs, x);
      ++rep.decomposed;
    } catch (const Error& e) {
      rep.failures.push_back(e.what());
    }
  }
  rep.extensions = static_cast<long>(gs.extensions.size() - before);
  return rep;
}

}  // namespace

std::vector<ZVector> GeneratingSet::elements() const {
  std::vector<ZVector> out;
  for (const auto& p : pieces)
    for (const auto& e : p.R.elements) out.push_back(to_zvec(e));
  out.insert(out.end(), extensions.begin(), extensions.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RationalCone build_P_2d(const Cone& c, const QMatrix& A) {
  if (c.dim() != 2 || c.kind() != ConeKind::Pointed) throw Error(ErrorCode::InvalidArgument, "planar pointed cone expected");
  if (A == QMatrix::identity(2)) throw Error(ErrorCode::InvalidArgument, "fixing matrix must not be the identity");
  for (const auto& u : c.rays()) {
    auto l = eigenvalue_on(to_field(A), u);
    if (!l || l->sign() <= 0) throw Error(ErrorCode::InvalidArgument, "matrix does not fix the rays");
  }
  ZVector t;
  for (long r = 1; r <= 64 && t.empty(); ++r)
    for_shell(2, r, [&](const std::vector<long>& z) {
      if (gcd_of(z) != 1) return false;
      ZVector v(z.begin(), z.end());
      if (!c.contains_interior(v)) return false;
      t = v;
      return true;
    });
  if (t.empty()) throw Error(ErrorCode::NoRationalPoint, "no interior integer point within max-norm 64");
  ZVector At = mul(A, t);
  if (!c.contains(At)) throw Error(ErrorCode::InvalidArgument, "image of the seed left the cone");
  return RationalCone({must_fit(t), must_fit(At)});
}

bool log_independent(const std::vector<FVector>& eig) {
  const std::size_t m = eig.size();
  if (m == 0) return true;
  const std::size_t n = eig[0].size();
  // floating rank of the log matrix
  std::vector<std::vector<double>> L(m, std::vector<double>(n));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t i = 0; i < n; ++i) L[g][i] = std::log(eig[g][i].to_double());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t p = rank;
    for (std::size_t r = rank; r < m; ++r)
      if (std::fabs(L[r][col]) > std::fabs(L[p][col])) p = r;
    if (std::fabs(L[p][col]) < 1e-9) continue;
    std::swap(L[p], L[rank]);
    for (std::size_t r = rank + 1; r < m; ++r) {
      double f = L[r][col] / L[rank][col];
      for (std::size_t k = col; k < n; ++k) L[r][k] -= f * L[rank][k];
    }
    ++rank;
  }
  if (rank < m) return false;
  // exact search for small multiplicative relations
  std::vector<long> e(m, -8);
  while (true) {
    bool nonzero = std::any_of(e.begin(), e.end(), [](long v) { return v != 0; });
    if (nonzero) {
      bool relation = true;
      for (std::size_t i = 0; i < n && relation; ++i) {
        AlgebraicNumber prod(1);
        for (std::size_t g = 0; g < m; ++g) prod *= pow(eig[g][i], e[g]);
        relation = prod == AlgebraicNumber(1);
      }
      if (relation) return false;
    }
    std::size_t i = 0;
    while (i < m && e[i] == 8) e[i++] = -8;
    if (i == m) break;
    ++e[i];
  }
  return true;
}

RationalCone build_P_simple(const Cone& c, const std::vector<QMatrix>& gens, std::vector<Block>* out_blocks) {
  if (!c.is_simple()) throw Error(ErrorCode::NotSimple, "cone is not simple");
  auto blocks = pair_blocks(c, gens);
  if (!blocks)
    throw Error(ErrorCode::ContextDegreeUnsupported, "generators do not act on disjoint conjugate pairs of rays");
  std::vector<FVector> eig;
  for (const auto& g : gens) {
    FVector ev;
    for (const auto& u : c.rays()) ev.push_back(*eigenvalue_on(to_field(g), u));
    eig.push_back(ev);
  }
  if (!log_independent(eig)) throw Error(ErrorCode::LogDependence, "generator eigenvalues are log-dependent");
  auto rat = c.ray_rationality();
  std::vector<IVec> P;
  for (std::size_t k = 0; k < rat.size(); ++k)
    if (rat[k]) P.push_back(must_fit(primitive_of(c.rays()[k])));
  for (const auto& b : *blocks) {
    ZVector t = face_seed(c, b.ray_i, b.ray_j);
    P.push_back(must_fit(t));
    P.push_back(must_fit(mul(gens[b.generator], t)));
  }
  if (out_blocks) *out_blocks = *blocks;
  return RationalCone(P);
}

GeneratingSet build_generating_set(const Cone& c, const Verdict& v) {
  if (v.status != Status::FGCertified) throw Error(ErrorCode::NotFG, "verdict is not FG_certified");
  GeneratingSet gs;
  gs.cone = std::make_shared<Cone>(c);
  const SymmetryCertificate cert = v.certificate.value_or(SymmetryCertificate{});

  if (c.kind() == ConeKind::Halfspace) {
    const FVector& r = c.rays()[0];
    if (std::all_of(r.begin(), r.end(), [](const AlgebraicNumber& x) { return x.is_rational(); })) {
      ZVector p = primitive_of(r);
      // q with det(p, q) = 1, flipped into the half-plane
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p[0].get_mpz_t(), p[1].get_mpz_t());
      ZVector q{-t, s};  // p0 s + p1 t = 1 gives det(p, q) = 1
      if (dot(c.normal(), FVector{AlgebraicNumber(q[0]), AlgebraicNumber(q[1])}).sign() < 0) q = {-q[0], -q[1]};
      ZVector mp{-p[0], -p[1]};
      for (const auto& pair : {std::pair{p, q}, std::pair{q, mp}}) {
        Cone sector = Cone::pointed(nullptr, {to_field(to_q(pair.first)), to_field(to_q(pair.second))});
        gs.pieces.push_back(make_piece(sector, RationalCone({must_fit(pair.first), must_fit(pair.second)}), {}, {}));
      }
      return gs;
    }
    const QMatrix& A = cert.generators.at(0);
    gs.generators = {A};
    gs.inverses = {inverse(A)};
    // other eigenvector of A: eigenvalue 1/lambda
    AlgebraicNumber lam = *eigenvalue_on(to_field(A), r);
    AlgebraicNumber other = lam.inverse();
    FVector w{AlgebraicNumber(A(0, 1)), other - A(0, 0)};
    if (dot(c.normal(), w).sign() < 0) w = scaled(w, AlgebraicNumber(-1));
    FVector mr = scaled(r, AlgebraicNumber(-1));
    for (const auto& pair : {std::pair{r, w}, std::pair{w, mr}}) {
      Cone sector = Cone::pointed(c.context(), {pair.first, pair.second});
      gs.pieces.push_back(make_piece(sector, build_P_2d(sector, A), {{0, 0, 1}}, gs.generators));
    }
    return gs;
  }

  if (c.all_rays_rational()) {
    std::vector<IVec> rays;
    for (const auto& u : c.rays()) rays.push_back(must_fit(primitive_of(u)));
    gs.pieces.push_back(make_piece(c, RationalCone(rays), {}, {}));
    return gs;
  }
  if (c.dim() == 2) {
    const QMatrix& A = cert.generators.at(0);
    gs.generators = {A};
    gs.inverses = {inverse(A)};
    gs.pieces.push_back(make_piece(c, build_P_2d(c, A), {{0, 0, 1}}, gs.generators));
    return gs;
  }
  std::vector<QMatrix> gens = cert.generators;
  if (gens.empty() || !pair_blocks(c, gens)) {
    auto pg = pair_unit_generators(c);
    if (!pg || pg->generators.empty())
      throw Error(ErrorCode::ContextDegreeUnsupported, "no generating-set construction for these rays");
    gens = pg->generators;
    gs.log.push_back("generators replaced by pair units");
  }
  gs.generators = gens;
  for (const auto& g : gens) gs.inverses.push_back(inverse(g));
  std::vector<Block> blocks;
  RationalCone P = build_P_simple(c, gens, &blocks);
  gs.pieces.push_back(make_piece(c, std::move(P), blocks, gs.generators));
  return gs;
}

ZVector apply_word(const GeneratingSet& gs, const std::vector<long>& word, const ZVector& x) {
  ZVector y = x;
  for (std::size_t g = 0; g < word.size(); ++g) {
    const QMatrix& m = word[g] >= 0 ? gs.generators[g] : gs.inverses[g];
    for (long k = 0; k < std::labs(word[g]); ++k) y = mul(m, y);
  }
  return y;
}

BalanceResult balance(const GeneratingSet& gs, const ZVector& x, long cap) {
  if (!gs.cone->contains(x)) throw Error(ErrorCode::NotInCone, "point is not in the cone");
  for (std::size_t pi = 0; pi < gs.pieces.size(); ++pi) {
    if (!gs.pieces[pi].cone.contains(x)) continue;
    if (auto b = balance_in_piece(gs, pi, x, cap)) return *b;
  }
  throw Error(ErrorCode::BalanceCapExceeded, "no balancing word near the estimate");
}

std::optional<Representation> try_decompose(const GeneratingSet& gs, const ZVector& x) {
  if (!gs.cone->contains(x)) throw Error(ErrorCode::NotInCone, "point is not in the cone");
  return decompose_impl(gs, x);
}

Representation decompose_point(GeneratingSet& gs, const ZVector& x) {
  if (auto r = try_decompose(gs, x)) return *r;
  if (gs.extensions.size() >= kMaxExtensions)
    throw Error(ErrorCode::SaturationCapExceeded, "more than 64 saturation extensions");
  gs.extensions.push_back(x);
  ++gs.version;
  std::string pt;
  for (const auto& v : x) pt += (pt.empty() ? "" : ",") + v.get_str();
  gs.log.push_back("extension " + std::to_string(gs.version) + ": (" + pt + ")");
  Representation rep;
  rep.terms.push_back({Integer(1), std::vector<long>(gs.generators.size(), 0), x});
  return rep;
}

ZVector reconstruct(const GeneratingSet& gs, const Representation& rep) {
  ZVector s(static_cast<std::size_t>(gs.cone->dim()), Integer(0));
  for (const auto& t : rep.terms) {
    ZVector img = apply_word(gs, t.word, t.element);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += t.multiplicity * img[i];
  }
  return s;
}

VerifyReport verify_generating_set(GeneratingSet& gs, long bound) { return verify_impl<true>(gs, bound); }
VerifyReport verify_generating_set_serial(GeneratingSet& gs, long bound) { return verify_impl<false>(gs, bound); }

}  // namespace rgcone
