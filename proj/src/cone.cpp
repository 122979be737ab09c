#include "rgcone/cone.hpp"

#include <algorithm>

namespace rgcone {

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return out;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

ZVector primitive(const QVector& w) {
  Integer l = 1;
  for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVector z;
  Integer g = 0;
  for (const auto& x : w) {
    z.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : z) x /= g;
  return z;
}

FVector as_field(const ZVector& x) {
  FVector f;
  f.reserve(x.size());
  for (const auto& v : x) f.emplace_back(v);
  return f;
}

}  // namespace

FVector normalize_ray(const FVector& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    AlgebraicNumber s = abs(x).inverse();
    return scaled(v, s);
  }
  throw Error(ErrorCode::InvalidArgument, "zero vector cannot span a ray");
}

FVector cross(const std::vector<FVector>& vs) {
  const std::size_t n = vs.size() + 1;
  FVector h(n);
  FMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (vs[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "cross product operand length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = AlgebraicNumber(j == k ? 1 : 0);
    h[k] = det(m);
  }
  return h;
}

Cone Cone::pointed(ContextPtr ctx, const std::vector<FVector>& generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "cone needs at least one generator");
  Cone c;
  std::vector<std::size_t> source;
  c.ctx_ = std::move(ctx);
  c.kind_ = ConeKind::Pointed;
  c.dim_ = static_cast<int>(generators[0].size());
  if (c.dim_ < 2) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
  if (c.dim_ > 4) throw Error(ErrorCode::DimensionTooLarge, "dimension must be at most 4");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != static_cast<std::size_t>(c.dim_))
      throw Error(ErrorCode::DimensionMismatch, "generator " + std::to_string(i) + " has wrong length");
    FVector r = normalize_ray(generators[i]);
    if (std::find(c.rays_.begin(), c.rays_.end(), r) != c.rays_.end()) {
      c.dropped_.push_back(i);
      continue;
    }
    c.rays_.push_back(r);
    c.original_.push_back(generators[i]);
    source.push_back(i);
  }
  if (rank(FMatrix::from_columns(c.rays_)) != static_cast<std::size_t>(c.dim_))
    throw Error(ErrorCode::InvalidArgument, "cone is not full-dimensional");
  c.build_facets();

  // pointed iff the facet normals span the dual space
  if (c.facets_.empty() || rank(FMatrix::from_columns(c.facets_)) != static_cast<std::size_t>(c.dim_))
    throw Error(ErrorCode::NotPointed, "cone contains a line");

  // drop generators lying on fewer than n-1 independent facets
  std::vector<FVector> keep, keep_orig;
  for (std::size_t i = 0; i < c.rays_.size(); ++i) {
    std::vector<FVector> tight;
    for (const auto& h : c.facets_)
      if (dot(h, c.rays_[i]).is_zero()) tight.push_back(h);
    if (!tight.empty() && rank(FMatrix::from_columns(tight)) == static_cast<std::size_t>(c.dim_ - 1)) {
      keep.push_back(c.rays_[i]);
      keep_orig.push_back(c.original_[i]);
    } else {
      c.dropped_.push_back(source[i]);
    }
  }
  std::sort(c.dropped_.begin(), c.dropped_.end());
  c.rays_ = std::move(keep);
  c.original_ = std::move(keep_orig);
  c.simple_ = c.rays_.size() == static_cast<std::size_t>(c.dim_);
  if (c.simple_) {
    c.M_ = FMatrix::from_columns(c.rays_);
    c.Minv_ = inverse(c.M_);
  }

  // rational functional near the sum of facet normals
  FVector hsum(c.dim_, AlgebraicNumber(0));
  for (const auto& h : c.facets_)
    for (int j = 0; j < c.dim_; ++j) hsum[j] += h[j];
  for (unsigned bits = 4;; bits += 8) {
    QVector w;
    for (const auto& x : hsum) w.push_back(x.approximate(bits));
    ZVector z = primitive(w);
    FVector zf = as_field(z);
    bool ok = !is_zero_vector(z);
    for (const auto& r : c.rays_)
      if (ok && dot(zf, r).sign() <= 0) ok = false;
    if (ok) {
      c.witness_ = z;
      break;
    }
    if (bits > 4096) throw Error(ErrorCode::NotPointed, "no positive functional found");
  }
  return c;
}

void Cone::build_facets() {
  const std::size_t n = static_cast<std::size_t>(dim_);
  for (const auto& subset : combinations(rays_.size(), n - 1)) {
    std::vector<FVector> vs;
    for (auto i : subset) vs.push_back(rays_[i]);
    FVector h = cross(vs);
    if (is_zero_vector(h)) continue;
    int pos = 0, neg = 0;
    for (const auto& r : rays_) {
      int s = dot(h, r).sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos && neg) continue;
    if (neg) h = scaled(h, AlgebraicNumber(-1));
    h = normalize_ray(h);
    if (std::find(facets_.begin(), facets_.end(), h) == facets_.end()) facets_.push_back(h);
  }
}

Cone Cone::halfspace(ContextPtr ctx, const FVector& boundary, std::optional<FVector> normal) {
  if (boundary.size() != 2) throw Error(ErrorCode::DimensionMismatch, "half-planes must be two-dimensional");
  Cone c;
  c.ctx_ = std::move(ctx);
  c.kind_ = ConeKind::Halfspace;
  c.dim_ = 2;
  c.rays_ = {normalize_ray(boundary)};
  c.original_ = {boundary};
  FVector n = normal ? *normal : FVector{-boundary[1], boundary[0]};
  if (n.size() != 2 || is_zero_vector(n)) throw Error(ErrorCode::InvalidArgument, "bad half-plane normal");
  if (!dot(n, boundary).is_zero())
    throw Error(ErrorCode::InvalidArgument, "normal is not orthogonal to the boundary");
  c.normal_ = normalize_ray(n);
  c.facets_ = {c.normal_};
  return c;
}

bool Cone::all_rays_rational() const {
  for (const auto& r : rays_)
    for (const auto& x : r)
      if (!x.is_rational()) return false;
  return true;
}

std::vector<bool> Cone::ray_rationality() const {
  std::vector<bool> out;
  for (const auto& r : rays_)
    out.push_back(std::all_of(r.begin(), r.end(), [](const AlgebraicNumber& x) { return x.is_rational(); }));
  return out;
}

bool Cone::contains(const FVector& x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) throw Error(ErrorCode::DimensionMismatch, "point length");
  for (const auto& h : facets_)
    if (dot(h, x).sign() < 0) return false;
  return true;
}

bool Cone::contains(const QVector& x) const { return contains(to_field(x)); }

bool Cone::contains(const ZVector& x) const { return contains(as_field(x)); }

bool Cone::contains_interior(const ZVector& x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) throw Error(ErrorCode::DimensionMismatch, "point length");
  FVector f = as_field(x);
  for (const auto& h : facets_)
    if (dot(h, f).sign() <= 0) return false;
  return true;
}

const FMatrix& Cone::ray_matrix() const {
  if (!simple_) throw Error(ErrorCode::NotSimple, "cone is not simple");
  return M_;
}

const FMatrix& Cone::ray_matrix_inverse() const {
  if (!simple_) throw Error(ErrorCode::NotSimple, "cone is not simple");
  return Minv_;
}

FVector Cone::eigen_coordinates(const FVector& x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) throw Error(ErrorCode::DimensionMismatch, "point length");
  return ray_matrix_inverse() * x;
}

FVector Cone::eigen_coordinates(const QVector& x) const { return eigen_coordinates(to_field(x)); }

LatticeConstraints eigen_lattice_constraints(const Cone& c) {
  if (!c.context() || !c.context()->is_quadratic_sqrt())
    throw Error(ErrorCode::NotQuadratic, "lattice constraints need a Q(sqrt D) context");
  const FMatrix& M = c.ray_matrix();
  const std::size_t n = M.rows();
  const Rational D(c.context()->radicand());
  LatticeConstraints lc;
  lc.rational_part = QMatrix(n, 2 * n);
  lc.irrational_part = QMatrix(n, 2 * n);
  // (p + q sqrt D)(a + b sqrt D) = (p a + q D b) + (q a + p b) sqrt D
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational p = M(i, j).coeff(0), q = M(i, j).coeff(1);
      lc.rational_part(i, 2 * j) = p;
      lc.rational_part(i, 2 * j + 1) = q * D;
      lc.irrational_part(i, 2 * j) = q;
      lc.irrational_part(i, 2 * j + 1) = p;
    }
  // Eliminate on reversed columns so the later variables become dependent.
  const std::size_t m = 2 * n;
  QMatrix rev(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) rev(i, j) = lc.irrational_part(i, m - 1 - j);
  auto piv = rref(rev);
  std::vector<bool> dep(m, false);
  for (auto p : piv) {
    lc.dependent.push_back(m - 1 - p);
    dep[m - 1 - p] = true;
  }
  for (std::size_t v = 0; v < m; ++v)
    if (!dep[v]) lc.free.push_back(v);
  lc.relations = QMatrix(lc.dependent.size(), lc.free.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t j = 0; j < lc.free.size(); ++j)
      lc.relations(k, j) = -rev(k, m - 1 - lc.free[j]);
  // Sort dependents ascending for readability.
  std::vector<std::size_t> order(lc.dependent.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return lc.dependent[x] < lc.dependent[y]; });
  QMatrix rel(lc.relations.rows(), lc.relations.cols());
  std::vector<std::size_t> deps;
  for (std::size_t k = 0; k < order.size(); ++k) {
    deps.push_back(lc.dependent[order[k]]);
    for (std::size_t j = 0; j < rel.cols(); ++j) rel(k, j) = lc.relations(order[k], j);
  }
  lc.dependent = deps;
  lc.relations = rel;
  // full substitution matrix S (m x |free|): v = S f
  QMatrix S(m, lc.free.size());
  for (std::size_t j = 0; j < lc.free.size(); ++j) S(lc.free[j], j) = 1;
  for (std::size_t k = 0; k < lc.dependent.size(); ++k)
    for (std::size_t j = 0; j < lc.free.size(); ++j) S(lc.dependent[k], j) = lc.relations(k, j);
  lc.image = lc.rational_part * S;
  return lc;
}

}  // namespace rgcone
