#pragma once

// Polyhedral cones and half-planes with real algebraic ray coordinates.

#include <optional>
#include <vector>

#include "rgcone/algebraic.hpp"
#include "rgcone/matrix.hpp"

namespace rgcone {

enum class ConeKind { Pointed, Halfspace };

/// Scales v by 1/|first nonzero entry|.  Direction is preserved.
FVector normalize_ray(const FVector& v);

/// Generalized cross product: h with h . x = det[v_1; ...; v_{n-1}; x].
FVector cross(const std::vector<FVector>& vs);

class Cone {
 public:
  /// Full-dimensional pointed cone generated by the given vectors.
  /// Duplicate and non-extreme generators are dropped.
  static Cone pointed(ContextPtr ctx, const std::vector<FVector>& generators);
  /// Closed half-plane bounded by the line through `boundary`.  The default
  /// normal is the boundary rotated a quarter turn counter-clockwise.
  static Cone halfspace(ContextPtr ctx, const FVector& boundary, std::optional<FVector> normal = {});

  int dim() const { return dim_; }
  const ContextPtr& context() const { return ctx_; }
  ConeKind kind() const { return kind_; }

  /// Normalized extreme rays (half-planes: the boundary generator).
  const std::vector<FVector>& rays() const { return rays_; }
  /// Representatives as supplied by the caller, aligned with rays().
  const std::vector<FVector>& original_rays() const { return original_; }
  /// Indices of input generators that were dropped as duplicates or interior.
  const std::vector<std::size_t>& dropped() const { return dropped_; }

  /// Inward facet normals; x is in the cone iff all h . x >= 0.
  const std::vector<FVector>& facets() const { return facets_; }
  /// Primitive integer functional positive on every ray (pointed cones).
  const ZVector& witness() const { return witness_; }
  /// Half-plane inward normal.
  const FVector& normal() const { return normal_; }

  bool is_simple() const { return simple_; }
  bool all_rays_rational() const;
  /// Per ray: true when the normalized representative is rational.
  std::vector<bool> ray_rationality() const;

  bool contains(const FVector& x) const;
  bool contains(const QVector& x) const;
  bool contains(const ZVector& x) const;
  /// Strict inequality on every facet.
  bool contains_interior(const ZVector& x) const;

  /// Ray matrix (normalized rays as columns) of a simple cone and its inverse.
  const FMatrix& ray_matrix() const;
  const FMatrix& ray_matrix_inverse() const;
  /// M^-1 x for simple cones; throws NotSimple.
  FVector eigen_coordinates(const FVector& x) const;
  FVector eigen_coordinates(const QVector& x) const;

 private:
  Cone() = default;
  void build_facets();

  int dim_ = 0;
  ContextPtr ctx_;
  ConeKind kind_ = ConeKind::Pointed;
  std::vector<FVector> rays_, original_, facets_;
  std::vector<std::size_t> dropped_;
  ZVector witness_;
  FVector normal_;
  bool simple_ = false;
  FMatrix M_, Minv_;
};

/// Integer-linear description of M^-1 Z^n for a simple cone over Q(sqrt D).
/// Variables v = (a_1, b_1, ..., a_n, b_n) with alpha_i = a_i + b_i sqrt(D).
struct LatticeConstraints {
  QMatrix rational_part;    // rational part of M alpha, n x 2n
  QMatrix irrational_part;  // sqrt(D) part of M alpha, n x 2n
  /// Dependent variables solved in terms of free ones: v[dependent[k]] =
  /// sum_j relations(k, j) * v[free[j]].
  std::vector<std::size_t> dependent;
  std::vector<std::size_t> free;
  QMatrix relations;
  /// M alpha as a function of the free variables, n x |free|.
  QMatrix image;
};

/// Throws NotQuadratic unless the context is Q(sqrt D); NotSimple.
LatticeConstraints eigen_lattice_constraints(const Cone& c);

}  // namespace rgcone
