#pragma once

// Hilbert bases of pointed rational cones in dimension <= 4 (int64 data).

#include <cstdint>
#include <utility>
#include <vector>

namespace rgcone {

using IVec = std::vector<std::int64_t>;

std::int64_t idot(const IVec& a, const IVec& b);
/// Divides out the gcd of the entries.
IVec make_primitive(IVec v);

class RationalCone {
 public:
  /// Full-dimensional pointed cone; generators are made primitive,
  /// deduplicated, and non-extreme ones dropped.  Throws NotPointed,
  /// InvalidArgument, DimensionTooLarge.
  explicit RationalCone(const std::vector<IVec>& generators);

  int dim() const { return dim_; }
  const std::vector<IVec>& rays() const { return rays_; }
  /// Primitive inward facet normals.
  const std::vector<IVec>& facets() const { return facets_; }
  /// Sum of facet normals; positive on every nonzero cone point.
  const IVec& grading() const { return grading_; }
  bool is_simple() const { return rays_.size() == static_cast<std::size_t>(dim_); }
  /// Placing triangulation in ray order; each entry lists ray indices.
  const std::vector<std::vector<std::size_t>>& triangulation() const { return triangulation_; }

  bool contains(const IVec& x) const;

 private:
  void triangulate();

  int dim_ = 0;
  std::vector<IVec> rays_, facets_;
  IVec grading_;
  std::vector<std::vector<std::size_t>> triangulation_;
};

/// Lattice points of the half-open parallelepiped spanned by n independent
/// generators, sorted lexicographically.  Box scan with exact adjugate
/// tests, split across OpenMP threads.  Throws DependentGenerators.
std::vector<IVec> parallelepiped_points(const std::vector<IVec>& generators);
/// Single-threaded reference of the same scan.
std::vector<IVec> parallelepiped_points_serial(const std::vector<IVec>& generators);

struct HilbertBasis {
  std::vector<IVec> elements;  // lexicographic order
};

HilbertBasis hilbert_basis(const RationalCone& cone);
HilbertBasis hilbert_basis_serial(const RationalCone& cone);

/// Nonnegative integer combination of basis elements equal to x, using as
/// few distinct elements as possible; ties go to the first solution in
/// depth-first order (sorted elements, largest multiplicity first).
/// Throws NotInCone or NoDecomposition.
std::vector<std::pair<IVec, std::int64_t>> decompose_nonneg(const HilbertBasis& basis, const RationalCone& cone,
                                                            const IVec& x);

}  // namespace rgcone
