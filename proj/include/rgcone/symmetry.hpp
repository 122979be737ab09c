#pragma once

// Unimodular symmetries with prescribed eigenrays and the finite
// generation decision built on them.

#include <optional>
#include <string>
#include <vector>

#include "rgcone/cone.hpp"
#include "rgcone/matrix.hpp"

namespace rgcone {

enum class GroupClass { Trivial, Z2, Z, InfiniteDihedral };
enum class Status { FGCertified, NotFGCertified, Unknown };

const char* to_string(GroupClass g);
const char* to_string(Status s);

/// x = D f^2 with D squarefree (D = 1 when x is a rational square).
/// x > 0.  Trial division; throws InvalidArgument past 10^18.
std::pair<Integer, Rational> squarefree_split(const Rational& x);

/// An element e of a degree-two context with e^2 = D, D squarefree, and the
/// Galois conjugation sending e to -e.  Throws NotQuadratic.
std::pair<Integer, AlgebraicNumber> quadratic_sqrt(const ContextPtr& ctx);

/// Rational basis of E_C(Q): rational matrices having every ray as an
/// eigenvector.  Contains the identity.
std::vector<QMatrix> eigen_subspace(const std::vector<FVector>& rays);

/// Eigenvalue of A on u, or nullopt when u is not an eigenvector.
std::optional<AlgebraicNumber> eigenvalue_on(const FMatrix& a, const FVector& u);

struct UnitInfo {
  Integer D = 0;
  Rational unit_a, unit_b;  // fundamental norm-one unit a + b sqrt(D)
  long power = 0;           // smallest power making the matrix integral
};

struct SymmetryCertificate {
  /// Group generators used for the generating set: unimodular, every ray an
  /// eigenvector with positive eigenvalue.
  std::vector<QMatrix> generators;
  /// Eigenvalues of each generator, following the ray order.
  std::vector<FVector> eigenvalues;
  std::vector<UnitInfo> units;  // aligned with generators when built from units
  std::vector<QMatrix> switchers;
  std::optional<GroupClass> group_class;  // planar cones only
  /// Rational matrix with every ray as eigenvector and distinct positive
  /// eigenvalues, when one was needed to certify.
  std::optional<QMatrix> generating_matrix;
  std::optional<FVector> generating_eigenvalues;

  const QMatrix* fixing_generator() const { return generators.empty() ? nullptr : &generators.front(); }
};

struct Verdict {
  Status status = Status::Unknown;
  std::string reason_tag;
  std::string reason;
  std::optional<SymmetryCertificate> certificate;
  bool reduced_confidence = false;
  std::vector<std::string> warnings;
};

struct SuppliedReport {
  bool square = false;  // and dimension matches
  bool integral = false;
  bool unimodular = false;
  bool non_identity = false;
  std::vector<bool> eigen;  // per ray
  bool positive = false;
  bool distinct_irrational = false;
  FVector eigenvalues;  // per ray where defined (zero otherwise)

  bool necessary_ok() const;   // unimodular non-identity, positive eigenrays
  bool sufficient_ok() const;  // additionally distinct on irrational rays
};

struct DecideOptions {
  std::optional<QMatrix> supplied;
  long search_bound = 2;
  long power_cap = 64;
};

// Planar pointed cones -------------------------------------------------------

/// Generator of the positive-eigenvalue unimodular matrices fixing both
/// rays, normalized so that entry (0,1) is positive.  Nullopt when only
/// the identity fixes them.  Throws CapExceeded when no unit power up to
/// the cap is integral.
std::optional<QMatrix> find_fixing_matrix_2d(const Cone& c, long cap = 64, UnitInfo* info = nullptr);

/// Integral involution mapping each ray onto the other with positive scale.
std::optional<QMatrix> find_switcher_2d(const Cone& c, long cap = 64);

SymmetryCertificate classify_group_2d(const Cone& c, long cap = 64);

Verdict decide_2d(const Cone& c, long cap = 64);
Verdict decide_halfspace(const Cone& c, long cap = 64);
Verdict decide_3d(const Cone& c, const DecideOptions& opt = {});

/// Dispatch on kind and dimension.
Verdict decide(const Cone& c, const DecideOptions& opt = {});

/// Integer matrices with entries in [-bound, bound] that are unimodular and
/// have every ray as an eigenvector with positive eigenvalue (identity
/// included), in row-major lexicographic order.  bound <= 10.
std::vector<QMatrix> search_eigen_symmetry(const Cone& c, long bound);
std::vector<QMatrix> search_eigen_symmetry_serial(const Cone& c, long bound);

SuppliedReport verify_supplied(const Cone& c, const QMatrix& a);

/// Unimodular generators for a simple cone whose irrational rays come in
/// Galois-conjugate pairs over a quadratic context: one matrix per pair,
/// acting by a unit on the pair and trivially on the other rays.
/// Nullopt when the rays are not of that shape.
std::optional<SymmetryCertificate> pair_unit_generators(const Cone& c, long cap = 64);

}  // namespace rgcone
