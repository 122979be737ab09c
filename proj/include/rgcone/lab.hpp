#pragma once

// Fixtures and exhaustive checks for two non-generation examples: the
// boundary of the Fermat cone x^2k + y^2k <= z^2k, and a simple cone in
// dimension 4 over Q(sqrt 2) whose integer points cannot be balanced.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rgcone/cone.hpp"
#include "rgcone/matrix.hpp"

namespace rgcone {

struct FermatScanResult {
  long k = 0;
  long z_max = 0;
  /// Solutions with x, y >= 0 (one representative per sign class), by z then x.
  std::vector<std::array<Integer, 3>> hits;
  bool only_trivial() const;  // every hit has x y = 0
};

/// Integer points on x^2k + y^2k = z^2k with 1 <= z <= z_max.
/// Throws InvalidArgument for k < 2, BoundTooLarge for z_max > 10^4.
FermatScanResult fermat_scan(long k, long z_max);
FermatScanResult fermat_scan_serial(long k, long z_max);

/// Columns u1..u4 over Q(sqrt 2): u1 = (e1, 0), u2 = (0, e1), u3 = (e2, 2 e2),
/// u4 = (-e2, -e2) with e1 = (1, sqrt 2), e2 = (-1, sqrt 2).
FMatrix four_dim_rays();
/// diag(C, C) with C = [[3,2],[4,3]].
QMatrix four_dim_block();
Cone build_4d_cone();
/// cone(u1, u1 + u2, u3, u3 + u4).
Cone build_4d_subcone();

/// The family point with index n1: alpha2 = (sqrt2 - 1)^(2 n1 + 1) / 2,
/// alpha4 = 1/2, alpha1 = (alpha2 + conj alpha4) / 2,
/// alpha3 = (alpha4 - conj alpha2) / 2.
struct FamilyCheck {
  long n1 = 0;
  FVector alpha;
  /// alpha_i = a_i / 2 + b_i sqrt2 / 4.
  std::array<Integer, 4> a, b;
  ZVector v;
  AlgebraicNumber ratio;  // alpha1 / alpha2
  std::map<std::string, bool> checks;
  bool all_passed() const;
};

/// Throws InvalidArgument for n1 < 0, IndexTooLarge for n1 > 20.
FamilyCheck family_point(long n1);

struct SubtractionReport {
  bool non_subtractable = false;
  /// Nonzero (a, b) whose boundary vector (conj s, 0, s, 2 s) fits below alpha.
  std::vector<std::pair<long, long>> subtractable;
  long a_min = 0, a_max = 0, b_min = 0, b_max = 0;
  /// alpha1 alpha4 < 1/4 and 0 <= 2a^2 - b^2 < 1 has only a = b = 0 in range.
  bool product_argument = false;
};

/// Enumerates s = a/2 + b sqrt2 / 4 with 0 <= conj s <= alpha1,
/// 0 <= s <= alpha3, 0 <= 2 s <= alpha4.
SubtractionReport check_non_subtractable(const FVector& alpha);
inline SubtractionReport check_non_subtractable(const FamilyCheck& f) { return check_non_subtractable(f.alpha); }

/// Integer points with one eigen-coordinate zero: beta_j = coeff_j * s or
/// coeff_j * conj s, with s = a/2 + b sqrt2 / 4.
struct BoundaryForm {
  int zero = 0;
  std::array<int, 4> coeff{};
  std::array<bool, 4> conj{};
  FVector beta(long a, long b) const;
};

std::vector<BoundaryForm> boundary_forms();

/// Checks every form on (a, b) in [-range, range]^2: M beta is integral and
/// satisfies the lattice constraints of the cone.
bool cross_validate_boundary_forms(long range);

}  // namespace rgcone
