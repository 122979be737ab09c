#pragma once

// Finite generating sets up to symmetry: a rational sub-cone P with its
// Hilbert basis R, unimodular generators G, balancing of integer points
// into P, and representations x = sum m * G^w r.

#include <memory>
#include <string>
#include <vector>

#include "rgcone/cone.hpp"
#include "rgcone/hilbert.hpp"
#include "rgcone/symmetry.hpp"

namespace rgcone {

/// Generator `generator` scales rays ray_i and ray_j of the piece cone and
/// fixes its other rays.
struct Block {
  std::size_t generator = 0;
  std::size_t ray_i = 0, ray_j = 0;
};

struct Piece {
  Cone cone;  // part of C the piece is responsible for (simple unless rational)
  RationalCone P;
  HilbertBasis R;
  std::vector<Block> blocks;
  std::vector<double> center;  // log ratio at the middle of each block's window
  std::vector<double> step;    // log ratio change per generator power
};

struct GeneratingSet {
  std::shared_ptr<const Cone> cone;
  std::vector<QMatrix> generators;
  std::vector<QMatrix> inverses;
  std::vector<Piece> pieces;
  /// Points added by saturation; versions count extension events.
  std::vector<ZVector> extensions;
  int version = 0;
  std::vector<std::string> log;

  /// Union of the piece bases and extensions, lexicographic.
  std::vector<ZVector> elements() const;
};

struct Term {
  Integer multiplicity;
  std::vector<long> word;  // exponents over generators
  ZVector element;
};

struct Representation {
  std::vector<Term> terms;
};

struct BalanceResult {
  std::vector<long> word;
  ZVector y;
  std::size_t piece = 0;
};

/// P = cone(t, A t) with t the first primitive interior point of C in
/// max-norm then lexicographic order.  Throws InvalidArgument for A = I.
RationalCone build_P_2d(const Cone& c, const QMatrix& A);

/// P for a simple cone whose generators each act on one pair of rays:
/// rational rays plus (t, G t) on every pair face.  Throws LogDependence.
RationalCone build_P_simple(const Cone& c, const std::vector<QMatrix>& gens, std::vector<Block>* blocks = nullptr);

/// Exact test for small multiplicative relations prod lambda_g^m_g = 1,
/// |m_g| <= 8, plus a floating rank check on the logs.
bool log_independent(const std::vector<FVector>& eigenvalues);

/// Throws NotFG unless the verdict is FG_certified; ContextDegreeUnsupported
/// when no construction is available for the certificate's shape.
GeneratingSet build_generating_set(const Cone& c, const Verdict& v);

ZVector apply_word(const GeneratingSet& gs, const std::vector<long>& word, const ZVector& x);

/// Word w with G^w x in some piece's P.  Among feasible words near the
/// log estimate the one with least L1 norm wins, then lexicographic order.
/// Throws NotInCone, BalanceCapExceeded.
BalanceResult balance(const GeneratingSet& gs, const ZVector& x, long cap = 1000);

/// Representation of x, or nullopt when x would need a saturation step.
std::optional<Representation> try_decompose(const GeneratingSet& gs, const ZVector& x);

/// Same, extending R when needed (at most 64 extensions).  Throws
/// NotInCone, SaturationCapExceeded.
Representation decompose_point(GeneratingSet& gs, const ZVector& x);

/// Sum of m * G^w r.
ZVector reconstruct(const GeneratingSet& gs, const Representation& rep);

struct VerifyReport {
  long points = 0;
  long decomposed = 0;
  long extensions = 0;
  long max_word = 0;  // largest |exponent| used
  std::vector<std::string> failures;
};

/// Decomposes every integer point of C in [-bound, bound]^n.
VerifyReport verify_generating_set(GeneratingSet& gs, long bound);
VerifyReport verify_generating_set_serial(GeneratingSet& gs, long bound);

}  // namespace rgcone
