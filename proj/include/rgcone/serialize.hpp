#pragma once

// JSON encodings.  Rationals are "num/den" strings in lowest terms (plain
// "n" for integers), algebraic numbers are coefficient lists over the field
// generator without trailing zeros, matrices are row-major lists of entries.  Objects use sorted
// keys, so identical inputs give byte-identical output.

#include <string>
#include <vector>

#include "json.hpp"
#include "rgcone/generation.hpp"
#include "rgcone/lab.hpp"
#include "rgcone/symmetry.hpp"

namespace rgcone {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const AlgebraicNumber& x);
Json to_json(const ContextPtr& ctx);  // null for the rationals
Json to_json(const QMatrix& m);
Json to_json(const FMatrix& m);
Json to_json(const ZVector& v);
Json to_json(const FVector& v);
Json to_json(const IVec& v);

/// Parsers throw ParseError naming the offending field.
Rational rational_from_json(const Json& j, const std::string& where);
Integer integer_from_json(const Json& j, const std::string& where);
AlgebraicNumber algebraic_from_json(const Json& j, const ContextPtr& ctx, const std::string& where);
ContextPtr context_from_json(const Json& j, const std::string& where);
QMatrix qmatrix_from_json(const Json& j, const std::string& where);
ZVector zvector_from_json(const Json& j, const std::string& where);

/// {"dim", "field", "kind", "rays"[, "normal"]}.
Cone cone_from_json(const Json& j);
Json cone_to_json(const Cone& c);
/// Reads and parses a file; syntax errors carry line and column.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

Json verdict_to_json(const Cone& c, const Verdict& v);
Json generating_set_to_json(const GeneratingSet& gs);
Json representation_to_json(const GeneratingSet& gs, const ZVector& point, const Representation& rep);
Json verify_report_to_json(const GeneratingSet& gs, long bound, const VerifyReport& r);
Json fermat_to_json(const FermatScanResult& r);
Json family_to_json(const FamilyCheck& f, const SubtractionReport& s);
/// Eigen-structure of the four-dimensional cones, the symmetry search on the
/// sub-cone and the boundary-form cross-check.
Json four_dim_to_json(long search_bound);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-parses an emitted document and replays its exact verifications.
CheckResult check_certificate(const Json& doc);

}  // namespace rgcone
