#include "rgcone/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rgcone/errors.hpp"

namespace rgcone {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string vec_text(const ZVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].get_str();
  return s + ")";
}

Json generators_json(const std::vector<QMatrix>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(to_json(g));
  return a;
}

std::vector<QMatrix> generators_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of matrices");
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(qmatrix_from_json(j[i], at(where, i)));
  return out;
}

// ---- replays ---------------------------------------------------------------

void need(CheckResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.ok = false;
    r.problems.push_back(what);
  }
}

void check_fixing(CheckResult& r, const Cone& c, const QMatrix& g, const std::string& name) {
  need(r, is_integral(g) && is_unimodular(g), name + " is not unimodular");
  FMatrix f = to_field(g);
  for (std::size_t k = 0; k < c.rays().size(); ++k) {
    auto l = eigenvalue_on(f, c.rays()[k]);
    need(r, l && l->sign() > 0, name + " does not fix ray " + std::to_string(k) + " with positive eigenvalue");
  }
}

void check_verdict(CheckResult& r, const Json& doc) {
  Cone c = cone_from_json(field(doc, "cone", "document"));
  const std::string status = field(doc, "status", "document").get<std::string>();
  Verdict again = decide(c);
  need(r, status == to_string(again.status), "status " + status + " does not replay (got " + to_string(again.status) + ")");
  const Json& cert = field(doc, "certificate", "document");
  if (cert.is_null()) return;
  auto gens = generators_from_json(field(cert, "generators", "certificate"), "certificate.generators");
  const Json& eig = field(cert, "eigenvalues", "certificate");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    check_fixing(r, c, gens[g], "generator " + std::to_string(g));
    FMatrix f = to_field(gens[g]);
    for (std::size_t k = 0; k < c.rays().size() && g < eig.size(); ++k) {
      auto l = eigenvalue_on(f, c.rays()[k]);
      AlgebraicNumber rec = algebraic_from_json(eig[g].at(k), c.context(), "certificate.eigenvalues");
      need(r, l && *l == rec, "recorded eigenvalue " + std::to_string(g) + "," + std::to_string(k) + " is wrong");
    }
  }
  auto sw = generators_from_json(field(cert, "switchers", "certificate"), "certificate.switchers");
  for (std::size_t s = 0; s < sw.size(); ++s) {
    need(r, is_integral(sw[s]) && is_unimodular(sw[s]), "switcher is not unimodular");
    FMatrix f = to_field(sw[s]);
    for (const auto& u : c.rays()) {
      FVector img = f * u;
      bool onto = false;
      for (const auto& w : c.rays()) {
        // img = mu w with mu > 0
        std::size_t p = 0;
        while (p < w.size() && w[p].is_zero()) ++p;
        if (p == w.size() || img[p].is_zero()) continue;
        AlgebraicNumber mu = img[p] / w[p];
        onto = onto || (mu.sign() > 0 && img == scaled(w, mu));
      }
      need(r, onto, "switcher does not map rays onto rays");
    }
  }
  const Json& gm = field(cert, "generating_matrix", "certificate");
  if (!gm.is_null()) {
    QMatrix m = qmatrix_from_json(gm, "certificate.generating_matrix");
    FMatrix f = to_field(m);
    std::vector<AlgebraicNumber> ls;
    for (const auto& u : c.rays()) {
      auto l = eigenvalue_on(f, u);
      need(r, l && l->sign() > 0, "generating matrix lacks a positive eigenray");
      if (l) ls.push_back(*l);
    }
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t k = i + 1; k < ls.size(); ++k) need(r, ls[i] != ls[k], "generating matrix eigenvalues repeat");
  }
}

void check_generating_set(CheckResult& r, const Json& doc) {
  Cone c = cone_from_json(field(doc, "cone", "document"));
  auto gens = generators_from_json(field(doc, "generators", "document"), "generators");
  for (std::size_t g = 0; g < gens.size(); ++g) check_fixing(r, c, gens[g], "generator " + std::to_string(g));
  const Json& pieces = field(doc, "pieces", "document");
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const std::string w = at("pieces", p);
    std::vector<IVec> P, R;
    for (const auto& v : field(pieces[p], "P", w)) P.push_back(v.get<IVec>());
    for (const auto& v : field(pieces[p], "R", w)) R.push_back(v.get<IVec>());
    for (const auto& v : P) need(r, c.contains(ZVector(v.begin(), v.end())), w + ": P ray outside the cone");
    auto hb = hilbert_basis(RationalCone(P));
    need(r, hb.elements == R, w + ": R is not the Hilbert basis of P");
  }
  for (const auto& e : field(doc, "extensions", "document"))
    need(r, c.contains(zvector_from_json(e, "extensions")), "extension outside the cone");
}

void check_representation(CheckResult& r, const Json& doc) {
  Cone c = cone_from_json(field(doc, "cone", "document"));
  auto gens = generators_from_json(field(doc, "generators", "document"), "generators");
  for (std::size_t g = 0; g < gens.size(); ++g) check_fixing(r, c, gens[g], "generator " + std::to_string(g));
  ZVector x = zvector_from_json(field(doc, "point", "document"), "point");
  need(r, c.contains(x), "point outside the cone");
  ZVector sum(x.size(), Integer(0));
  for (const auto& t : field(doc, "terms", "document")) {
    Integer m = integer_from_json(field(t, "multiplicity", "term"), "term.multiplicity");
    need(r, m > 0, "nonpositive multiplicity");
    ZVector e = zvector_from_json(field(t, "element", "term"), "term.element");
    need(r, c.contains(e), "term element outside the cone");
    auto word = field(t, "word", "term").get<std::vector<long>>();
    QVector y(e.begin(), e.end());
    for (std::size_t g = 0; g < word.size() && g < gens.size(); ++g) {
      QMatrix step = word[g] >= 0 ? gens[g] : inverse(gens[g]);
      for (long k = 0; k < std::labs(word[g]); ++k) y = step * y;
    }
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] += m * y[i].get_num();
  }
  need(r, sum == x, "terms do not reconstruct the point");
}

void check_verify_report(CheckResult& r, const Json& doc) {
  Cone c = cone_from_json(field(doc, "cone", "document"));
  long bound = field(doc, "bound", "document").get<long>();
  auto gs = build_generating_set(c, decide(c));
  auto again = verify_generating_set(gs, bound);
  need(r, field(doc, "points", "document").get<long>() == again.points, "point count does not replay");
  need(r, field(doc, "decomposed", "document").get<long>() == again.decomposed, "decomposed count does not replay");
  need(r, field(doc, "extensions", "document").get<long>() == again.extensions, "extension count does not replay");
}

void check_fermat(CheckResult& r, const Json& doc) {
  long k = field(doc, "k", "document").get<long>();
  for (const auto& h : field(doc, "hits", "document")) {
    Integer x = integer_from_json(h.at(0), "hit"), y = integer_from_json(h.at(1), "hit"),
            z = integer_from_json(h.at(2), "hit");
    Integer px, py, pz;
    mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(2 * k));
    mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(2 * k));
    mpz_pow_ui(pz.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(2 * k));
    need(r, px + py == pz, "hit " + vec_text({x, y, z}) + " is not on the boundary");
  }
  auto again = fermat_scan_serial(k, field(doc, "z_max", "document").get<long>());
  need(r, fermat_to_json(again)["hits"] == field(doc, "hits", "document"), "hit list does not replay");
}

void check_family(CheckResult& r, const Json& doc) {
  auto f = family_point(field(doc, "n1", "document").get<long>());
  auto s = check_non_subtractable(f);
  need(r, family_to_json(f, s) == doc, "family report does not replay");
}

}  // namespace

// ---- values ----------------------------------------------------------------

Json to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const AlgebraicNumber& x) {
  Json a = Json::array();
  std::size_t d = x.context() ? static_cast<std::size_t>(x.context()->degree()) : 1;
  while (d > 1 && x.coeff(d - 1) == 0) --d;
  for (std::size_t i = 0; i < d; ++i) a.push_back(to_json(x.coeff(i)));
  return a;
}

Json to_json(const ContextPtr& ctx) {
  if (!ctx || ctx->degree() <= 1) return nullptr;
  Json mp = Json::array();
  for (const auto& c : ctx->minpoly()) mp.push_back(to_json(c));
  return Json{{"minpoly", mp}, {"root_interval", {to_json(ctx->lo()), to_json(ctx->hi())}}};
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const FMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const ZVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const FVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IVec& v) { return Json(v); }

Rational rational_from_json(const Json& j, const std::string& where) {
  Rational q;
  if (j.is_number_integer()) {
    q = Rational(j.get<long>());
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || q.set_str(s, 10) != 0) bad(where, "malformed rational \"" + s + "\"");
    if (q.get_den() == 0) bad(where, "zero denominator");
  } else {
    bad(where, "expected an integer or a \"num/den\" string");
  }
  q.canonicalize();
  return q;
}

Integer integer_from_json(const Json& j, const std::string& where) {
  Rational q = rational_from_json(j, where);
  if (q.get_den() != 1) bad(where, "expected an integer");
  return q.get_num();
}

AlgebraicNumber algebraic_from_json(const Json& j, const ContextPtr& ctx, const std::string& where) {
  if (!j.is_array()) return AlgebraicNumber(rational_from_json(j, where));
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(where, i)));
  if (c.empty()) bad(where, "empty coefficient list");
  const std::size_t d = ctx ? static_cast<std::size_t>(ctx->degree()) : 1;
  if (c.size() > d) bad(where, "more coefficients than the field degree");
  if (!ctx) return AlgebraicNumber(c[0]);
  return AlgebraicNumber(ctx, c);
}

ContextPtr context_from_json(const Json& j, const std::string& where) {
  if (j.is_null()) return nullptr;
  const Json& mp = field(j, "minpoly", where);
  const Json& iv = field(j, "root_interval", where);
  if (!mp.is_array()) bad(where + ".minpoly", "expected a list of integers");
  if (!iv.is_array() || iv.size() != 2) bad(where + ".root_interval", "expected [lo, hi]");
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < mp.size(); ++i) coeffs.push_back(integer_from_json(mp[i], at(where + ".minpoly", i)));
  try {
    return FieldContext::make(coeffs, rational_from_json(iv[0], where + ".root_interval[0]"),
                              rational_from_json(iv[1], where + ".root_interval[1]"));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

QMatrix qmatrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where, "expected a nonempty list of rows");
  const std::size_t n = j.size(), m = j[0].is_array() ? j[0].size() : 0;
  QMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m) bad(at(where, i), "ragged row");
    for (std::size_t k = 0; k < m; ++k) out(i, k) = rational_from_json(j[i][k], at(at(where, i), k));
  }
  return out;
}

ZVector zvector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of integers");
  ZVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], at(where, i)));
  return v;
}

// ---- cones -----------------------------------------------------------------

Cone cone_from_json(const Json& j) {
  const std::string w = "cone";
  const Json& dim = field(j, "dim", w);
  if (!dim.is_number_integer()) bad("cone.dim", "expected an integer");
  const long n = dim.get<long>();
  ContextPtr ctx = j.contains("field") ? context_from_json(j["field"], "cone.field") : nullptr;
  std::string kind = "pointed";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) bad("cone.kind", "expected \"pointed\" or \"halfspace\"");
    kind = j["kind"].get<std::string>();
    if (kind != "pointed" && kind != "halfspace") bad("cone.kind", "unknown kind \"" + kind + "\"");
  }
  const Json& rays = field(j, "rays", w);
  if (!rays.is_array() || rays.empty()) bad("cone.rays", "expected a nonempty list of vectors");
  std::vector<FVector> rv;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string wi = at("cone.rays", i);
    if (!rays[i].is_array() || static_cast<long>(rays[i].size()) != n)
      bad(wi, "expected " + std::to_string(n) + " entries");
    FVector v;
    for (std::size_t k = 0; k < rays[i].size(); ++k) v.push_back(algebraic_from_json(rays[i][k], ctx, at(wi, k)));
    rv.push_back(v);
  }
  try {
    if (kind == "halfspace") {
      if (rv.size() != 1) bad("cone.rays", "a half-space takes exactly one boundary ray");
      std::optional<FVector> normal;
      if (j.contains("normal")) {
        FVector nv;
        for (std::size_t k = 0; k < j["normal"].size(); ++k)
          nv.push_back(algebraic_from_json(j["normal"][k], ctx, at("cone.normal", k)));
        normal = nv;
      }
      return Cone::halfspace(ctx, rv[0], normal);
    }
    return Cone::pointed(ctx, rv);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), std::string("cone: ") + e.what());
  }
}

Json cone_to_json(const Cone& c) {
  Json j;
  j["dim"] = c.dim();
  j["field"] = to_json(c.context());
  j["kind"] = c.kind() == ConeKind::Pointed ? "pointed" : "halfspace";
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  j["rays"] = rays;
  if (c.kind() == ConeKind::Halfspace) j["normal"] = to_json(c.normal());
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// ---- documents -------------------------------------------------------------

Json verdict_to_json(const Cone& c, const Verdict& v) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "verdict";
  j["cone"] = cone_to_json(c);
  j["status"] = to_string(v.status);
  j["reason_tag"] = v.reason_tag;
  j["reason"] = v.reason;
  j["reduced_confidence"] = v.reduced_confidence;
  j["warnings"] = v.warnings;
  if (!v.certificate) {
    j["certificate"] = nullptr;
    return j;
  }
  const auto& cert = *v.certificate;
  Json cj;
  cj["generators"] = generators_json(cert.generators);
  Json eig = Json::array();
  for (const auto& e : cert.eigenvalues) eig.push_back(to_json(e));
  cj["eigenvalues"] = eig;
  Json units = Json::array();
  for (const auto& u : cert.units)
    units.push_back({{"D", to_json(u.D)}, {"unit", {to_json(u.unit_a), to_json(u.unit_b)}}, {"power", u.power}});
  cj["units"] = units;
  cj["switchers"] = generators_json(cert.switchers);
  cj["group_class"] = cert.group_class ? Json(to_string(*cert.group_class)) : Json(nullptr);
  cj["generating_matrix"] = cert.generating_matrix ? to_json(*cert.generating_matrix) : Json(nullptr);
  cj["generating_eigenvalues"] = cert.generating_eigenvalues ? to_json(*cert.generating_eigenvalues) : Json(nullptr);
  j["certificate"] = cj;
  return j;
}

Json generating_set_to_json(const GeneratingSet& gs) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "generating_set";
  j["cone"] = cone_to_json(*gs.cone);
  j["generators"] = generators_json(gs.generators);
  Json pieces = Json::array();
  for (const auto& p : gs.pieces) {
    Json pj;
    auto P = p.P.rays();
    std::sort(P.begin(), P.end());
    pj["P"] = P;
    pj["R"] = p.R.elements;
    Json blocks = Json::array();
    for (const auto& b : p.blocks) blocks.push_back({{"generator", b.generator}, {"rays", {b.ray_i, b.ray_j}}});
    pj["blocks"] = blocks;
    pj["sector"] = cone_to_json(p.cone);
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  Json R = Json::array();
  for (const auto& e : gs.elements()) R.push_back(to_json(e));
  j["R"] = R;
  Json ext = Json::array();
  for (const auto& e : gs.extensions) ext.push_back(to_json(e));
  j["extensions"] = ext;
  j["version"] = gs.version;
  j["log"] = gs.log;
  return j;
}

Json representation_to_json(const GeneratingSet& gs, const ZVector& point, const Representation& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "representation";
  j["cone"] = cone_to_json(*gs.cone);
  j["generators"] = generators_json(gs.generators);
  j["point"] = to_json(point);
  Json terms = Json::array();
  for (const auto& t : rep.terms)
    terms.push_back({{"multiplicity", to_json(t.multiplicity)}, {"word", t.word}, {"element", to_json(t.element)}});
  j["terms"] = terms;
  j["extensions_used"] = gs.extensions.size();
  return j;
}

Json verify_report_to_json(const GeneratingSet& gs, long bound, const VerifyReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "verify_report";
  j["cone"] = cone_to_json(*gs.cone);
  j["bound"] = bound;
  j["points"] = r.points;
  j["decomposed"] = r.decomposed;
  j["extensions"] = r.extensions;
  j["max_word"] = r.max_word;
  j["failures"] = r.failures;
  j["passed"] = r.failures.empty() && r.decomposed == r.points;
  return j;
}

Json fermat_to_json(const FermatScanResult& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "fermat_scan";
  j["k"] = r.k;
  j["z_max"] = r.z_max;
  Json hits = Json::array();
  for (const auto& h : r.hits) hits.push_back({to_json(h[0]), to_json(h[1]), to_json(h[2])});
  j["hits"] = hits;
  j["only_trivial"] = r.only_trivial();
  return j;
}

Json family_to_json(const FamilyCheck& f, const SubtractionReport& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "family_point";
  j["n1"] = f.n1;
  j["field"] = to_json(FieldContext::sqrt(2));
  j["alpha"] = to_json(f.alpha);
  Json a = Json::array(), b = Json::array();
  for (const auto& x : f.a) a.push_back(to_json(x));
  for (const auto& x : f.b) b.push_back(to_json(x));
  j["a"] = a;
  j["b"] = b;
  j["v"] = to_json(f.v);
  j["ratio"] = to_json(f.ratio);
  j["checks"] = f.checks;
  Json sub;
  sub["non_subtractable"] = s.non_subtractable;
  sub["product_argument"] = s.product_argument;
  sub["a_range"] = {s.a_min, s.a_max};
  sub["b_range"] = {s.b_min, s.b_max};
  Json found = Json::array();
  for (const auto& [x, y] : s.subtractable) found.push_back({x, y});
  sub["subtractable"] = found;
  j["subtraction"] = sub;
  j["passed"] = f.all_passed() && s.non_subtractable && s.product_argument;
  return j;
}

Json four_dim_to_json(long search_bound) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["document"] = "four_dim";
  Cone c = build_4d_cone(), sub = build_4d_subcone();
  j["cone"] = cone_to_json(c);
  j["subcone"] = cone_to_json(sub);
  const QMatrix A = four_dim_block();
  j["block"] = to_json(A);
  const FMatrix M = four_dim_rays();
  const AlgebraicNumber s2 = M(1, 0);
  Json checks;
  bool eig = true;
  for (std::size_t k = 0; k < 4; ++k) eig = eig && verify_eigen(to_field(A), M.column(k), k < 2 ? 3 + 2 * s2 : 3 - 2 * s2);
  checks["block_eigenvalues"] = eig;
  checks["ray_matrix_invertible"] = !det(M).is_zero();
  checks["r1_decomposition"] = M * FVector{Rational(1, 2), 0, Rational(1, 2), 1} == FVector{1, 0, 0, 0};
  checks["r4_decomposition"] = M * FVector{Rational(1, 2), Rational(1, 2), 0, Rational(1, 2)} == FVector{1, 0, 1, 0};
  checks["boundary_forms_integral"] = cross_validate_boundary_forms(5);
  auto found = search_eigen_symmetry(sub, search_bound);
  bool block_only = std::all_of(found.begin(), found.end(), [](const QMatrix& B) {
    return B(0, 0) == B(1, 1) && B(1, 0) == 2 * B(0, 1) && B(2, 2) == B(0, 0) && B(2, 3) == B(0, 1) &&
           B(3, 2) == B(1, 0) && B(3, 3) == B(0, 0) && B(0, 2) == 0 && B(0, 3) == 0 && B(1, 2) == 0 && B(1, 3) == 0 &&
           B(2, 0) == 0 && B(2, 1) == 0 && B(3, 0) == 0 && B(3, 1) == 0;
  });
  checks["subcone_symmetries_block_pell"] = block_only;
  j["checks"] = checks;
  j["search_bound"] = search_bound;
  j["subcone_symmetries"] = generators_json(found);
  Verdict v = decide(c);
  j["cone_status"] = to_string(v.status);
  j["passed"] = std::all_of(checks.begin(), checks.end(), [](const Json& b) { return b.get<bool>(); });
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CheckResult check_certificate(const Json& doc) {
  CheckResult r;
  try {
    if (!doc.is_object()) bad("document", "expected an object");
    if (field(doc, "schema", "document") != kSchemaVersion) bad("document.schema", "unsupported schema version");
    const std::string kind = field(doc, "document", "document").get<std::string>();
    if (kind == "verdict") check_verdict(r, doc);
    else if (kind == "generating_set") check_generating_set(r, doc);
    else if (kind == "representation") check_representation(r, doc);
    else if (kind == "verify_report") check_verify_report(r, doc);
    else if (kind == "fermat_scan") check_fermat(r, doc);
    else if (kind == "family_point") check_family(r, doc);
    else if (kind == "four_dim") need(r, four_dim_to_json(field(doc, "search_bound", "document").get<long>()) == doc,
                                      "four-dimensional report does not replay");
    else bad("document.document", "unknown document type \"" + kind + "\"");
  } catch (const Error& e) {
    r.ok = false;
    r.problems.push_back(std::string(to_string(e.code())) + ": " + e.what());
  } catch (const Json::exception& e) {
    r.ok = false;
    r.problems.push_back(std::string("ParseError: ") + e.what());
  }
  return r;
}

}  // namespace rgcone
