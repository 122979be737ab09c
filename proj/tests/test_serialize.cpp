#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgcone/errors.hpp"
#include "rgcone/plot.hpp"
#include "rgcone/serialize.hpp"

using namespace rgcone;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

Json sqrt2_cone_json() {
  return parse_json_text(R"({"dim": 2, "field": {"minpoly": [-2, 0, 1], "root_interval": ["1", "2"]},
                             "kind": "pointed", "rays": [[1, [0, 1]], [-1, [0, 1]]]})");
}

}  // namespace

TEST_CASE("value encodings") {
  CHECK(to_json(Rational(6, 4)) == "3/2");
  CHECK(to_json(Rational(-4)) == "-4");
  CHECK(rational_from_json("10/4", "x") == Rational(5, 2));
  CHECK(rational_from_json(7, "x") == 7);
  CHECK(code_of([] { rational_from_json("1/0", "x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rational_from_json("abc", "x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { integer_from_json("1/2", "x"); }) == ErrorCode::ParseError);

  Integer big("123456789012345678901234567890");
  CHECK(to_json(big) == "123456789012345678901234567890");
  CHECK(integer_from_json(to_json(big), "x") == big);

  auto ctx = FieldContext::sqrt(11);
  Json cj = to_json(ctx);
  auto back = context_from_json(cj, "field");
  CHECK(back->same_as(*ctx));
  CHECK(to_json(ContextPtr{}).is_null());
  CHECK(code_of([] { context_from_json(parse_json_text(R"({"minpoly": [-4, 0, 1], "root_interval": ["1", "3"]})"), "f"); }) ==
        ErrorCode::ParseError);

  AlgebraicNumber s = AlgebraicNumber::generator(ctx);
  AlgebraicNumber x = (8 - 3 * s) / 5;
  CHECK(to_json(x) == Json{"8/5", "-3/5"});
  CHECK(algebraic_from_json(to_json(x), ctx, "x") == x);
  CHECK(to_json(AlgebraicNumber(ctx, {Rational(2), Rational(0)})) == Json{"2"});

  QMatrix m{{3, 2}, {4, 3}};
  CHECK(qmatrix_from_json(to_json(m), "m") == m);
  CHECK(code_of([] { qmatrix_from_json(parse_json_text("[[1, 2], [3]]"), "m"); }) == ErrorCode::ParseError);
}

TEST_CASE("cone files") {
  Cone c = cone_from_json(sqrt2_cone_json());
  CHECK(c.dim() == 2);
  CHECK_FALSE(c.all_rays_rational());
  Cone again = cone_from_json(cone_to_json(c));
  CHECK(again.rays() == c.rays());
  CHECK(cone_to_json(again) == cone_to_json(c));

  Cone h = cone_from_json(parse_json_text(R"({"dim": 2, "kind": "halfspace", "rays": [[1, 2]]})"));
  CHECK(h.kind() == ConeKind::Halfspace);
  CHECK(cone_to_json(cone_from_json(cone_to_json(h))) == cone_to_json(h));

  try {
    cone_from_json(parse_json_text(R"({"dim": 2, "rays": [[1, 2], [3]]})"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("cone.rays[1]") != std::string::npos);
  }
  CHECK(code_of([] { cone_from_json(parse_json_text(R"({"rays": [[1, 2]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cone_from_json(parse_json_text(R"({"dim": 2, "kind": "fan", "rays": [[1, 0]]})")); }) ==
        ErrorCode::ParseError);
  try {
    parse_json_text("{\"dim\": 2,\n \"rays\": [[1 2]]}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("documents replay") {
  Cone c = cone_from_json(sqrt2_cone_json());
  Verdict v = decide(c);
  Json vj = verdict_to_json(c, v);
  CHECK(vj["schema"] == 1);
  CHECK(vj["status"] == "FG_certified");
  CHECK(vj["certificate"]["group_class"] == "infinite_dihedral");
  CHECK(vj["certificate"]["units"][0]["unit"] == Json{"3", "2"});
  CHECK(check_certificate(vj).ok);
  CHECK(dump(vj) == dump(verdict_to_json(cone_from_json(sqrt2_cone_json()), decide(c))));

  // tampering is caught
  Json bad = vj;
  bad["certificate"]["generators"][0][0][0] = "4";
  CHECK_FALSE(check_certificate(bad).ok);
  bad = vj;
  bad["status"] = "notFG_certified";
  CHECK_FALSE(check_certificate(bad).ok);

  GeneratingSet gs = build_generating_set(c, v);
  Json gj = generating_set_to_json(gs);
  CHECK(gj["R"] == Json{{0, 1}, {1, 2}, {2, 3}});
  CHECK(gj["pieces"][0]["P"] == Json{{0, 1}, {2, 3}});
  CHECK(check_certificate(gj).ok);
  bad = gj;
  bad["pieces"][0]["R"].erase(1);
  CHECK_FALSE(check_certificate(bad).ok);

  ZVector x{Integer(12), Integer(17)};
  Json rj = representation_to_json(gs, x, decompose_point(gs, x));
  CHECK(rj["terms"].size() == 1);
  CHECK(rj["terms"][0]["word"] == Json{1});
  CHECK(check_certificate(rj).ok);
  bad = rj;
  bad["terms"][0]["multiplicity"] = 2;
  CHECK_FALSE(check_certificate(bad).ok);

  Json wj = verify_report_to_json(gs, 10, verify_generating_set(gs, 10));
  CHECK(wj["passed"] == true);
  CHECK(check_certificate(wj).ok);

  Json fj = fermat_to_json(fermat_scan(2, 20));
  CHECK(check_certificate(fj).ok);
  bad = fj;
  bad["hits"][0] = Json{3, 4, 5};
  CHECK_FALSE(check_certificate(bad).ok);

  auto f = family_point(2);
  Json pj = family_to_json(f, check_non_subtractable(f));
  CHECK(pj["passed"] == true);
  CHECK(check_certificate(pj).ok);

  CHECK_FALSE(check_certificate(Json{{"schema", 2}, {"document", "verdict"}}).ok);
  CHECK_FALSE(check_certificate(Json{{"schema", 1}, {"document", "poem"}}).ok);
}

TEST_CASE("planar plot") {
  Cone c = cone_from_json(sqrt2_cone_json());
  GeneratingSet gs = build_generating_set(c, decide(c));
  std::string svg = plot_2d_svg(gs);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg == plot_2d_svg(gs));

  Cone three = cone_from_json(parse_json_text(R"({"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})"));
  GeneratingSet g3 = build_generating_set(three, decide(three));
  CHECK(code_of([&] { plot_2d_svg(g3); }) == ErrorCode::InvalidArgument);
}
