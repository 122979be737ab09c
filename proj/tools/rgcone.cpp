// rgcone: decide finite generation up to symmetry for cones with
// real-algebraic rays, and emit certificates as JSON.
//
// Exit codes: analyze returns 0 (FG_certified), 1 (notFG_certified),
// 2 (unknown); other verbs return 0 on success and 1 when a check fails.
// Errors exit with 3 and name the error code on stderr.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rgcone/errors.hpp"
#include "rgcone/plot.hpp"
#include "rgcone/serialize.hpp"

using namespace rgcone;

namespace {

constexpr int kExitError = 3;

Json json_arg(const std::string& text) {
  // inline JSON or a file holding it
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) return parse_json_text(text);
  return read_json_file(text);
}

int exit_for(Status s) {
  switch (s) {
    case Status::FGCertified: return 0;
    case Status::NotFGCertified: return 1;
    case Status::Unknown: return 2;
  }
  return kExitError;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

struct Options {
  std::string cone, point, supplied, plot, check;
  long search_bound = 2, power_cap = 64, bound = 20, k = 2, z_max = 100, n1 = 0, lab_bound = 4;
  bool serial = false;
};

GeneratingSet certified_set(const Cone& c, const Options& o) {
  DecideOptions d;
  d.search_bound = o.search_bound;
  d.power_cap = o.power_cap;
  Verdict v = decide(c, d);
  return build_generating_set(c, v);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("RGCONE_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Finite generation of conical semigroups up to unimodular symmetry"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_option("--check", o.check, "Re-verify an emitted JSON document")->check(CLI::ExistingFile);

  auto* analyze = app.add_subcommand("analyze", "Decide (R,G)-finite generation and print the verdict");
  analyze->add_option("cone", o.cone, "Cone description (JSON file)")->required()->check(CLI::ExistingFile);
  analyze->add_option("--search-bound", o.search_bound, "Entry bound for the symmetry search")->capture_default_str();
  analyze->add_option("--power-cap", o.power_cap, "Cap on unit powers")->capture_default_str();
  analyze->add_option("--supplied", o.supplied, "Candidate matrix: inline JSON or file");

  auto* generators = app.add_subcommand("generators", "Print a generating set (R, G)");
  generators->add_option("cone", o.cone, "Cone description (JSON file)")->required()->check(CLI::ExistingFile);
  generators->add_option("--power-cap", o.power_cap, "Cap on unit powers")->capture_default_str();
  generators->add_option("--plot", o.plot, "Write an SVG picture (planar cones)");

  auto* decompose = app.add_subcommand("decompose", "Represent one integer point");
  decompose->add_option("cone", o.cone, "Cone description (JSON file)")->required()->check(CLI::ExistingFile);
  decompose->add_option("point", o.point, "Integer point as a JSON list, e.g. [12,17]")->required();

  auto* verify = app.add_subcommand("verify", "Decompose every cone point in a box");
  verify->add_option("cone", o.cone, "Cone description (JSON file)")->required()->check(CLI::ExistingFile);
  verify->add_option("--bound", o.bound, "Box half-width")->capture_default_str();
  verify->add_flag("--serial", o.serial, "Use the single-threaded kernel");

  auto* lab = app.add_subcommand("lab", "Checks on the non-generation examples");
  lab->require_subcommand(1);
  auto* fermat = lab->add_subcommand("fermat", "Scan x^2k + y^2k = z^2k");
  fermat->add_option("--k", o.k, "Exponent parameter")->capture_default_str();
  fermat->add_option("--zmax", o.z_max, "Largest z")->capture_default_str();
  auto* family = lab->add_subcommand("family", "Family point of the four-dimensional cone");
  family->add_option("--n1", o.n1, "Family index")->capture_default_str();
  auto* four = lab->add_subcommand("four-dim", "Eigen-structure of the four-dimensional cones");
  four->add_option("--bound", o.lab_bound, "Entry bound for the sub-cone symmetry search")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (!o.check.empty()) {
      if (app.get_subcommands().size() > 0) throw Error(ErrorCode::InvalidArgument, "--check takes no verb");
      CheckResult r = check_certificate(read_json_file(o.check));
      for (const auto& p : r.problems) std::cerr << "check: " << p << "\n";
      std::cout << (r.ok ? "ok\n" : "FAILED\n");
      return r.ok ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return kExitError;
    }

    if (analyze->parsed()) {
      Cone c = cone_from_json(read_json_file(o.cone));
      DecideOptions d;
      d.search_bound = o.search_bound;
      d.power_cap = o.power_cap;
      if (!o.supplied.empty()) d.supplied = qmatrix_from_json(json_arg(o.supplied), "supplied");
      Verdict v = decide(c, d);
      std::cout << dump(verdict_to_json(c, v));
      return exit_for(v.status);
    }
    if (generators->parsed()) {
      Cone c = cone_from_json(read_json_file(o.cone));
      GeneratingSet gs = certified_set(c, o);
      if (!o.plot.empty()) write_text(o.plot, plot_2d_svg(gs));
      std::cout << dump(generating_set_to_json(gs));
      return 0;
    }
    if (decompose->parsed()) {
      Cone c = cone_from_json(read_json_file(o.cone));
      ZVector x = zvector_from_json(parse_json_text(o.point), "point");
      if (static_cast<int>(x.size()) != c.dim()) throw Error(ErrorCode::DimensionMismatch, "point has the wrong length");
      GeneratingSet gs = certified_set(c, o);
      Representation rep = decompose_point(gs, x);
      std::cout << dump(representation_to_json(gs, x, rep));
      return 0;
    }
    if (verify->parsed()) {
      Cone c = cone_from_json(read_json_file(o.cone));
      GeneratingSet gs = certified_set(c, o);
      VerifyReport r = o.serial ? verify_generating_set_serial(gs, o.bound) : verify_generating_set(gs, o.bound);
      Json j = verify_report_to_json(gs, o.bound, r);
      std::cout << dump(j);
      return j["passed"].get<bool>() ? 0 : 1;
    }
    if (fermat->parsed()) {
      Json j = fermat_to_json(fermat_scan(o.k, o.z_max));
      std::cout << dump(j);
      return j["only_trivial"].get<bool>() ? 0 : 1;
    }
    if (family->parsed()) {
      FamilyCheck f = family_point(o.n1);
      Json j = family_to_json(f, check_non_subtractable(f));
      std::cout << dump(j);
      return j["passed"].get<bool>() ? 0 : 1;
    }
    if (four->parsed()) {
      Json j = four_dim_to_json(o.lab_bound);
      std::cout << dump(j);
      return j["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
