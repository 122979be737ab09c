#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(RGCONE_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string cone(const char* name) { return std::string(CONES_DIR) + "/" + name; }

std::string save(const std::string& text, const char* name) {
  std::string path = std::string(TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("analyze exit codes and certificates") {
  auto r = run("analyze " + cone("sqrt2_dihedral.json"));
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["status"] == "FG_certified");
  CHECK(j["certificate"]["group_class"] == "infinite_dihedral");
  CHECK(j["certificate"]["generators"][0] == Json::parse(R"([["3","2"],["4","3"]])"));
  CHECK(j["certificate"]["switchers"].size() == 1);

  r = run("analyze " + cone("rational_trivial.json"));
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["certificate"]["group_class"] == "trivial");
  r = run("analyze " + cone("rational_z2.json"));
  CHECK(Json::parse(r.out)["certificate"]["group_class"] == "Z2");
  r = run("analyze " + cone("sqrt11_cyclic.json"));
  CHECK(Json::parse(r.out)["certificate"]["generators"][0] == Json::parse(R"([["2","5"],["7","18"]])"));

  CHECK(run("analyze " + cone("four_rays_3d.json")).code == 1);
  r = run("analyze " + cone("four_dim.json"));
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["reason"] == "dim >= 4 undecided");

  r = run("analyze " + cone("halfplane_sqrt3.json"));
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["certificate"]["generators"][0] == Json::parse(R"([["2","1"],["3","2"]])"));
}

TEST_CASE("output is deterministic and replays") {
  for (const char* name : {"sqrt2_dihedral.json", "sqrt11_cyclic.json", "block_3d.json", "four_dim.json"}) {
    auto a = run("analyze " + cone(name));
    auto b = run("analyze " + cone(name));
    CHECK(a.out == b.out);
    auto path = save(a.out, "verdict.json");
    CHECK(run("--check " + path).code == 0);
  }
}

TEST_CASE("generators, decompose, verify") {
  std::string svg = std::string(TMP_DIR) + "/plot.svg";
  auto r = run("generators " + cone("sqrt2_dihedral.json") + " --plot " + svg);
  CHECK(r.code == 0);
  Json g = Json::parse(r.out);
  CHECK(g["R"] == Json{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g["pieces"][0]["P"] == Json{{0, 1}, {2, 3}});
  CHECK(run("--check " + save(r.out, "gens.json")).code == 0);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("<svg") != std::string::npos);

  r = run("decompose " + cone("sqrt2_dihedral.json") + " '[12,17]'");
  CHECK(r.code == 0);
  Json d = Json::parse(r.out);
  REQUIRE(d["terms"].size() == 1);
  CHECK(d["terms"][0]["word"] == Json{1});
  CHECK(d["terms"][0]["element"] == Json{2, 3});
  CHECK(d["terms"][0]["multiplicity"] == 1);
  CHECK(run("--check " + save(r.out, "rep.json")).code == 0);

  CHECK(run("decompose " + cone("sqrt2_dihedral.json") + " '[3,1]'").code == 3);
  CHECK(run("decompose " + cone("sqrt2_dihedral.json") + " '[1,2,3]'").code == 3);
  CHECK(run("generators " + cone("four_rays_3d.json")).code == 3);

  r = run("verify " + cone("block_3d.json") + " --bound 6");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["extensions"] == 0);
  auto s = run("verify " + cone("block_3d.json") + " --bound 6 --serial");
  CHECK(s.out == r.out);
}

TEST_CASE("lab verbs") {
  auto r = run("lab fermat --k 2 --zmax 100");
  CHECK(r.code == 0);
  Json f = Json::parse(r.out);
  CHECK(f["only_trivial"] == true);
  CHECK(f["hits"].size() == 200);

  r = run("lab family --n1 0");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["v"] == Json{0, 1, -1, 2});
  CHECK(run("--check " + save(r.out, "family.json")).code == 0);

  r = run("lab four-dim --bound 4");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["subcone_symmetries"].size() == 3);

  CHECK(run("lab family --n1 21").code == 3);
}

TEST_CASE("bad input is rejected before any work") {
  CHECK(run("frobnicate").code == 3);
  CHECK(run("analyze " + cone("sqrt2_dihedral.json") + " --frobnicate").code == 3);
  CHECK(run("analyze /nonexistent.json").code == 3);
  CHECK(run("lab").code == 3);
  auto bad = save("{\"dim\": 2,\n \"rays\": [[1, 2] [3, 4]]}", "bad.json");
  CHECK(run("analyze " + bad).code == 3);
  auto tampered = save(R"({"schema": 1, "document": "representation",
      "cone": {"dim": 2, "rays": [[1, 0], [0, 1]]}, "generators": [],
      "point": [2, 2], "terms": [{"multiplicity": 1, "word": [], "element": [1, 1]}]})",
                       "tampered.json");
  CHECK(run("--check " + tampered).code == 1);
  CHECK(run("--help").code == 0);
}
