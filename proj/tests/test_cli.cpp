#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "repvar/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

std::string data(const std::string& f) { return std::string(REPVAR_DATA_DIR) + "/" + f; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = repvar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cohomology of D(3,3,3)") {
  Result r = run({"cohomology", "--presentation", data("dyck333.grp"), "--rep", data("rho0.rep")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema_version"] == repvar::cli::kSchemaVersion);
  CHECK(j["z1"] == 4);
  CHECK(j["b1"] == 2);
  CHECK(j["h1"] == 2);
}

TEST_CASE("text and json report the same numbers") {
  Result j = run({"cohomology", "--rep", data("rho0.rep")});
  Result t = run({"cohomology", "--rep", data("rho0.rep"), "--format", "text"});
  REQUIRE(j.code == 0);
  REQUIRE(t.code == 0);
  json parsed = json::parse(j.out);
  for (const char* key : {"h0", "z1", "b1", "h1", "h2_complex"})
    CHECK(t.out.find(std::string(key) + ": " + parsed[key].dump() + "\n") != std::string::npos);
  CHECK(run({"cohomology", "--rep", data("rho0.rep")}).out == j.out);
}

TEST_CASE("catalog verbs") {
  Result r = run({"catalog", "run", "lubotzky_magid"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["all_passed"] == true);
  Result l = run({"catalog", "list"});
  CHECK(l.code == 0);
  CHECK(json::parse(l.out)["entries"].size() == 7);
  CHECK(run({"catalog", "run", "nope"}).code == 2);
}

TEST_CASE("relation violations exit with 1") {
  Result r = run({"check-rep", "--presentation", data("bad.grp"), "--rep", data("bad.rep")});
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  CHECK(j["error"] == "RelationViolated");
  CHECK(j["valid"] == false);
  CHECK(run({"check-rep", "--rep", data("rho0.rep")}).code == 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cohomology"}).code == 2);
  CHECK(run({"cohomology", "--rep", data("missing.rep")}).code == 2);
  CHECK(run({"cohomology", "--rep", data("rho0.rep"), "--format", "xml"}).code == 2);
  CHECK(run({"alexander", "--presentation", data("dyck333.grp")}).code == 2);  // no abelianization
  CHECK(run({"deform-condition", "--presentation", data("figure8.grp"), "--lambda", "sqrt((3 + sqrt(5))/2)"}).code ==
        2);
}

TEST_CASE("obstruction verbs") {
  Result ok = run({"obstruction", "--rep", data("rho0.rep"), "--cochain", data("z1.cochain"), "--order", "3"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["extensions"].size() == 2);
  Result bad = run({"obstruction", "--rep", data("rho0.rep"), "--cochain", data("z1_plus_z2.cochain")});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["obstructed_at_order"] == 2);
}

TEST_CASE("alexander and deformation verbs") {
  Result a = run({"alexander", "--presentation", data("trefoil.grp"), "--lambda", "zeta(6)", "--lambda", "1"});
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["delta1"] == json({{"0", "1"}, {"1", "-1"}, {"2", "1"}}));
  CHECK(j["evaluations"][0]["is_root"] == true);
  CHECK(j["evaluations"][1]["is_root"] == false);
  CHECK(run({"deform-condition", "--presentation", data("trefoil.grp"), "--lambda", "zeta(12)"}).code == 0);
  CHECK(run({"deform-condition", "--presentation", data("trefoil.grp"), "--lambda", "1"}).code == 1);
  std::string hom = "hom:" + data("trefoil_alpha1.rep") + "," + data("trefoil_alpha1.rep");
  Result g = run({"deform-condition", "--module", hom, "--lambda", "zeta(8)"});
  CHECK(json::parse(g.out)["duality_holds"] == true);
}

TEST_CASE("representation verbs") {
  CHECK(run({"irreducible", "--rep", data("trefoil_alpha1.rep")}).code == 0);
  CHECK(run({"irreducible", "--rep", data("rho0.rep")}).code == 1);
  Result c = run({"character", "--rep", data("trefoil_alpha1.rep"), "--word", "[x,y]"});
  CHECK(json::parse(c.out)["values"]["x y x^-1 y^-1"] == "-1 + 6*zeta(12)^3");
  Result r = run({"regularity", "--rep", data("trefoil_central.rep"), "--boundary-tori", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["predicted_component_dim"] == 3);
  CHECK(run({"regularity", "--rep", data("rho0.rep")}).code == 1);
  Result m = run({"metabelian", "--presentation", data("trefoil.grp"), "--module", "metabelian:zeta(6),2"});
  CHECK(m.code == 0);
  CHECK(json::parse(m.out)["cocycle_dim"] == 2);
  Result z = run({"cocycles", "--rep", data("lm_rho.rep")});
  CHECK(json::parse(z.out)["z1"] == 4);
}

TEST_CASE("representation files") {
  auto f = repvar::cli::parse_rep_file("presentation x.grp; field 12;\n# comment\na = [ zeta(3), 0 ; 0, 1 ];\ndet 2;");
  CHECK(f.presentation_path == "x.grp");
  CHECK(f.field_order == 12);
  REQUIRE(f.matrices.size() == 1);
  CHECK(f.matrices[0].second.size() == 2);
  CHECK(f.matrices[0].second[0][0] == "zeta(3)");
  CHECK(f.det == "2");
  CHECK_THROWS_AS(repvar::cli::parse_rep_file("a = [ 1, 0 ; 0, 1 "), repvar::SyntaxError);
  CHECK_THROWS_AS(repvar::cli::parse_rep_file("field zero;"), repvar::SyntaxError);
}
