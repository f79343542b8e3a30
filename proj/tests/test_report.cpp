#include <doctest.h>

#include <json.hpp>
#include <string>

#include "report.hpp"

using namespace orbiquot;
using nlohmann::json;

namespace {

const std::string kTheta1Text = "1 0 1 1; 0 1 1 1; 1 1 0 1";
const std::string kOmegaText = "1 0 1\n0 1 1";

ReportOptions json_opts() {
  ReportOptions o;
  o.json = true;
  return o;
}

}  // namespace

TEST_CASE("matrix parsing accepts both layouts") {
  const WeightMatrix t = parse_matrix(kTheta1Text);
  REQUIRE(std::holds_alternative<ThetaMatrix>(t));
  CHECK(std::get<ThetaMatrix>(t).p[0] == 1);
  CHECK(std::get<ThetaMatrix>(t).l[2] == 0);

  const WeightMatrix o = parse_matrix(kOmegaText);
  REQUIRE(std::holds_alternative<OmegaMatrix>(o));
  CHECK(std::get<OmegaMatrix>(o).q[1] == 1);
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(parse_matrix("1 2\n3 4"), ShapeError);
  CHECK_THROWS_AS(parse_matrix("1 2 3; 4 5 6; 7 8 9"), ShapeError);
  CHECK_THROWS_AS(parse_matrix("1 0 1 x; 0 1 1 1; 1 1 0 1"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ShapeError);
}

TEST_CASE("check verdicts") {
  ReportOptions opts = json_opts();
  const RunResult ok = run_check(parse_matrix(kTheta1Text), opts);
  CHECK(ok.status == 0);
  const json doc = json::parse(ok.output);
  CHECK(doc.at("schema") == "orbiquot-report/1");
  CHECK(doc.at("command") == "check");
  CHECK(doc.at("admissibility").at("admissible") == true);
  CHECK(doc.at("minors").at("d123") == "-2");
  CHECK(doc.at("boxes").is_object());

  const RunResult bad =
      run_check(parse_matrix("1 1 1 1; 2 2 2 2; 3 3 3 3"), opts);
  CHECK(bad.status == 1);
  const json bdoc = json::parse(bad.output);
  CHECK(bdoc.at("admissibility").at("admissible") == false);
}

TEST_CASE("check of the 2x3 case reports freeness") {
  const RunResult res = run_check(parse_matrix(kOmegaText), json_opts());
  CHECK(res.status == 0);
  const json doc = json::parse(res.output);
  CHECK(doc.at("freeness").at("locally_free") == true);
  CHECK(doc.at("freeness").at("free_on_s1") == true);
}

TEST_CASE("catalog document structure") {
  const RunResult res = run_catalog(parse_matrix(kTheta1Text), json_opts());
  CHECK(res.status == 0);
  const json doc = json::parse(res.output);
  const json& cat = doc.at("catalog");
  CHECK(cat.at("type1_spheres").size() == 2);
  CHECK(cat.at("type2_spheres").size() == 4);
  CHECK(cat.at("point_groups").size() == 3);
  CHECK(cat.at("excluded").size() == 18);
  // invariants and exact data are exact decimal strings
  CHECK(cat.at("type1_spheres")[0].at("invariant").is_string());
  bool found = false;
  for (const auto& e : cat.at("type2_spheres"))
    for (const auto& v : e.at("data"))
      if (v == "-1/8") found = true;
  CHECK(found);
}

TEST_CASE("catalog of an inadmissible matrix is withheld") {
  const RunResult res =
      run_catalog(parse_matrix("1 1 1 1; 2 2 2 2; 3 3 3 3"), json_opts());
  CHECK(res.status == 1);
  CHECK(json::parse(res.output).at("catalog").is_null());
}

TEST_CASE("catalog of the 2x3 case") {
  const RunResult res = run_catalog(parse_matrix(kOmegaText), json_opts());
  CHECK(res.status == 0);
  const json doc = json::parse(res.output);
  CHECK(doc.at("catalog").at("omega_sphere").size() == 1);
  CHECK(doc.at("catalog").at("excluded").size() == 12);
}

TEST_CASE("sample reports converged points") {
  ReportOptions opts = json_opts();
  opts.seeds = 3;
  const RunResult res = run_sample(parse_matrix(kTheta1Text), opts);
  CHECK(res.status == 0);
  const json doc = json::parse(res.output);
  const json& solver = doc.at("solver");
  CHECK(solver.at("runs").size() == 3);
  CHECK(solver.at("converged").get<int>() >= 1);
  for (const auto& run : solver.at("runs")) {
    if (!run.at("converged").get<bool>()) continue;
    CHECK(std::stod(run.at("residual").get<std::string>()) < 1e-9);
  }
}

TEST_CASE("verify suite passes") {
  const RunResult res = run_verify(json_opts());
  CHECK(res.status == 0);
  const json doc = json::parse(res.output);
  CHECK(doc.at("identity_suite").at("failures").get<int>() == 0);
  CHECK(doc.at("obstruction").at("refuted") == false);
  CHECK(doc.at("obstruction").at("assignments_checked").get<int>() == 256);
  CHECK(std::stod(doc.at("det_block_suite").at("max_error").get<std::string>()) <
        1e-9);
}

TEST_CASE("json output is byte-identical across runs") {
  ReportOptions opts = json_opts();
  opts.seeds = 2;
  const WeightMatrix t = parse_matrix(kTheta1Text);
  CHECK(run_check(t, opts).output == run_check(t, opts).output);
  CHECK(run_catalog(t, opts).output == run_catalog(t, opts).output);
  CHECK(run_sample(t, opts).output == run_sample(t, opts).output);
  CHECK(run_verify(opts).output == run_verify(opts).output);
}

TEST_CASE("text output renders without json punctuation") {
  ReportOptions opts;
  opts.json = false;
  const RunResult res = run_check(parse_matrix(kTheta1Text), opts);
  CHECK(res.status == 0);
  CHECK(res.output.find('{') == std::string::npos);
  CHECK(res.output.find("admissible") != std::string::npos);
}
