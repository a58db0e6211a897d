#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dvrinv/errors.hpp"
#include "dvrinv/job.hpp"

using namespace dvrinv;

const char* kMinimalS2 =
    R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 2, "generators": [[["0","1"],["1","0"]]]})";

std::string error_of(const std::string& doc) {
  try {
    parse_jobspec_text(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("parse_jobspec fills defaults") {
  const auto spec = parse_jobspec_text(kMinimalS2);
  CHECK(spec.degree_bound == 2);
  CHECK(spec.closure_cap == 20000);
  CHECK(spec.checks == std::vector<std::string>{"certify"});
  CHECK(spec.n == 2);
  CHECK(spec.dvr.kind == DvrKind::IntLocalized);
}

TEST_CASE("parse_jobspec rejections carry a locus") {
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 4}, "n": 1, "generators": [[["1"]]]})")
            .find("p must be prime") != std::string::npos);
  const auto not_in_o = error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 1, "generators": [[["1/3"]]]})");
  CHECK(not_in_o.find("generators[0][0][0]") != std::string::npos);
  CHECK(not_in_o.find("entry not in O") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 2, "generators": [[["1","0"],["0"]]]})")
            .find("generators[0][1]") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 1, "generators": [[["x"]]]})")
            .find("generators[0][0][0]") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 1, "generators": [[[1]]]})")
            .find("must be strings") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 1, "generators": [[["3"]]]})")
            .find("not a unit") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 1, "generators": [[["2"]]], "checks": ["h1", "nope"]})")
            .find("checks[1]: unknown check name 'nope'") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "padic", "p": 3}, "n": 1, "generators": []})").find("dvr.kind") !=
        std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 1, "generators": [], "degre_bound": 2})")
            .find("degre_bound: unknown field") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 0, "generators": []})").find("n:") !=
        std::string::npos);
  CHECK(error_of("{\"dvr\": \n  [}").find("line 2") != std::string::npos);
  CHECK(error_of(R"({"dvr": {"kind": "ratfunc-localized", "p": 5}, "n": 1, "generators": [[["1/t"]]]})")
            .find("entry not in O") != std::string::npos);
}

TEST_CASE("round trip for the bundled jobs") {
  for (const auto& name : example_names()) {
    const auto spec = example(name);
    CHECK(parse_jobspec(serialize(spec)) == spec);
  }
  CHECK_THROWS_AS(example("a5"), InputError);
  // canonical scalar forms
  const auto spec = parse_jobspec_text(
      R"J({"dvr": {"kind": "ratfunc-localized", "p": 5}, "n": 1, "generators": [[["(4+2*t)/(2+t)"]]]})J");
  CHECK(spec.generators[0][0][0] == "2");
}

TEST_CASE("run exit codes and report fields") {
  const auto s3 = run(example("s3"));
  CHECK(s3.exit_code == 0);
  CHECK(s3.report["verdict"] == "certified");
  CHECK(s3.report["fundamental_degrees_k"] == Json::array({1, 2, 3}));
  CHECK(s3.report["fundamental_degrees_K"] == Json::array({1, 2, 3}));
  CHECK(s3.report["molien"] == Json::array({"1", "1", "2", "3", "4", "5", "7"}));
  CHECK(s3.report["graded_table"][4] == Json::array({4, 4, 4}));
  CHECK(s3.report["h1"].size() == 6);
  CHECK(s3.report["lift_verified"] == true);
  CHECK(s3.report["eta_injective"] == true);
  CHECK(s3.report["bases"].size() == 3);
  CHECK(s3.report["reflections"].size() == 3);

  const auto s2mod = run(parse_jobspec_text(
      R"({"dvr": {"kind": "int-localized", "p": 2}, "n": 2, "generators": [[["0","1"],["1","0"]]]})"));
  CHECK(s2mod.exit_code == 2);
  CHECK(s2mod.report["verdict"] == "refuted-hypothesis");

  const auto pm = run(parse_jobspec_text(
      R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 2, "generators": [[["-1","0"],["0","-1"]]], "degree_bound": 4})"));
  CHECK(pm.exit_code == 3);
  CHECK(pm.report["verdict"] == "inconclusive");

  auto partial = example("b2");
  partial.checks = {"molien", "graded"};
  const auto r = run(partial);
  CHECK(r.exit_code == 0);
  CHECK(r.report["verdict"] == "complete");
  CHECK_FALSE(r.report.contains("h1"));
  CHECK(r.report.contains("graded_table"));
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const auto& name : example_names()) {
    const auto a = run(example(name)).report;
    const auto b = run(example(name)).report;
    CHECK(strip_timing(a).dump() == strip_timing(b).dump());
    CHECK(a.contains("timing_ms"));
  }
}

TEST_CASE("verify_report accepts genuine reports and flags tampering") {
  for (const auto& name : example_names()) {
    const auto report = run(example(name)).report;
    const auto v = verify_report(report);
    CHECK(v.consistent);
    CHECK(v.failures.empty());
    CHECK(v.checked.size() >= 8);
  }
  auto report = run(example("s3")).report;
  report["molien"][6] = "8";
  CHECK_FALSE(verify_report(report).consistent);

  report = run(example("b2")).report;
  report["fundamental_degrees_k"] = Json::array({2, 3});
  CHECK_FALSE(verify_report(report).consistent);

  report = run(example("s3")).report;
  report["bases"][0]["vectors"][1] = Json::array({"0", "0", "5"});
  CHECK_FALSE(verify_report(report).consistent);

  report = run(example("s3")).report;
  report["h1"][2] = Json::array({2, 1});
  CHECK_FALSE(verify_report(report).consistent);

  report = run(example("c4-ratfunc")).report;
  report["graded_table"][4] = Json::array({4, 1, 0});
  CHECK_FALSE(verify_report(report).consistent);

  CHECK_THROWS_AS(verify_report(Json::object()), InputError);
}

TEST_CASE("text rendering") {
  const auto text = render_text(run(example("c4-ratfunc")).report);
  CHECK(text.find("verdict: certified") != std::string::npos);
  CHECK(text.find("fundamental invariants over k: degrees [4]") != std::string::npos);
  CHECK(text.find("lambda = 2") != std::string::npos);
}
