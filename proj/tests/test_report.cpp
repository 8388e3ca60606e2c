#include <doctest.h>

#include "spinrep/error.hpp"
#include "spinrep/suites.hpp"

#include <set>
#include <thread>

using namespace spinrep;

TEST_CASE("rationals serialize as integers or p/q strings") {
  CHECK(rational_json(Rational(3)) == Json(3));
  CHECK(rational_json(Rational(-5, 2)) == Json("-5/2"));
}

TEST_CASE("weight labels name fundamental weights per component") {
  auto rs = RootSystem::simple('F', 4);
  const Subsystem g = Subsystem::full(rs);
  CHECK(weight_label(g, rs->weight({2, 0, 0, 1})) == "2w1+w4");
  CHECK(weight_label(g, rs->zero()) == "0");
  const Json w = weight_json(*rs, rs->weight({1, 0, 0, 0}));
  // internal w1 of F4 is Bourbaki w4
  CHECK(w["labels"] == Json::array({1, 0, 0, 0}));
  CHECK(w["bourbaki"] == Json::array({0, 0, 0, 1}));
}

TEST_CASE("spin report of R8") {
  auto a1 = RootSystem::simple('A', 1);
  const Json j = spin_report(a1, a1->weight({8}), false);
  CHECK(j["orthogonality"] == "orthogonal");
  CHECK(j["dim_V"] == 9);
  CHECK(j["coprimary"] == false);
  std::multiset<std::string> labels;
  for (const auto& s : j["spin0"]) labels.insert(s["label"].get<std::string>());
  CHECK(labels == std::multiset<std::string>{"10w1", "4w1"});
  CHECK(j["dim_spin0"] == "16");
  CHECK(j["dim_check"] == true);
}

TEST_CASE("spin report refuses non-orthogonal modules without the dual") {
  auto a2 = RootSystem::simple('A', 2);
  CHECK_THROWS_AS(spin_report(a2, a2->weight({1, 0}), false), InvalidArgument);
  const Json j = spin_report(a2, a2->weight({1, 0}), true);
  CHECK(j["dim_V"] == 6);
  CHECK_THROWS_AS(spin_report(a2, a2->weight({1, 0}), true, Budget{1'000'000, 3, 64}), BudgetExceeded);
}

TEST_CASE("report JSON is reproducible and parses back") {
  auto c3 = RootSystem::simple('C', 3);
  const std::string a = spin_report(c3, c3->weight({0, 1, 0}), false).dump();
  const std::string b = spin_report(c3, c3->weight({0, 1, 0}), false).dump();
  CHECK(a == b);
  const Json back = Json::parse(a);
  CHECK(back.dump() == a);
  for (const char* key : {"type", "lambda", "module", "orthogonality", "dim_V", "zero_multiplicity", "scalar",
                          "spin0", "extreme_weights", "coprimary", "decomposably_generated", "dim_spin0",
                          "dim_check"})
    CHECK_MESSAGE(back.contains(key), key);
  CHECK(back["coprimary"] == true);
  CHECK(back["scalar"] == 2);
}

TEST_CASE("grading report of F4/B4") {
  const Json j = grading_report(grading_by_name("F4/B4"));
  CHECK(j["coset_count"] == 3);
  CHECK(j["summands"].size() == 3);
  CHECK(j["routes_agree"] == true);
  CHECK(j["identity_ok"] == true);
  CHECK(j["casimir_value"] == 18);
  std::set<std::string> dims;
  for (const auto& s : j["summands"]) dims.insert(s["dim"].get<std::string>());
  CHECK(dims == std::set<std::string>{"44", "84", "128"});
}

TEST_CASE("rootsys report carries the numbering table") {
  const Json j = rootsys_report(RootSystem::simple('F', 4));
  CHECK(j["positive_roots"] == 24);
  CHECK(j["weyl_order"] == 1152);
  CHECK(j["numbering"].size() == 4);
  CHECK(j["coxeter_number"] == 12);
}

TEST_CASE("runner sorts by id and maps exceptions to statuses") {
  std::vector<Check> checks{
      {"c", "tag", [](CheckResult&, const Budget&) { throw VerificationFailure("boom"); }},
      {"a", "tag", [](CheckResult& r, const Budget&) { r.detail = "fine"; }},
      {"b", "tag", [](CheckResult&, const Budget&) { throw BudgetExceeded("terms", 10, 5); }},
  };
  for (int jobs : {1, 3}) {
    const SuiteReport r = run_checks("unit", checks, RunConfig{Budget{}, jobs});
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[0].id == "a");
    CHECK(r.checks[0].status == CheckStatus::pass);
    CHECK(r.checks[1].status == CheckStatus::skipped);
    CHECK(r.checks[2].status == CheckStatus::fail);
    CHECK(r.checks[2].detail == "boom");
    CHECK_FALSE(r.ok());
    const Json j = to_json(r);
    CHECK(j["failed"] == 1);
    CHECK(j["skipped"] == 1);
  }
}

TEST_CASE("suite output does not depend on the worker count") {
  const SuiteReport one = run_suite("conjecture", RunConfig{Budget{}, 1});
  const SuiteReport many = run_suite("conjecture", RunConfig{Budget{}, 4});
  CHECK(to_json(one).dump() == to_json(many).dump());
  CHECK(one.ok());
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
  CHECK(suite_names().size() == 12);
}

TEST_CASE("a tight term budget skips the f4 row instead of failing it") {
  Budget b;
  b.terms = 1000;
  const SuiteReport r = run_suite("table1-f4", RunConfig{b, 1});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == CheckStatus::skipped);
  CHECK(r.ok());
}

TEST_CASE("the f4 row falls back to the factored exterior check") {
  Budget b;
  b.terms = 20000;
  const SuiteReport r = run_suite("table1-f4", RunConfig{b, 1});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == CheckStatus::pass);
  CHECK(r.checks[0].data["path"] == "factored");
}

TEST_CASE("table layouts list every row") {
  CHECK(table1_rows(false).size() == 17);
  CHECK(table1_rows(true).back().type == "F4");
  const std::string t2 = table2_markdown();
  CHECK(t2.find("| e6 | sp8 |") != std::string::npos);
  CHECK(t2.find("skipped") == std::string::npos);
}
