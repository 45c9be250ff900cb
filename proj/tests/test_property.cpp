#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "qhh/proptest.hpp"

using namespace qhh;

TEST_CASE("every randomized suite holds on a small sample", "[property]") {
  struct Plan {
    const char* name;
    int cases;
  };
  const Plan plans[] = {{"axioms", 15},    {"radzero", 15},   {"dualext", 8},
                        {"fundgroup", 10}, {"solvable", 10}, {"strongsolv", 10}};
  for (const Plan& plan : plans) {
    const SuiteFn* fn = nullptr;
    for (const auto& [name, f] : proptest_suites())
      if (name == plan.name) fn = &f;
    REQUIRE(fn != nullptr);
    SuiteResult r = run_suite(plan.name, *fn, 0x12345u, plan.cases);
    INFO(r.name << ": " << r.first_failure);
    REQUIRE(r.failed == 0);
    REQUIRE(r.cases == plan.cases);
    REQUIRE(r.passed + r.skipped == r.cases);
    REQUIRE(r.passed > 0);
    REQUIRE(r.ok());
  }
}

TEST_CASE("shrinking strips everything the failure does not need", "[property]") {
  Instance ins;
  ins.vertices = {1, 2, 3};
  ins.arrows = {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 3}};
  ins.relations = {{0, 1}};
  ins.b_names = {"a"};

  Instance min = minimize_instance(ins, [](const Instance& c) { return !c.arrows.empty(); });
  REQUIRE(min.arrows.size() == 1);
  REQUIRE(min.relations.empty());
  REQUIRE(min.b_names.empty());
  REQUIRE(min.vertices.size() == 1);
}

TEST_CASE("a precondition miss is a skip, not a failure", "[property]") {
  Instance ins;
  ins.vertices = {1};
  ins.arrows = {};

  CaseReport skip = judge(ins, [](const Instance&) -> bool {
    throw ValidationError("precondition miss");
  });
  REQUIRE(skip.outcome == Outcome::skip);
  REQUIRE(skip.detail == "precondition miss");

  CaseReport pass = judge(ins, [](const Instance&) { return true; });
  REQUIRE(pass.outcome == Outcome::pass);
}

TEST_CASE("a violation reports a shrunk replayable counterexample", "[property]") {
  Instance ins;
  ins.vertices = {1, 2};
  ins.arrows = {{"a", 1, 2}, {"b", 1, 2}};

  CaseReport fail = judge(ins, [](const Instance& c) { return c.arrows.empty(); });
  REQUIRE(fail.outcome == Outcome::fail);
  REQUIRE(fail.detail.find("algebra counterexample") != std::string::npos);
  REQUIRE(fail.detail.find("a:") == std::string::npos);  // first arrow shrunk away
  REQUIRE(fail.detail.find("b: 1 -> 2") != std::string::npos);
}
