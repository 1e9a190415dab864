#include <doctest.h>

#include <set>
#include <stdexcept>

#include "t5census/verify.hpp"

using namespace t5census;

TEST_CASE("registry shape") {
  const auto& reg = acceptance_registry();
  REQUIRE(reg.size() == kCriterionCount);
  std::set<std::string> names;
  for (int i = 0; i < kCriterionCount; ++i) {
    CHECK(reg[i].id == i + 1);
    CHECK(reg[i].name[0] != '\0');
    CHECK(reg[i].claim[0] != '\0');
    CHECK(reg[i].run != nullptr);
    names.insert(reg[i].name);
  }
  CHECK(names.size() == kCriterionCount);
}

TEST_CASE("run_criterion rejects out-of-range ids") {
  CHECK_THROWS_AS(run_criterion(0), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(kCriterionCount + 1), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(-3), std::invalid_argument);
}

TEST_CASE("a fast criterion runs and formats") {
  CriterionResult r = run_criterion(5);
  CHECK(r.id == 5);
  CHECK(r.name == "b3-argmax");
  CHECK(r.passed);
  CHECK(!r.detail.empty());
  std::string line = criterion_line(r);
  CHECK(line.rfind("PASS  5 b3-argmax: ", 0) == 0);
  CHECK(line.find("elapsed") == std::string::npos);

  CriterionResult fake = r;
  fake.passed = false;
  CHECK(criterion_line(fake).rfind("FAIL  5 ", 0) == 0);
}
