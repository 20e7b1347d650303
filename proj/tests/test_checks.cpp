#include <doctest.h>

#include <algorithm>

#include "ggslcs/checks.hpp"
#include "ggslcs/report_json.hpp"

using namespace ggs;

TEST_CASE("every named check passes for p=3 e=(1,0)") {
  const DefiningVector e = classify_vector(3, {1, 0});
  for (const auto& name : {"theorem-2-1", "theorem-4-1", "lemma-4-3", "lemma-4-4",
                           "lemma-4-5", "theorem-4-6", "theorem-5-1"}) {
    const CheckResult r = run_check(name, e, 3);
    CHECK(r.passed);
    CHECK(!r.details.empty());
    CHECK(r.check_name == name);
  }
}

TEST_CASE("checks hold for the other FG vectors at p=3") {
  for (const std::vector<int>& v : {std::vector<int>{0, 1}, {2, 0}, {0, 2}}) {
    const DefiningVector e = classify_vector(3, v);
    CHECK(check_theorem_4_6(e).passed);
    CHECK(check_lemma_4_5(e).passed);
  }
}

TEST_CASE("lemma 4-4 with a small bound") {
  const CheckResult r = check_lemma_4_4(classify_vector(3, {1, 0}), 5);
  CHECK(r.passed);
}

TEST_CASE("lemma 4-3 needs no FG hypothesis") {
  CHECK(check_lemma_4_3(classify_vector(3, {1, 1})).passed);
}

TEST_CASE("precondition guards") {
  const DefiningVector fg = classify_vector(3, {1, 0});
  const DefiningVector constant = classify_vector(3, {1, 1});
  const DefiningVector periodic = classify_vector(3, {1, 2});  // epsilon = 0

  CHECK_THROWS_AS(check_proposition_4_7(fg), PreconditionError);
  CHECK_THROWS_AS(check_proposition_4_7(periodic), PreconditionError);
  CHECK_THROWS_AS(check_theorem_4_6(constant), PreconditionError);
  CHECK_THROWS_AS(check_theorem_5_1(fg, 2), PreconditionError);
  CHECK_THROWS_AS(check_theorem_2_1(periodic, 2), PreconditionError);
  CHECK_THROWS_AS(run_check("no-such-check", fg, 3), std::invalid_argument);
}

TEST_CASE("proposition 4-7 reports the oracle truthfully") {
  // p = 5, (1,2,0,0): a witness exists
  const CheckResult r5 = check_proposition_4_7(classify_vector(5, {1, 2, 0, 0}));
  CHECK(r5.passed);

  // p = 3, (1,1): the oracle finds index p at i = 2, so the predicted early
  // p^2 index does not occur and the check reports failure
  const CheckResult r3 = check_proposition_4_7(classify_vector(3, {1, 1}));
  CHECK_FALSE(r3.passed);
  REQUIRE(!r3.details.empty());
  CHECK(r3.details[0].name == "observed exponent at i=2");
  CHECK(r3.details[0].computed == "1");
}

TEST_CASE("applicable checks per vector class") {
  const auto fg = applicable_checks(classify_vector(3, {1, 0}), 3);
  CHECK(std::count(fg.begin(), fg.end(), "theorem-5-1") == 1);
  CHECK(std::count(fg.begin(), fg.end(), "proposition-4-7") == 0);
  const auto constant = applicable_checks(classify_vector(3, {1, 1}), 3);
  CHECK(std::count(constant.begin(), constant.end(), "proposition-4-7") == 1);
  CHECK(std::count(constant.begin(), constant.end(), "theorem-4-6") == 0);
  const auto periodic = applicable_checks(classify_vector(3, {1, 2}), 3);
  CHECK(std::count(periodic.begin(), periodic.end(), "theorem-2-1") == 0);
}

TEST_CASE("json reports round-trip byte for byte") {
  const CheckResult r = check_theorem_4_1(classify_vector(3, {1, 0}));
  for (bool timings : {false, true}) {
    const Json j = to_json(r, timings);
    const std::string once = j.dump(2);
    const std::string twice = Json::parse(once).dump(2);
    CHECK(once == twice);
    CHECK(j.contains("elapsed_ms") == timings);
  }
}
