#include <doctest.h>

#include "pushcalc/error.hpp"
#include "pushcalc/generators.hpp"
#include "pushcalc/json_io.hpp"
#include "pushcalc/verify.hpp"

using namespace pushcalc;

TEST_CASE("self-map JSON round trip") {
  Sampler rng(51);
  for (int i = 0; i < 100; ++i) {
    auto h = random_self_map(rng, random_signature(rng, 3, 2), 3, 3, 4);
    CHECK(self_map_from_json(self_map_to_json(h)) == h);
    CHECK(self_map_from_json(Json::parse(self_map_to_json(h).dump())) == h);
  }
}

TEST_CASE("big coefficients go through strings") {
  BigInt big("340282366920938463463374607431768211456");
  CHECK(bigint_to_json(big).is_string());
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(bigint_to_json(BigInt(-7)).is_number_integer());
  CHECK(bigint_from_json(Json("-12")) == -12);
  CHECK_THROWS_AS(bigint_from_json(Json("12x")), InvalidInput);
}

TEST_CASE("target JSON round trip") {
  Sampler rng(52);
  for (int i = 0; i < 100; ++i) {
    auto t = random_target(rng, 5, rng.uniform(0, 2), 3, rng.coin());
    auto back = target_from_json(target_to_json(t));
    CHECK(back.class_ids() == t.class_ids());
    CHECK(back.action() == t.action());
    CHECK(back.reflection() == t.reflection());
    CHECK(back.charge() == t.charge());
    CHECK(back.f_classes() == t.f_classes());
  }
}

TEST_CASE("malformed JSON inputs") {
  CHECK_THROWS_AS(self_map_from_json(Json::parse(R"({"g": 1})")), InvalidInput);
  CHECK_THROWS_AS(ring_from_json(Json::parse(R"([[1]])")), InvalidInput);
  CHECK_THROWS_AS(ring_from_json(Json::parse(R"([[1, "a1 x"]])")), ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"([1])")), InvalidInput);
  CHECK_THROWS_AS(target_from_json(Json::parse(R"({"pi1_gens": 1, "classes": ["x"], "action": {"b1": ["x"]},
                                                   "f_classes": []})")),
                  ParseError);
  CHECK_THROWS_AS(target_from_json(Json::parse(R"({"pi1_gens": 1, "classes": ["x", "y"], "action": {"a1": ["x", "x"]},
                                                   "f_classes": []})")),
                  InvalidInput);
}

TEST_CASE("every suite passes at the default seed") {
  VerifyOptions opt;
  opt.cases = 60;
  auto reports = run_verify("all", opt);
  CHECK(reports.size() == suite_names().size());
  for (const auto& r : reports) {
    INFO(format_suite_report(r));
    CHECK(r.passed());
    CHECK(r.seed == opt.seed);
  }
}

TEST_CASE("an injected fault is caught and shrunk in every suite") {
  VerifyOptions opt;
  opt.cases = 60;
  opt.inject_fault = true;
  for (const auto& r : run_verify("all", opt)) {
    INFO(r.suite);
    CHECK_FALSE(r.passed());
    CHECK(r.fault_injected);
    bool has_counterexample = false;
    for (const auto& p : r.properties) has_counterexample |= !p.passed && !p.counterexample.empty();
    CHECK(has_counterexample);
  }
}

TEST_CASE("reports are reproducible from the seed") {
  VerifyOptions opt;
  opt.seed = 99;
  opt.cases = 40;
  auto a = run_verify("push", opt), b = run_verify("push", opt);
  REQUIRE(a.size() == 1);
  CHECK(suite_report_to_json(a[0]) == suite_report_to_json(b[0]));
  CHECK(format_suite_report(a[0]) == format_suite_report(b[0]));
  CHECK_THROWS_AS(run_verify("nonsense", opt), InvalidInput);
}
