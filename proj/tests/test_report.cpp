#include "catch_amalgamated.hpp"

#include "closurelab/catalog.hpp"
#include "closurelab/report.hpp"

using namespace closurelab;

TEST_CASE("large integers become strings", "[report]") {
  CHECK(integer_json(60) == Json(60));
  Integer limit = Integer(1) << 53;
  CHECK(integer_json(limit).is_number());
  CHECK(integer_json(limit + 1).is_string());
  CHECK(integer_json(symmetric(23).order()) == Json("25852016738884976640000"));
  CHECK(integer_from_json(integer_json(limit + 1)) == limit + 1);
  CHECK(integer_from_json(Json(7920)) == 7920);
}

TEST_CASE("suite results round-trip", "[report]") {
  SuiteResult r{"demo",
                {{"c1", "statement one", "4", "4", true, 1.5},
                 {"c2", "statement, two", "3", "2", false, 0}}};
  auto j    = to_json(r, false);
  auto back = suite_result_from_json(j);
  CHECK(back.suite == "demo");
  REQUIRE(back.claims.size() == 2);
  CHECK(back.claims[1].citation == "statement, two");
  CHECK_FALSE(back.pass());
  CHECK(to_json(back, false) == j);
  CHECK_FALSE(j["claims"][0].contains("elapsed_ms"));
  CHECK(to_json(r, true)["claims"][0]["elapsed_ms"] == 1.5);

  j["pass"] = true;
  CHECK_THROWS_AS(suite_result_from_json(j), Error);
}

TEST_CASE("envelope layout", "[report]") {
  auto   A = natural_action("A5", alternating(5));
  Budget budget;
  auto   j = envelope("order", &A, Json{{"order", 60}}, budget, false);
  std::vector<std::string> keys;
  for (auto const& [key, value] : j.items()) {
    keys.push_back(key);
  }
  CHECK(keys == std::vector<std::string>{"tool_version", "command", "group", "action", "result", "budget"});
  CHECK(j["group"]["order"] == 60);
  CHECK(j["action"]["provenance"] == "natural");
  CHECK_FALSE(j["budget"].contains("elapsed_ms"));
  CHECK(envelope("catalog", nullptr, Json::object(), budget, true)["group"].is_null());
}

TEST_CASE("spectrum reports are deterministic", "[report]") {
  auto A  = natural_action("A5", alternating(5));
  auto r1 = to_json(closure_spectrum(A), false).dump();
  auto r2 = to_json(closure_spectrum(A), false).dump();
  CHECK(r1 == r2);
}

TEST_CASE("CSV tables", "[report]") {
  auto A   = natural_action("A5", alternating(5));
  auto csv = spectrum_csv(closure_spectrum(A));
  CHECK(csv == "group,action,degree,k,order,equals_group\n"
               "A5,natural,5,1,120,no\nA5,natural,5,2,120,no\n"
               "A5,natural,5,3,120,no\nA5,natural,5,4,60,yes\n");
  SuiteResult r{"s", {{"x", "c", "a,b", "q\"r", true, 0}}};
  CHECK(suite_csv(r) == "suite,claim,expected,computed,pass\ns,x,\"a,b\",\"q\"\"r\",pass\n");
}
