#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli/commands.hpp"
#include "multigrade/serialize.hpp"
#include "test_support.hpp"

using namespace multigrade;
using multigrade::testing::sol;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::string& line) {
  std::vector<std::string> args{"multigrade"};
  std::istringstream words(line);
  for (std::string w; words >> w;) args.push_back(w);
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(const std::string& line, int expected_code = cli::kOk) {
  Outcome o = invoke(line + " --json");
  CHECK(o.code == expected_code);
  json doc = json::parse(o.out);
  // Bit-exact round trip of the emitted document.
  CHECK(json::parse(doc.dump()).dump() == doc.dump());
  CHECK(doc.dump() + "\n" == o.out);
  return doc;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify examples") {
  Outcome ok = invoke("verify --k 3 --lhs 29,22 --rhs 30,4,-3,20");
  CHECK(ok.code == cli::kOk);
  CHECK(contains(ok.out, "verified: true"));
  CHECK(contains(ok.out, "trivial: false"));
  CHECK(contains(ok.out, "r=3  lhs=35037  rhs=35037"));

  json doc = invoke_json("verify --k 2 --lhs 3 --rhs 2,2,-1");
  CHECK(doc["verified"] == true);
  CHECK(doc["trivial"] == false);
  CHECK(doc["verified_r"] == json::array({1, 2}));
  CHECK(solution_from_json(doc) == sol(2, {3}, {2, 2, -1}));

  CHECK(invoke("verify --k 3 --lhs 1 --rhs 1,x").code == cli::kUsageError);
  CHECK(invoke("verify --k 2 --lhs 1 --rhs 2").code == cli::kNegative);
  CHECK(invoke_json("verify --k 2 --lhs 1 --rhs 2", cli::kNegative)["verified"] == false);
}

TEST_CASE("family examples") {
  Outcome k3 = invoke("family k3 --p 2 --q 1");
  CHECK(k3.code == cli::kOk);
  CHECK(contains(k3.out, "{29,22 | 30,20,4,-3}"));
  CHECK(solution_from_json(invoke_json("family k3 --p 2 --q 1")) == sol(3, {29, 22}, {30, 20, 4, -3}));
  CHECK(contains(invoke("family k3 --p 2 --q 1 --raw").out, "{29,22 | 30,4,-3,20}"));

  json k5b = invoke_json("family k5b --m 2 --n 1");
  CHECK(solution_from_json(k5b) == normalize(sol(5, {21, 14, -7, 14}, {18, -6, 9, 5, 20, -4})));
  CHECK(k5b["verified_r"] == json::array({1, 2, 3, 4, 5}));
  CHECK(k5b["trivial"] == false);

  CHECK(invoke("family k2 --p 0 --q 0").code == cli::kUsageError);
  CHECK(invoke("family k9").code == cli::kUsageError);
  CHECK(invoke("family k3 --p 2").code == cli::kUsageError);
  CHECK(invoke("family k3-pyth --a 3 --b 4 --c 5").code == cli::kOk);
  CHECK(invoke("family k3-pyth --a 1 --b 2 --c 3").code == cli::kUsageError);
  CHECK(invoke("family k5a --m 2 --n 1").code == cli::kOk);
  CHECK(invoke("family k3-partial --p 2 --q 1 --r 3 --s -25/8").code == cli::kOk);
}

TEST_CASE("ec examples") {
  Outcome two = invoke("ec k4 --n 2");
  CHECK(two.code == cli::kOk);
  CHECK(contains(two.out, "{62,39,-37 | 63,35,12,-10,-36}"));

  Outcome one = invoke("ec k5 --n 1");
  CHECK(one.code == cli::kNegative);
  CHECK(contains(one.err, "all candidates trivial"));

  json three = invoke_json("ec k4 --n 3");
  REQUIRE(three["solutions"].size() == 1);
  CHECK(solution_from_json(three["solutions"][0]) ==
        normalize(sol(4, {-40573, 66494, 118981}, {-15181, 119510, 63756, -37835, 14652})));

  Outcome shown = invoke("ec k5 --n 2 --show-point --show-uv");
  CHECK(contains(shown.out, "(105/16, -715/64)"));
  CHECK(contains(shown.out, "u=-7/6  v=-23/12"));
  CHECK(contains(shown.out, "{241,218,-218,-241 | 266,143,120,-120,-143,-266}"));

  CHECK(invoke("ec k6 --n 1").code == cli::kUsageError);
  CHECK(invoke("ec k4 --n 0").code == cli::kUsageError);
}

TEST_CASE("search examples") {
  Outcome k3 = invoke("search --k 3 --s1 1 --s2 4 --height 30");
  CHECK(k3.code == cli::kNegative);
  CHECK(contains(k3.out, "solutions: 0  exhaustive: true"));

  Outcome k2 = invoke("search --k 2 --s1 1 --s2 3 --height 3");
  CHECK(k2.code == cli::kOk);
  CHECK(contains(k2.out, "{3 | 2,2,-1}"));

  Outcome k4 = invoke("search --k 4 --s1 2 --s2 5 --height 10");
  CHECK(k4.code == cli::kNegative);
  CHECK(contains(k4.out, "solutions: 0"));

  json doc = invoke_json("search --k 2 --s1 1 --s2 3 --height 3");
  CHECK(doc["exhaustive"] == true);
  REQUIRE(doc["solutions"].size() == 1);
  CHECK(solution_from_json(doc["solutions"][0]) == sol(2, {3}, {2, 2, -1}));

  CHECK(invoke("search --k 3 --s1 1 --s2 3 --height 3 --strict").code == cli::kUsageError);
  CHECK(invoke("search --k 3 --s1 1 --s2 3 --height 3").code == cli::kNegative);
  CHECK(invoke("search --k 2 --s1 1 --s2 3 --height 3 --strategy bogus").code == cli::kUsageError);
}

TEST_CASE("search text and JSON report the same solutions") {
  const std::string line = "search --k 2 --s1 2 --s2 3 --height 6";
  Outcome text = invoke(line);
  json doc = invoke_json(line);
  REQUIRE(doc["solutions"].size() == 9);
  for (const auto& s : doc["solutions"]) {
    Solution x = solution_from_json(s);
    std::string rendered = "{" + to_string(std::span<const Integer>(x.lhs()), ",") + " | " +
                           to_string(std::span<const Integer>(x.rhs()), ",") + "}";
    CHECK(contains(text.out, rendered));
  }
}

TEST_CASE("node budget from the environment") {
  ::setenv("MULTIGRADE_NODE_BUDGET", "10", 1);
  json doc = invoke_json("search --k 3 --s1 1 --s2 4 --height 30", cli::kNegative);
  CHECK(doc["exhaustive"] == false);
  CHECK(doc["spec"]["node_budget"] == 10);
  ::setenv("MULTIGRADE_NODE_BUDGET", "abc", 1);
  CHECK(invoke("search --k 2 --s1 1 --s2 3 --height 3").code == cli::kUsageError);
  ::unsetenv("MULTIGRADE_NODE_BUDGET");
  CHECK(invoke_json("search --k 3 --s1 1 --s2 4 --height 30", cli::kNegative)["exhaustive"] == true);
}

TEST_CASE("shift examples") {
  Outcome dropped = invoke("shift --k 2 --a 1,5,6 --b 2,3,7 --d -1 --drop-zeros");
  CHECK(dropped.code == cli::kOk);
  CHECK(contains(dropped.out, "{4,5 | 1,2,6}"));
  json doc = invoke_json("shift --k 2 --a 1,5,6 --b 2,3,7 --d -1 --drop-zeros");
  CHECK(solution_from_json(doc["solution"]) == sol(2, {4, 5}, {1, 2, 6}));

  Outcome same = invoke("shift --k 2 --a 1,5,6 --b 2,3,7 --d 0");
  CHECK(same.code == cli::kOk);
  CHECK(contains(same.out, "{1,5,6 | 2,3,7}"));

  CHECK(invoke("shift --k 2 --a 1,5,6 --b 2,3,8 --d 1").code == cli::kUsageError);
  CHECK(invoke("shift --k 2 --a 1,5 --b 2,3,7 --d 1").code == cli::kUsageError);
}

TEST_CASE("large terms print as exact decimals") {
  json doc = invoke_json("ec k5 --n 5");
  REQUIRE_FALSE(doc["solutions"].empty());
  std::string dumped = doc.dump();
  CHECK_FALSE(contains(dumped, "e+"));
  bool has_string_term = false;
  for (const auto& t : doc["solutions"][0]["lhs"]) has_string_term = has_string_term || t.is_string();
  CHECK(has_string_term);
  Solution x = solution_from_json(doc["solutions"][0]);
  CHECK(verify(x));
  CHECK(to_json_annotated(x) == doc["solutions"][0]);
}

TEST_CASE("usage errors") {
  CHECK(invoke("").code == cli::kUsageError);
  CHECK(invoke("frobnicate").code == cli::kUsageError);
  CHECK(invoke("verify --k 2 --lhs 3").code == cli::kUsageError);
  CHECK(invoke("--help").code == cli::kOk);
}
