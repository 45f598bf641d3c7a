#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "crucible/report.hpp"
#include "crucible/suite.hpp"

using namespace crucible;

namespace {

std::size_t count_fields(const std::string& line) {
  std::size_t fields = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++fields;
  }
  return fields;
}

}  // namespace

TEST_CASE("entries") {
  const auto ok = numeric_entry("a", "Lemma 1", 1.0L, 1.0L + 1e-10L, 1e-9L, 7);
  CHECK(ok.passed);
  CHECK(std::fabs(ok.abs_error - 1e-10L) <= 1e-19L);
  const auto bad = numeric_entry("b", "Lemma 1", 1.0L, 1.1L, 1e-9L);
  CHECK_FALSE(bad.passed);
  const auto text = text_entry("c", "Lemma 3", "limit 0", 1e-5L, 1e-5L, 1e-3L);
  CHECK(text.passed);
  CHECK(std::holds_alternative<std::string>(text.claimed));
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.add(numeric_entry("x.one", "Theorem 5", 2, 2, 1e-12L, 42));
  r.add(text_entry("x.two", "Lemma 3, a -> 0", "limit 0", 3e-4L, 3e-4L, 1e-3L));
  CHECK_THROWS_AS(r.add(numeric_entry("x.one", "dup", 0, 0, 1)), std::invalid_argument);
  CHECK(r.all_passed());
  r.add(numeric_entry("x.three", "Corollary 6", 1, 2, 1e-3L));
  CHECK(r.failures() == 1);

  const auto j = r.to_json(true);
  CHECK(j["schema_version"] == "1");
  CHECK(j["all_passed"] == false);
  REQUIRE(j["entries"].size() == 3);
  const auto& first = j["entries"][0];
  std::vector<std::string> keys;
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected{"id",       "paper_anchor", "claimed", "computed",
                                          "abs_error", "tolerance",   "passed",  "seed",
                                          "runtime_ms"};
  CHECK(keys == expected);
  CHECK(j["entries"][1]["claimed"] == "limit 0");
  CHECK(j["entries"][1]["seed"].is_null());
  CHECK_FALSE(r.to_json(false)["entries"][0].contains("runtime_ms"));

  std::istringstream csv(r.to_csv());
  std::string line;
  std::getline(csv, line);
  CHECK(line == "id,paper_anchor,claimed,computed,abs_error,tolerance,passed,seed");
  int rows = 0;
  while (std::getline(csv, line)) {
    CHECK(count_fields(line) == 8);
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("suite names") {
  for (Suite s : kAllSuites) CHECK(parse_suite(suite_name(s)) == s);
  CHECK_THROWS_AS(parse_suite("nonsense"), ConfigError);
  CHECK(parse_zeta_method("bernoulli-even") == ZetaMethod::bernoulli_even);
  CHECK_THROWS_AS(parse_zeta_method("guess"), ConfigError);
}

TEST_CASE("config validation") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  c.tol = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.n_max = 11;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.qmc_points = 3000;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.suites.clear();
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_THROWS_AS(run_suite(c), ConfigError);
}

TEST_CASE("series suite for n up to 4") {
  SuiteConfig c;
  c.suites = {Suite::series};
  c.n_max = 4;
  const auto r = run_suite(c);
  CHECK(r.all_passed());
  std::set<std::string> ids;
  for (const auto& e : r.entries()) ids.insert(e.id);
  CHECK(ids.size() == r.entries().size());
  for (int n = 2; n <= 4; ++n) {
    const std::string p = "series.n" + std::to_string(n);
    CHECK(ids.count(p + ".lambda_identity") == 1);
  }
  CHECK(ids.count("series.n5.lambda_identity") == 0);
}

TEST_CASE("jacobian suite is byte-identical for a fixed seed") {
  SuiteConfig c;
  c.suites = {Suite::jacobian, Suite::bernoulli};
  c.qmc_seed = 77;
  const std::string a = run_suite(c).to_json(false).dump();
  const std::string b = run_suite(c).to_json(false).dump();
  CHECK(a == b);
  const auto direct = jacobian_check(3, 200, 5);
  CHECK(direct.all_passed());
  CHECK_THROWS_AS(jacobian_check(9, 10, 5), ConfigError);
}

TEST_CASE("zeta command") {
  const auto z2 = zeta_command(2, ZetaMethod::integral, 1e-10L);
  CHECK(std::fabs(z2.value - 1.6449340668482264L) <= 1e-9L);
  CHECK(z2.error_bound <= 1e-9L);
  const auto i3 = zeta_command(3, ZetaMethod::integral, 1e-10L);
  const auto s3 = zeta_command(3, ZetaMethod::series, 1e-10L);
  CHECK(std::fabs(i3.value - s3.value) <= 1e-9L);
  CHECK(std::fabs(zeta_command(6, ZetaMethod::bernoulli_even, 1e-10L).value -
                  std::pow(pi, 6) / 945) <= 1e-15L);
  CHECK_THROWS_AS(zeta_command(3, ZetaMethod::bernoulli_even, 1e-10L), MethodMismatch);
  CHECK_THROWS_AS(zeta_command(1, ZetaMethod::series, 1e-10L), InvalidOrder);
}
