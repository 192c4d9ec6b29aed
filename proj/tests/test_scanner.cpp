#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "euler_padic/euler_series.hpp"
#include "euler_padic/primes.hpp"
#include "euler_padic/scanner.hpp"

using euler_padic::find_witness_classes;
using euler_padic::scan;
using euler_padic::ScanConfig;
using euler_padic::ScanReport;
using euler_padic::validate_scan_config;
using euler_padic::Verdict;

namespace {

ScanConfig small_config() {
  ScanConfig config;
  config.a = 0;
  config.b = -1;
  config.xi = 1;
  config.m = 4;
  config.classes = {1, 3};
  config.X = 100;
  config.K = 8;
  return config;
}

}  // namespace

TEST_CASE("config validation reports each bad field") {
  ScanConfig config = small_config();
  CHECK(validate_scan_config(config).empty());

  config.b = 0;
  config.xi = 0;
  config.m = 2;
  config.X = 1;
  config.K = 0;
  auto issues = validate_scan_config(config);
  CHECK(issues.size() >= 5);

  ScanConfig bad_class = small_config();
  bad_class.classes = {2};
  CHECK_FALSE(validate_scan_config(bad_class).empty());
  CHECK_THROWS_AS(scan(bad_class), euler_padic::InvalidConfigError);

  ScanConfig dup = small_config();
  dup.classes = {1, 1};
  CHECK_FALSE(validate_scan_config(dup).empty());

  ScanConfig empty = small_config();
  empty.classes = {};
  CHECK_FALSE(validate_scan_config(empty).empty());
}

TEST_CASE("scan covers exactly the primes in the selected classes") {
  auto report = scan(small_config());

  std::vector<std::uint64_t> expected;
  for (std::uint64_t p : euler_padic::sieve_primes(100)) {
    if (p % 4 == 1 || p % 4 == 3) expected.push_back(p);
  }
  REQUIRE(report.verdicts.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report.verdicts[i].p == expected[i]);
    CHECK(report.verdicts[i].class_rep == expected[i] % 4);
  }

  std::uint64_t scanned = 0;
  for (const auto& c : report.per_class) {
    CHECK(c.scanned == c.certified_nonzero + c.undetermined);
    scanned += c.scanned;
  }
  CHECK(scanned == expected.size());

  // Lambda(x) = x: every prime with F_p(1) not vanishing to precision 8.
  CHECK(report.witness_class_count == 2);
}

TEST_CASE("verdicts agree with direct lambda evaluation") {
  auto config = small_config();
  auto report = scan(config);
  for (const auto& v : report.verdicts) {
    auto l = euler_padic::evaluate_lambda(config.a, config.b, config.xi, v.p,
                                          config.K);
    CHECK(v.valuation == l.valuation);
    bool certified = l.valuation.is_exact() && l.valuation.value < config.K;
    CHECK((v.verdict == Verdict::NonzeroCertified) == certified);
  }
}

TEST_CASE("fourteen primes below fifty for m = 3") {
  ScanConfig config;
  config.a = 1;
  config.b = 1;
  config.xi = 1;
  config.m = 3;
  config.classes = {1, 2};
  config.X = 50;
  config.K = 6;
  auto report = scan(config);
  CHECK(report.verdicts.size() == 14);
  CHECK(report.witness_class_count >= 1);
  CHECK(report.witness_class_count <= 2);
}

TEST_CASE("verdicts are stable when precision grows") {
  auto base = small_config();
  auto fine = base;
  fine.K = 16;
  auto r8 = scan(base);
  auto r16 = scan(fine);
  REQUIRE(r8.verdicts.size() == r16.verdicts.size());
  for (std::size_t i = 0; i < r8.verdicts.size(); ++i) {
    const auto& coarse = r8.verdicts[i];
    const auto& sharp = r16.verdicts[i];
    if (coarse.verdict == Verdict::NonzeroCertified) {
      CHECK(sharp.verdict == Verdict::NonzeroCertified);
      CHECK(sharp.valuation.value == coarse.valuation.value);
    }
    if (sharp.verdict == Verdict::UndeterminedAtPrecision) {
      CHECK(coarse.verdict == Verdict::UndeterminedAtPrecision);
    }
  }
}

TEST_CASE("scan output is identical for any thread count") {
  auto config = small_config();
  config.X = 2000;
  auto json1 = euler_padic::scan_report_to_json(scan(config, 1));
  auto json4 = euler_padic::scan_report_to_json(scan(config, 4));
  auto json8 = euler_padic::scan_report_to_json(scan(config, 8));
  CHECK(json1 == json4);
  CHECK(json1 == json8);
  CHECK(euler_padic::scan_report_to_csv(scan(config, 3)) ==
        euler_padic::scan_report_to_csv(scan(config, 1)));
}

TEST_CASE("witness class extraction and shortfall") {
  auto report = scan(small_config());
  auto one = find_witness_classes(report, 1);
  REQUIRE(one.size() == 1);
  CHECK((one[0] == 1 || one[0] == 3));
  CHECK(find_witness_classes(report, 0).empty());
  auto both = find_witness_classes(report, 2);
  CHECK(both == std::vector<std::uint64_t>{1, 3});

  CHECK_THROWS_AS(find_witness_classes(report, 3),
                  euler_padic::WitnessShortfallError);
  try {
    find_witness_classes(report, 3);
  } catch (const euler_padic::WitnessShortfallError& e) {
    CHECK(e.found == 2);
    CHECK(e.requested == 3);
  }
}

TEST_CASE("JSON report carries config echo, summary, and verdicts") {
  auto report = scan(small_config());
  auto parsed = nlohmann::json::parse(euler_padic::scan_report_to_json(report));
  CHECK(parsed["config"]["m"] == 4);
  CHECK(parsed["config"]["classes"] == nlohmann::json::array({1, 3}));
  CHECK(parsed["config"]["a"] == 0);
  CHECK(parsed["config"]["b"] == -1);
  CHECK(parsed["summary"]["witness_class_count"] == 2);
  CHECK(parsed["verdicts"].size() == report.verdicts.size());
  const auto& first = parsed["verdicts"][0];
  CHECK(first["p"] == 3);
  CHECK(first["class"] == 3);
  CHECK(first.contains("valuation_kind"));
  CHECK(first.contains("verdict"));
}

TEST_CASE("CSV report has the documented header") {
  auto csv = euler_padic::scan_report_to_csv(scan(small_config()));
  CHECK(csv.rfind("p,class,valuation_kind,valuation_value,verdict\n", 0) == 0);
  CHECK(csv.back() == '\n');
}
