#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "euler_padic/decay.hpp"
#include "euler_padic/factorial.hpp"
#include "euler_padic/primes.hpp"

using euler_padic::c_constant;
using euler_padic::DecayConfig;
using euler_padic::estimate_dm;
using euler_padic::geometric_samples;
using euler_padic::l_sequence;
using euler_padic::lemma2_ratio;
using euler_padic::stirling_check;
using euler_padic::validate_decay_config;

namespace {

DecayConfig cancellation_config(std::vector<std::uint64_t> samples) {
  DecayConfig config;
  config.m = 4;
  config.classes = {3};
  config.xi = 1;
  config.n_samples = std::move(samples);
  return config;
}

// Oracle: L(n) from the definition log(c0^n n! prod |n!|_p^2) with exact
// big-integer n! and exact valuations, only the final log in floating point.
double l_by_definition(std::uint64_t n, double c0, std::uint64_t m,
                       const std::vector<std::uint64_t>& classes) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  double log_fact = std::log(fact.get_d());
  double value = static_cast<double>(n) * std::log(c0) + log_fact;
  for (std::uint64_t p : euler_padic::sieve_primes(std::max<std::uint64_t>(n, 2))) {
    if (p > n) break;
    if (std::find(classes.begin(), classes.end(), p % m) == classes.end()) continue;
    value -= 2.0 * static_cast<double>(euler_padic::legendre_valuation(n, p)) *
             std::log(static_cast<double>(p));
  }
  return value;
}

}  // namespace

TEST_CASE("c_constant worked examples") {
  CHECK(c_constant(1, 4, {1, 3}, {}) == doctest::Approx(4.0));
  CHECK(c_constant(2, 3, {2}, {}) == doctest::Approx(2.0));
  CHECK(c_constant(-3, 4, {3}, {}) == doctest::Approx(4.0 / 3.0));
  CHECK(c_constant(-3, 4, {1}, {}) == doctest::Approx(12.0));
  CHECK(c_constant(-3, 4, {3}, {3}) == doctest::Approx(12.0));
  CHECK_THROWS_AS(c_constant(0, 4, {1}, {}), std::invalid_argument);
}

TEST_CASE("decay config validation") {
  auto config = cancellation_config({1, 10, 100});
  CHECK(validate_decay_config(config).empty());

  config.xi = 0;
  CHECK_FALSE(validate_decay_config(config).empty());

  auto unsorted = cancellation_config({10, 5});
  CHECK_FALSE(validate_decay_config(unsorted).empty());

  auto bad_class = cancellation_config({10});
  bad_class.classes = {2};
  CHECK_FALSE(validate_decay_config(bad_class).empty());

  auto bad_excluded = cancellation_config({10});
  bad_excluded.excluded_primes = {4};
  CHECK_FALSE(validate_decay_config(bad_excluded).empty());

  auto wrong_class_prime = cancellation_config({10});
  wrong_class_prime.excluded_primes = {5};
  CHECK_FALSE(validate_decay_config(wrong_class_prime).empty());

  auto ok_excluded = cancellation_config({10});
  ok_excluded.excluded_primes = {7};
  CHECK(validate_decay_config(ok_excluded).empty());
}

TEST_CASE("L(10) for the cancellation configuration") {
  auto series = l_sequence(cancellation_config({10}));
  REQUIRE(series.samples.size() == 1);
  const auto& s = series.samples[0];
  double expected = 10.0 * std::log(4.0) + std::log(3628800.0) +
                    2.0 * (-4.0 * std::log(3.0) - std::log(7.0));
  CHECK(s.L == doctest::Approx(expected).epsilon(1e-9));
  CHECK(s.L == doctest::Approx(16.287).epsilon(1e-3));
  CHECK(s.padic_sum <= 0.0);
  CHECK(series.limit_coefficient == doctest::Approx(0.0));
}

TEST_CASE("L(1) collapses to log c0") {
  auto series = l_sequence(cancellation_config({1}));
  CHECK(series.samples[0].L == doctest::Approx(std::log(4.0)));
  CHECK(std::isnan(series.samples[0].ratio));
}

TEST_CASE("three-term form matches the definition for n up to 20") {
  DecayConfig config;
  config.m = 3;
  config.classes = {1, 2};
  config.xi = 1;
  for (std::uint64_t n = 1; n <= 20; ++n) config.n_samples.push_back(n);
  auto series = l_sequence(config);
  double c0 = c_constant(1, 3, {1, 2}, {});
  for (const auto& s : series.samples) {
    double expected = l_by_definition(s.n, c0, 3, {1, 2});
    CHECK(s.L == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("full class union trends toward coefficient -1") {
  DecayConfig config;
  config.m = 3;
  config.classes = {1, 2};
  config.xi = 1;
  config.n_samples = {1000, 10000};
  auto series = l_sequence(config);
  CHECK(series.limit_coefficient == doctest::Approx(-1.0));
  double at_1e3 = std::abs(series.samples[0].ratio - (-1.0));
  double at_1e4 = std::abs(series.samples[1].ratio - (-1.0));
  CHECK(at_1e4 < at_1e3);
}

TEST_CASE("excluding finitely many primes shifts the ratio by O(1/log n)") {
  const std::uint64_t n = 100000;
  auto base = cancellation_config({n});
  double r0 = l_sequence(base).samples[0].ratio;

  // Each excluded p removes 2 v_p(n!) log p <= 2 n log p / (p-1) from L,
  // so the ratio moves by at most sum 2 log p / ((p-1) log n).
  auto bounded_shift = [&](const std::vector<std::uint64_t>& s) {
    auto excluded = base;
    excluded.excluded_primes = s;
    double shift = std::abs(l_sequence(excluded).samples[0].ratio - r0);
    double allowance = 0.0;
    for (std::uint64_t p : s) {
      allowance += 2.0 * std::log(static_cast<double>(p)) /
                   (static_cast<double>(p - 1) * std::log(static_cast<double>(n)));
    }
    CHECK(shift > 0.0);
    CHECK(shift <= allowance);
    return shift;
  };

  bounded_shift({3, 7, 11, 19, 23});

  // Away from the smallest primes the allowance is tiny in absolute terms.
  std::vector<std::uint64_t> large;
  for (std::uint64_t p : euler_padic::sieve_primes(3000)) {
    if (p % 4 == 3) large.push_back(p);
  }
  large.erase(large.begin(), large.end() - 5);
  CHECK(bounded_shift(large) < 0.01);
}

TEST_CASE("lemma2_ratio matches the worked example and trends to 1") {
  double expected = (4.0 * std::log(3.0) + std::log(7.0)) /
                    (10.0 * std::log(10.0) / 2.0);
  CHECK(lemma2_ratio(10, 4, 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(lemma2_ratio(10, 4, 3) == doctest::Approx(0.551).epsilon(1e-3));

  CHECK(lemma2_ratio(3, 5, 1) == 0.0);

  CHECK_THROWS_AS(lemma2_ratio(2, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(lemma2_ratio(10, 4, 2), std::invalid_argument);

  for (std::uint64_t a : {1ull, 2ull}) {
    double far = std::abs(lemma2_ratio(100, 3, a) - 1.0);
    double near = std::abs(lemma2_ratio(100000, 3, a) - 1.0);
    CHECK(near < far);
  }
}

TEST_CASE("stirling remainder sits inside its window") {
  auto at10 = stirling_check(10);
  CHECK(at10.remainder == doctest::Approx(0.00833).epsilon(1e-3));
  CHECK(at10.remainder > 0.0);
  CHECK(at10.remainder < 1.0 / 120.0);

  auto at1 = stirling_check(1);
  CHECK(at1.exact_log_factorial == 0.0);
  CHECK(at1.remainder == doctest::Approx(0.0811).epsilon(1e-3));
  CHECK(at1.remainder < 1.0 / 12.0);

  double prev = at1.remainder;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    auto est = stirling_check(n);
    CHECK(est.remainder < prev);
    prev = est.remainder;
  }
}

TEST_CASE("estimate_dm matches a direct recomputation of sup M") {
  for (auto [m, cls] : {std::pair<std::uint64_t, std::uint64_t>{4, 3}, {3, 2}}) {
    const std::uint64_t N = 200;
    double sup = -1e300;
    double log_fact = 0.0;
    for (std::uint64_t n = 2; n <= N; ++n) {
      log_fact += std::log(static_cast<double>(n));
      if (n < 3) continue;
      double padic = 0.0;
      for (std::uint64_t p : euler_padic::sieve_primes(n)) {
        if (p % m != cls) continue;
        padic += static_cast<double>(euler_padic::legendre_valuation(n, p)) *
                 std::log(static_cast<double>(p));
      }
      sup = std::max(sup, (log_fact - 2.0 * padic) / static_cast<double>(n));
    }
    CHECK(estimate_dm(m, {cls}, N) == doctest::Approx(std::exp(-sup)).epsilon(1e-12));
  }
}

TEST_CASE("estimate_dm accepts only half-sized class unions") {
  CHECK_THROWS_AS(estimate_dm(3, {1, 2}, 1000), std::invalid_argument);
  CHECK_THROWS_AS(estimate_dm(4, {3}, 2), std::invalid_argument);

  double d4 = estimate_dm(4, {3}, 1000);
  CHECK(d4 > 0.0);
  double d3 = estimate_dm(3, {2}, 1000);
  CHECK(d3 > 0.0);

  // Sup of M over a longer prefix can only grow, so the estimate shrinks.
  CHECK(estimate_dm(4, {3}, 2000) <= d4);
}

TEST_CASE("geometric grid is ascending, unique, and ends at the bound") {
  auto grid = geometric_samples(100000);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());
  CHECK(grid.front() == 1);
  CHECK(grid.back() == 100000);
  for (auto n : grid) CHECK(n <= 100000);

  CHECK(geometric_samples(1) == std::vector<std::uint64_t>{1});
  auto small = geometric_samples(7);
  CHECK(small.back() == 7);
}

TEST_CASE("decay CSV has the documented columns") {
  auto series = l_sequence(cancellation_config({1, 10}));
  auto csv = euler_padic::decay_to_csv(series);
  CHECK(csv.rfind("n,log_c0_term,log_factorial,padic_sum,L,ratio,limit_coefficient\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("nan") != std::string::npos);
}
