#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace euler_padic {

// Sampling plan for the decay sequence L(n) over a class union R mod m
// with a finite excluded prime set S.
struct DecayConfig {
  std::uint64_t m = 3;
  std::vector<std::uint64_t> classes;          // selected reduced classes (R)
  std::vector<std::uint64_t> excluded_primes;  // S, primes inside R
  std::int64_t xi = 1;
  std::vector<std::uint64_t> n_samples;        // ascending
};

std::vector<std::string> validate_decay_config(const DecayConfig& config);

struct DecaySample {
  std::uint64_t n;
  double log_c0_term;    // n log c0
  double log_factorial;  // log n!
  double padic_sum;      // 2 * sum over p in R\S, p <= n of log |n!|_p  (<= 0)
  double L;              // sum of the three terms above
  double ratio;          // L / (n log n); NaN at n = 1
};

struct DecaySeries {
  std::vector<DecaySample> samples;
  double limit_coefficient;  // 1 - 2r/phi(m)
};

// c0 = 4|xi| * prod over primes q | xi with q in R\S of |xi|_q^2.
double c_constant(std::int64_t xi, std::uint64_t m,
                  const std::vector<std::uint64_t>& classes,
                  const std::vector<std::uint64_t>& excluded_primes);

DecaySeries l_sequence(const DecayConfig& config);

// [ sum over p <= n, p = a (mod m) of v_p(n!) log p ] / (n log n / phi(m)).
// Tends to 1; requires n >= 3 and gcd(a, m) = 1.
double lemma2_ratio(std::uint64_t n, std::uint64_t m, std::uint64_t a);

struct StirlingEstimate {
  std::uint64_t n;
  double exact_log_factorial;  // sum of log k, compensated
  double approx;               // log sqrt(2 pi) + (n + 1/2) log n - n
  double remainder;            // exact - approx, in (0, 1/(12n))
};

StirlingEstimate stirling_check(std::uint64_t n);

// Empirical d_m surrogate: exp(-sup over 3 <= n <= N of M(n)) where
// M(n) = [log n! + 2 sum over p in R, p <= n of log |n!|_p] / n.
// Requires |classes| = phi(m)/2 exactly and N >= 3.
double estimate_dm(std::uint64_t m, const std::vector<std::uint64_t>& classes,
                   std::uint64_t n_max);

// CSV: n,log_c0_term,log_factorial,padic_sum,L,ratio,limit_coefficient.
std::string decay_to_csv(const DecaySeries& series);

// Default geometric sample grid: unique ceil(10^(k/4)) values <= n_max,
// with n_max itself always included.
std::vector<std::uint64_t> geometric_samples(std::uint64_t n_max);

}  // namespace euler_padic
