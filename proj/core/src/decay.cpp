#include "euler_padic/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "euler_padic/factorial.hpp"
#include "euler_padic/primality.hpp"
#include "euler_padic/primes.hpp"
#include "format_util.hpp"
#include "kahan.hpp"

namespace euler_padic {

namespace {

using u64 = std::uint64_t;

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log sqrt(2 pi)

std::vector<std::string> validate_class_subset(u64 m, const std::vector<u64>& classes) {
  std::vector<std::string> issues;
  if (m < 3) issues.push_back("m: must be >= 3");
  if (classes.empty()) issues.push_back("classes: must be nonempty");
  if (m >= 3) {
    for (u64 c : classes) {
      if (c < 1 || c >= m) {
        issues.push_back("classes: " + std::to_string(c) + " is outside [1, m)");
      } else if (std::gcd(c, m) != 1) {
        issues.push_back("classes: " + std::to_string(c) + " is not reduced modulo " +
                         std::to_string(m));
      }
    }
    auto sorted = classes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      issues.push_back("classes: duplicate entries");
    }
  }
  return issues;
}

void throw_if_invalid(std::vector<std::string> issues, const char* what) {
  if (issues.empty()) return;
  std::string msg = std::string("invalid ") + what + ":";
  for (const auto& issue : issues) msg += "\n  " + issue;
  throw std::invalid_argument(msg);
}

bool in_classes(u64 p, u64 m, const std::vector<char>& selected) {
  return selected[p % m] != 0;
}

std::vector<char> class_mask(u64 m, const std::vector<u64>& classes) {
  std::vector<char> mask(m, 0);
  for (u64 c : classes) mask[c] = 1;
  return mask;
}

}  // namespace

std::vector<std::string> validate_decay_config(const DecayConfig& config) {
  auto issues = validate_class_subset(config.m, config.classes);
  if (config.xi == 0) issues.push_back("xi: must be nonzero");
  if (config.n_samples.empty()) {
    issues.push_back("n_samples: must be nonempty");
  } else {
    if (config.n_samples.front() < 1) issues.push_back("n_samples: values must be >= 1");
    if (!std::is_sorted(config.n_samples.begin(), config.n_samples.end()) ||
        std::adjacent_find(config.n_samples.begin(), config.n_samples.end()) !=
            config.n_samples.end()) {
      issues.push_back("n_samples: must be strictly ascending");
    }
  }
  if (config.m >= 3) {
    auto mask = class_mask(config.m, config.classes);
    for (u64 s : config.excluded_primes) {
      if (!is_prime(s)) {
        issues.push_back("excluded_primes: " + std::to_string(s) + " is not prime");
      } else if (!in_classes(s, config.m, mask)) {
        issues.push_back("excluded_primes: " + std::to_string(s) +
                         " lies in no selected class");
      }
    }
  }
  return issues;
}

double c_constant(std::int64_t xi, u64 m, const std::vector<u64>& classes,
                  const std::vector<u64>& excluded_primes) {
  if (xi == 0) throw std::invalid_argument("c_constant requires xi != 0");
  throw_if_invalid(validate_class_subset(m, classes), "class subset");

  u64 abs_xi = xi < 0 ? static_cast<u64>(-(xi + 1)) + 1 : static_cast<u64>(xi);
  auto mask = class_mask(m, classes);

  // Only primes dividing xi contribute; every other factor of the product
  // is |xi|_p = 1.
  double c = 4.0 * static_cast<double>(abs_xi);
  for (auto [p, e] : factorize(abs_xi)) {
    if (!in_classes(p, m, mask)) continue;
    if (std::find(excluded_primes.begin(), excluded_primes.end(), p) !=
        excluded_primes.end()) {
      continue;
    }
    c *= std::pow(static_cast<double>(p), -2.0 * static_cast<double>(e));
  }
  return c;
}

DecaySeries l_sequence(const DecayConfig& config) {
  throw_if_invalid(validate_decay_config(config), "decay config");

  const double phi = static_cast<double>(euler_phi(config.m));
  const double r = static_cast<double>(config.classes.size());
  const double log_c0 =
      std::log(c_constant(config.xi, config.m, config.classes, config.excluded_primes));
  auto mask = class_mask(config.m, config.classes);
  auto excluded = config.excluded_primes;
  std::sort(excluded.begin(), excluded.end());

  const u64 n_max = config.n_samples.back();
  auto primes = sieve_primes(n_max);

  DecaySeries series;
  series.limit_coefficient = 1.0 - 2.0 * r / phi;
  series.samples.reserve(config.n_samples.size());

  // log n! accumulates across samples; the addition order is identical to a
  // single ascending sweep, so prefixes are reproducible.
  detail::Kahan log_fact;
  u64 k = 1;
  for (u64 n : config.n_samples) {
    for (; k < n; ++k) {
      log_fact.add(std::log(static_cast<double>(k + 1)));
    }

    detail::Kahan padic;
    for (u64 p : primes) {
      if (p > n) break;
      if (!in_classes(p, config.m, mask)) continue;
      if (std::binary_search(excluded.begin(), excluded.end(), p)) continue;
      padic.add(-2.0 * static_cast<double>(legendre_valuation(n, p)) *
                std::log(static_cast<double>(p)));
    }

    DecaySample s;
    s.n = n;
    s.log_c0_term = static_cast<double>(n) * log_c0;
    s.log_factorial = log_fact.value();
    s.padic_sum = padic.value();
    s.L = s.log_c0_term + s.log_factorial + s.padic_sum;
    double denom = static_cast<double>(n) * std::log(static_cast<double>(n));
    s.ratio = n >= 2 ? s.L / denom : std::nan("");
    series.samples.push_back(s);
  }
  return series;
}

double lemma2_ratio(u64 n, u64 m, u64 a) {
  if (n < 3) throw std::invalid_argument("lemma2_ratio requires n >= 3");
  if (m < 3) throw std::invalid_argument("lemma2_ratio requires m >= 3");
  if (std::gcd(a % m, m) != 1) {
    throw std::invalid_argument("class a = " + std::to_string(a) +
                                " is not reduced modulo m = " + std::to_string(m));
  }
  u64 target = a % m;
  detail::Kahan sum;
  for (u64 p : sieve_primes(n)) {
    if (p % m != target) continue;
    sum.add(static_cast<double>(legendre_valuation(n, p)) *
            std::log(static_cast<double>(p)));
  }
  double nd = static_cast<double>(n);
  double main = nd * std::log(nd) / static_cast<double>(euler_phi(m));
  return sum.value() / main;
}

StirlingEstimate stirling_check(u64 n) {
  if (n < 1) throw std::invalid_argument("stirling_check requires n >= 1");
  detail::Kahan exact;
  for (u64 k = 2; k <= n; ++k) {
    exact.add(std::log(static_cast<double>(k)));
  }
  double nd = static_cast<double>(n);
  StirlingEstimate est;
  est.n = n;
  est.exact_log_factorial = exact.value();
  est.approx = kLogSqrt2Pi + (nd + 0.5) * std::log(nd) - nd;
  est.remainder = est.exact_log_factorial - est.approx;
  return est;
}

double estimate_dm(u64 m, const std::vector<u64>& classes, u64 n_max) {
  throw_if_invalid(validate_class_subset(m, classes), "class subset");
  if (classes.size() != euler_phi(m) / 2) {
    throw std::invalid_argument("estimate_dm requires exactly phi(m)/2 classes, phi(" +
                                std::to_string(m) + ")/2 = " +
                                std::to_string(euler_phi(m) / 2));
  }
  if (n_max < 3) throw std::invalid_argument("estimate_dm requires N >= 3");
  if (n_max > (u64(1) << 31)) {
    throw std::invalid_argument("estimate_dm sample bound too large for the SPF table");
  }

  auto mask = class_mask(m, classes);

  // Smallest-prime-factor table for incremental valuation updates:
  // v_p(n!) = v_p((n-1)!) + v_p(n), so each n contributes the factors of n.
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  for (u64 i = 2; i <= n_max; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= n_max; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }

  detail::Kahan log_fact;    // log n!
  detail::Kahan padic_sum;   // sum over p in R, p <= n of v_p(n!) log p
  double sup = -std::numeric_limits<double>::infinity();
  for (u64 n = 2; n <= n_max; ++n) {
    log_fact.add(std::log(static_cast<double>(n)));
    u64 rest = n;
    while (rest > 1) {
      u64 p = spf[rest];
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (in_classes(p, m, mask)) {
        padic_sum.add(static_cast<double>(e) * std::log(static_cast<double>(p)));
      }
    }
    if (n < 3) continue;
    double M = (log_fact.value() - 2.0 * padic_sum.value()) / static_cast<double>(n);
    sup = std::max(sup, M);
  }
  return std::exp(-sup);
}

std::string decay_to_csv(const DecaySeries& series) {
  std::string csv = "n,log_c0_term,log_factorial,padic_sum,L,ratio,limit_coefficient\n";
  for (const DecaySample& s : series.samples) {
    csv += std::to_string(s.n);
    csv += ',';
    csv += detail::format_double(s.log_c0_term);
    csv += ',';
    csv += detail::format_double(s.log_factorial);
    csv += ',';
    csv += detail::format_double(s.padic_sum);
    csv += ',';
    csv += detail::format_double(s.L);
    csv += ',';
    csv += detail::format_double(s.ratio);
    csv += ',';
    csv += detail::format_double(series.limit_coefficient);
    csv += '\n';
  }
  return csv;
}

std::vector<u64> geometric_samples(u64 n_max) {
  std::vector<u64> samples;
  for (unsigned k = 0;; ++k) {
    double v = std::ceil(std::pow(10.0, static_cast<double>(k) / 4.0));
    if (v > static_cast<double>(n_max)) break;
    u64 n = static_cast<u64>(v);
    if (samples.empty() || samples.back() != n) samples.push_back(n);
  }
  if (samples.empty() || samples.back() != n_max) samples.push_back(n_max);
  return samples;
}

}  // namespace euler_padic
