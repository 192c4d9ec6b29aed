#include "euler_padic/factorial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "euler_padic/primality.hpp"

namespace euler_padic {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  std::uint64_t total = 0;
  // q > n/p stops before q*p could exceed n, so q never overflows.
  for (std::uint64_t q = p;; q *= p) {
    total += n / q;
    if (q > n / p) break;
  }
  return total;
}

ValuationBounds valuation_bounds(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n < 1) {
    throw std::invalid_argument("valuation_bounds requires n >= 1");
  }
  double nd = static_cast<double>(n);
  double pd = static_cast<double>(p);
  ValuationBounds b;
  b.lower = nd / (pd - 1.0) - std::log(nd) / std::log(pd) - 1.0;
  b.upper = (nd - 1.0) / (pd - 1.0);
  return b;
}

double log_abs_factorial(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = legendre_valuation(n, p);
  return -static_cast<double>(v) * std::log(static_cast<double>(p));
}

std::uint64_t brute_force_valuation(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n > kBruteForceCap) {
    throw std::invalid_argument("brute_force_valuation capped at n <= " +
                                std::to_string(kBruteForceCap));
  }
  std::uint64_t total = 0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    std::uint64_t r = k;
    while (r % p == 0) {
      r /= p;
      ++total;
    }
  }
  return total;
}

}  // namespace euler_padic
