#pragma once

#include <cstdint>

namespace euler_padic {

// Analytic sandwich for v_p(n!):
//   n/(p-1) - log n/log p - 1  <=  v_p(n!)  <=  (n-1)/(p-1).
struct ValuationBounds {
  double lower;
  double upper;
};

// v_p(n!) as the floor sum over powers of p. Integer arithmetic only.
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

// Evaluates both bound formulas; requires n >= 1.
ValuationBounds valuation_bounds(std::uint64_t n, std::uint64_t p);

// log |n!|_p = -v_p(n!) * log p. Always <= 0.
double log_abs_factorial(std::uint64_t n, std::uint64_t p);

// Test oracle: accumulates v_p(k) for k = 1..n by repeated division.
// Deliberately naive; capped at kBruteForceCap.
inline constexpr std::uint64_t kBruteForceCap = 2000;
std::uint64_t brute_force_valuation(std::uint64_t n, std::uint64_t p);

}  // namespace euler_padic
