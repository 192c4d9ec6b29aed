#pragma once

#include <cstdint>

#include "euler_padic/padic.hpp"

namespace euler_padic {

// F_p(xi) = sum n! xi^n known modulo p^K. Every term with index >= the
// truncation index has v_p(n! xi^n) >= K, so `value` is exact at precision K.
struct SeriesEvaluation {
  PadicApprox value;
  std::uint64_t truncation_index;  // certified N
  std::uint64_t terms_summed;      // terms actually accumulated (<= N)
};

// Minimal N with v_p(n!) >= K for all n >= N. Always a multiple of p.
std::uint64_t truncation_index(std::uint64_t p, unsigned precision);

SeriesEvaluation evaluate_euler(std::int64_t xi, const PadicRing& ring);
SeriesEvaluation evaluate_euler(std::int64_t xi, std::uint64_t p, unsigned precision);

// Lambda(F_p(xi)) = a - b F_p(xi) mod p^K, with its valuation. An exact
// valuation certifies Lambda(F_p(xi)) != 0 in Z_p; a residue of zero is
// reported as "at least K" and decides nothing.
struct LambdaEvaluation {
  std::int64_t a;
  std::int64_t b;
  PadicApprox value;
  ValuationResult valuation;
};

LambdaEvaluation evaluate_lambda(std::int64_t a, std::int64_t b, std::int64_t xi,
                                 const PadicRing& ring);
LambdaEvaluation evaluate_lambda(std::int64_t a, std::int64_t b, std::int64_t xi,
                                 std::uint64_t p, unsigned precision);

}  // namespace euler_padic
