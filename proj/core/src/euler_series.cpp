#include "euler_padic/euler_series.hpp"

#include <stdexcept>

namespace euler_padic {

namespace {

// v_p(n) for n a positive multiple of p.
std::uint64_t prime_multiplicity(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::uint64_t truncation_index(std::uint64_t p, unsigned precision) {
  // v_p(n!) grows only at multiples of p; walk them until it reaches K.
  std::uint64_t v = 0;
  std::uint64_t n = 0;
  while (v < precision) {
    n += p;
    v += prime_multiplicity(n, p);
  }
  return n;
}

SeriesEvaluation evaluate_euler(std::int64_t xi, const PadicRing& ring) {
  const std::uint64_t n_trunc = truncation_index(ring.prime(), ring.precision());
  const mpz_srcptr modulus = ring.modulus().get_mpz_t();

  mpz_class acc(1);  // n = 0 term
  mpz_class term(1);
  std::uint64_t summed = 1;
  for (std::uint64_t n = 1; n < n_trunc; ++n) {
    // term <- term * n * xi mod p^K
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_mul_si(term.get_mpz_t(), term.get_mpz_t(), static_cast<long>(xi));
    mpz_mod(term.get_mpz_t(), term.get_mpz_t(), modulus);
    if (mpz_sgn(term.get_mpz_t()) == 0) break;  // tail is 0 mod p^K from here on
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
    ++summed;
  }

  return SeriesEvaluation{ring.from_int(acc), n_trunc, summed};
}

SeriesEvaluation evaluate_euler(std::int64_t xi, std::uint64_t p, unsigned precision) {
  return evaluate_euler(xi, PadicRing(p, precision));
}

LambdaEvaluation evaluate_lambda(std::int64_t a, std::int64_t b, std::int64_t xi,
                                 const PadicRing& ring) {
  if (b == 0) {
    throw std::invalid_argument("Lambda(x) = a - b x requires b != 0");
  }
  SeriesEvaluation series = evaluate_euler(xi, ring);
  mpz_class lambda(static_cast<long>(a));
  mpz_class scaled;
  mpz_mul_si(scaled.get_mpz_t(), series.value.residue().get_mpz_t(), static_cast<long>(b));
  lambda -= scaled;
  PadicApprox value = ring.from_int(lambda);
  ValuationResult valuation = value.valuation();
  return LambdaEvaluation{a, b, std::move(value), valuation};
}

LambdaEvaluation evaluate_lambda(std::int64_t a, std::int64_t b, std::int64_t xi,
                                 std::uint64_t p, unsigned precision) {
  return evaluate_lambda(a, b, xi, PadicRing(p, precision));
}

}  // namespace euler_padic
