#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace euler_padic {

// Thrown when a requested sieve would exceed the configured memory budget.
class SieveBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Primes in [2, x], ascending. Segmented odds-only Eratosthenes.
// budget_bytes == 0 means: use EULER_PADIC_MEM_CAP (bytes) when set,
// else 1 GiB.
std::vector<std::uint64_t> sieve_primes(std::uint64_t x, std::size_t budget_bytes = 0);

// (prime, exponent) pairs, ascending by prime. factorize(1) == {}.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t m);

// The reduced residue system modulo m.
struct ResidueSystem {
  std::uint64_t m;
  std::vector<std::uint64_t> classes;  // ascending, gcd(a, m) = 1, 1 <= a < m
  std::uint64_t phi;
};

ResidueSystem reduced_classes(std::uint64_t m);  // requires m >= 3

// theta(x; m, a) = sum of log p over primes p <= x, p = a (mod m).
double theta(double x, std::uint64_t m, std::uint64_t a);

// psi(x; m, a) = sum of log p over prime powers p^k <= x, p^k = a (mod m).
double psi(double x, std::uint64_t m, std::uint64_t a);

struct ThetaSample {
  double x;
  double theta;
  double psi;
  double main_term;          // x / phi(m)
  double err_unconditional;  // |theta - x/phi(m)| * log x / x
  double err_grh;            // |psi - x/phi(m)| / (sqrt(x) * log^2 x)
};

struct ThetaProfile {
  std::uint64_t m;
  std::uint64_t a;
  std::vector<ThetaSample> samples;
};

// Profile over sample points xs (each >= 2), sharing one sieve pass.
// Sample order in the result follows xs.
ThetaProfile theta_error_profile(const std::vector<double>& xs, std::uint64_t m,
                                 std::uint64_t a);

// CSV with header x,theta,psi,main_term,err_unconditional,err_grh. LF endings.
std::string profile_to_csv(const ThetaProfile& profile);

}  // namespace euler_padic
