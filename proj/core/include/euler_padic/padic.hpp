#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>

namespace euler_padic {

// Outcome of asking for v_p of a residue known only modulo p^K.
// A zero residue never certifies a zero value, it only says the
// valuation is at least K.
struct ValuationResult {
  enum class Kind { Exact, AtLeast };

  Kind kind;
  unsigned value;  // the exponent v for Exact, the precision K for AtLeast

  static ValuationResult exact(unsigned v) { return {Kind::Exact, v}; }
  static ValuationResult at_least(unsigned k) { return {Kind::AtLeast, k}; }

  bool is_exact() const { return kind == Kind::Exact; }

  friend bool operator==(const ValuationResult&, const ValuationResult&) = default;
};

namespace detail {
struct RingData {
  std::uint64_t p;
  unsigned precision;
  mpz_class prime;    // p as an mpz, for valuation extraction
  mpz_class modulus;  // p^K, computed once and shared
};
}  // namespace detail

class PadicApprox;

// Arithmetic context for Z mod p^K. Validates that p is prime and K >= 1,
// and owns the shared p^K modulus.
class PadicRing {
 public:
  PadicRing(std::uint64_t p, unsigned precision);

  std::uint64_t prime() const { return data_->p; }
  unsigned precision() const { return data_->precision; }
  const mpz_class& modulus() const { return data_->modulus; }

  // Canonical residue of x mod p^K; negative x wraps into [0, p^K).
  PadicApprox from_int(std::int64_t x) const;
  PadicApprox from_int(const mpz_class& x) const;

 private:
  std::shared_ptr<const detail::RingData> data_;
};

// A p-adic integer known modulo p^K. Immutable; the residue is always
// canonical in [0, p^K). Mixed-(p, K) arithmetic throws.
class PadicApprox {
 public:
  std::uint64_t prime() const { return ring_->p; }
  unsigned precision() const { return ring_->precision; }
  const mpz_class& residue() const { return residue_; }

  // Truncation to a coarser precision K' <= K.
  PadicApprox reduced(unsigned new_precision) const;

  ValuationResult valuation() const;

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);

  // Equal iff same (p, K) and same residue.
  bool operator==(const PadicApprox& other) const;

 private:
  friend class PadicRing;
  PadicApprox(std::shared_ptr<const detail::RingData> ring, mpz_class residue);

  std::shared_ptr<const detail::RingData> ring_;
  mpz_class residue_;
};

}  // namespace euler_padic
