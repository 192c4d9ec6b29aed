#include "euler_padic/padic.hpp"

#include <stdexcept>
#include <string>

#include "euler_padic/primality.hpp"

static_assert(sizeof(unsigned long) == 8, "LP64 expected: unsigned long carries uint64");

namespace euler_padic {

namespace {

std::shared_ptr<const detail::RingData> make_ring_data(std::uint64_t p, unsigned precision) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  if (precision < 1) {
    throw std::invalid_argument("precision K must be >= 1");
  }
  auto data = std::make_shared<detail::RingData>();
  data->p = p;
  data->precision = precision;
  data->prime = mpz_class(static_cast<unsigned long>(p));
  mpz_ui_pow_ui(data->modulus.get_mpz_t(), static_cast<unsigned long>(p), precision);
  return data;
}

void require_same_ring(const PadicApprox& a, const PadicApprox& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision()) {
    throw std::invalid_argument(
        "mixed-(p, K) operation: (" + std::to_string(a.prime()) + ", " +
        std::to_string(a.precision()) + ") vs (" + std::to_string(b.prime()) + ", " +
        std::to_string(b.precision()) + ")");
  }
}

}  // namespace

PadicRing::PadicRing(std::uint64_t p, unsigned precision)
    : data_(make_ring_data(p, precision)) {}

PadicApprox PadicRing::from_int(std::int64_t x) const {
  return from_int(mpz_class(static_cast<long>(x)));
}

PadicApprox PadicRing::from_int(const mpz_class& x) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), data_->modulus.get_mpz_t());
  return PadicApprox(data_, std::move(r));
}

PadicApprox::PadicApprox(std::shared_ptr<const detail::RingData> ring, mpz_class residue)
    : ring_(std::move(ring)), residue_(std::move(residue)) {}

PadicApprox PadicApprox::reduced(unsigned new_precision) const {
  if (new_precision < 1 || new_precision > precision()) {
    throw std::invalid_argument("reduced precision must satisfy 1 <= K' <= K");
  }
  if (new_precision == precision()) return *this;
  PadicRing coarser(prime(), new_precision);
  return coarser.from_int(residue_);
}

ValuationResult PadicApprox::valuation() const {
  if (mpz_sgn(residue_.get_mpz_t()) == 0) {
    return ValuationResult::at_least(precision());
  }
  mpz_class stripped;
  mp_bitcnt_t v = mpz_remove(stripped.get_mpz_t(), residue_.get_mpz_t(),
                             ring_->prime.get_mpz_t());
  return ValuationResult::exact(static_cast<unsigned>(v));
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  require_same_ring(a, b);
  mpz_class r = a.residue_ + b.residue_;
  if (r >= a.ring_->modulus) r -= a.ring_->modulus;
  return PadicApprox(a.ring_, std::move(r));
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  require_same_ring(a, b);
  mpz_class r;
  mpz_mul(r.get_mpz_t(), a.residue_.get_mpz_t(), b.residue_.get_mpz_t());
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), a.ring_->modulus.get_mpz_t());
  return PadicApprox(a.ring_, std::move(r));
}

bool PadicApprox::operator==(const PadicApprox& other) const {
  return prime() == other.prime() && precision() == other.precision() &&
         residue_ == other.residue_;
}

}  // namespace euler_padic
