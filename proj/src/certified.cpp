#include "ichom/certified.hpp"

#include <stdexcept>

namespace ichom {

CertifiedReal::CertifiedReal(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw std::invalid_argument("enclosure with hi < lo");
}

CertifiedReal CertifiedReal::scaled(const Rational& factor) const {
  if (factor.sign() >= 0) return {lo * factor, hi * factor};
  return {hi * factor, lo * factor};
}

std::string CertifiedReal::to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + "]"; }

PiEnclosure PiEnclosure::standard() {
  return {Rational(314159265, 100000000), Rational(314159266, 100000000)};
}

namespace {

// Partial sums of atan(1/q) = sum (-1)^k / ((2k+1) q^(2k+1)); an alternating
// series with decreasing terms, so consecutive partial sums bracket the limit.
void atan_inverse(long long q, const Rational& tolerance, Rational& lo, Rational& hi) {
  Rational sum = 0;
  Rational power = Rational(1, q);
  Rational q2 = Rational(q * q);
  for (long long k = 0;; ++k) {
    Rational term = power / Rational(2 * k + 1);
    Rational next = (k % 2 == 0) ? sum + term : sum - term;
    if (term < tolerance) {
      lo = min(sum, next);
      hi = max(sum, next);
      return;
    }
    sum = next;
    power = power / q2;
  }
}

}  // namespace

PiEnclosure PiEnclosure::with_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("pi enclosure needs at least one digit");
  Integer ten = 10;
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));
  Rational tolerance = Rational(Integer(1), scale) / Rational(40);
  Rational a_lo, a_hi, b_lo, b_hi;
  atan_inverse(5, tolerance, a_lo, a_hi);
  atan_inverse(239, tolerance, b_lo, b_hi);
  // pi = 16 atan(1/5) - 4 atan(1/239)
  return {Rational(16) * a_lo - Rational(4) * b_hi, Rational(16) * a_hi - Rational(4) * b_lo};
}

CertifiedReal PiMultiple::enclose(const PiEnclosure& pi) const { return pi.as_real().scaled(coefficient); }

}  // namespace ichom
