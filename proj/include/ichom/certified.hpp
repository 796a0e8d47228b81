#pragma once

#include <string>

#include "ichom/rational.hpp"

namespace ichom {

// A closed rational interval [lo, hi] known to contain some real number.
struct CertifiedReal {
  Rational lo;
  Rational hi;

  CertifiedReal() = default;
  CertifiedReal(Rational lo_, Rational hi_);
  static CertifiedReal exact(const Rational& value) { return {value, value}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  // Certified comparisons: true only when the relation holds for every point
  // of the enclosure.
  bool certainly_le(const Rational& x) const { return hi <= x; }
  bool certainly_lt(const Rational& x) const { return hi < x; }
  bool certainly_ge(const Rational& x) const { return lo >= x; }

  CertifiedReal operator+(const CertifiedReal& o) const { return {lo + o.lo, hi + o.hi}; }
  // Scaling by a rational of either sign.
  CertifiedReal scaled(const Rational& factor) const;

  std::string to_string() const;
};

// Rational enclosure of pi.
struct PiEnclosure {
  Rational lo;
  Rational hi;

  // 3.14159265 < pi < 3.14159266
  static PiEnclosure standard();
  // Machin's formula with alternating-series remainder bounds; width below
  // 10^-digits.
  static PiEnclosure with_digits(int digits);

  CertifiedReal as_real() const { return {lo, hi}; }
};

// c * pi for an exact rational coefficient c.
struct PiMultiple {
  Rational coefficient;

  CertifiedReal enclose(const PiEnclosure& pi = PiEnclosure::standard()) const;
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

}  // namespace ichom
