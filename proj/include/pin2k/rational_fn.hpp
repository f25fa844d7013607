#pragma once

#include <string>

#include "pin2k/laurent.hpp"

namespace pin2k {

// Quotient of two Laurent polynomials, kept gcd-reduced with the denominator
// normalized so its lowest exponent is 0 and the coefficient there is 1.
// With that normalization the quotient is a Laurent polynomial exactly when
// the denominator is the constant 1.
class RationalFn {
public:
  RationalFn() : num_(0L), den_(1L) {}
  RationalFn(const Laurent& value) : num_(value), den_(1L) {}
  // Reduces num/den; throws ZeroDenominator.
  RationalFn(const Laurent& num, const Laurent& den);

  const Laurent& numerator() const { return num_; }
  const Laurent& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Laurent(1L); }
  // Requires is_polynomial().
  const Laurent& polynomial() const;

  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;

  // Equality of the represented functions (canonical forms compare directly).
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  std::string str(const std::string& var = "phi") const;

private:
  Laurent num_, den_;
  void reduce();
};

// Monic gcd of two Laurent polynomials: both are shifted to ordinary
// polynomials and run through the Euclidean algorithm over Q(zeta). The
// result divides both inputs exactly; gcd(0, g) is the monic shift of g.
Laurent laurent_gcd(const Laurent& f, const Laurent& g);

// Exact division; throws Error when rem != 0. Exposed for tests.
Laurent laurent_div_exact(const Laurent& f, const Laurent& g);

// Long division of shifted-to-ordinary polynomials: returns {quotient,
// remainder} with f = q*g + r as ordinary polynomials in phi after both are
// multiplied by phi^(-min_exp). Exposed so tests can certify
// non-polynomiality by a route independent of gcd reduction.
std::pair<Laurent, Laurent> laurent_divmod(const Laurent& f, const Laurent& g);

}  // namespace pin2k
