#pragma once

#include <complex>
#include <map>
#include <string>

#include "pin2k/cyclotomic.hpp"

namespace pin2k {

// Sparse Laurent polynomial in one formal variable (the generic circle
// element phi) with cyclotomic coefficients. No zero terms are stored.
class Laurent {
public:
  Laurent() = default;
  Laurent(const Cyclotomic& c) { set_coeff(0, c); }
  Laurent(const Rat& r) : Laurent(Cyclotomic(r)) {}
  Laurent(long n) : Laurent(Cyclotomic(n)) {}

  static Laurent variable(long exponent = 1) {
    Laurent f;
    f.set_coeff(exponent, Cyclotomic(Rat(1)));
    return f;
  }
  static Laurent monomial(const Cyclotomic& c, long exponent) {
    Laurent f;
    f.set_coeff(exponent, c);
    return f;
  }

  const std::map<long, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  Cyclotomic coeff_at(long exponent) const;
  Cyclotomic constant_value() const { return coeff_at(0); }

  // Require !is_zero().
  long min_exp() const;
  long max_exp() const;

  void set_coeff(long exponent, const Cyclotomic& c);

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent pow(unsigned e) const;

  // Multiply by c * phi^e.
  Laurent shifted(const Cyclotomic& c, long e) const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // f(phi -> -phi): negate odd-exponent coefficients. Used by tests.
  Laurent negated_variable() const;

  std::complex<double> eval_at(const std::complex<double>& z) const;

  std::string str(const std::string& var = "phi") const;

private:
  std::map<long, Cyclotomic> terms_;
};

inline Laurent operator*(const Cyclotomic& c, const Laurent& f) { return Laurent(c) * f; }

}  // namespace pin2k
