#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pin2k/numeric.hpp"

namespace pin2k {

// An element of Q(zeta) where zeta = exp(2*pi*i / 2^N). Coordinates are kept
// in the power basis 1, zeta, ..., zeta^(d-1) with d = 2^(N-1) and the single
// relation zeta^d = -1. Values are always stored at the minimal level that
// represents them, so equality is plain structural comparison; in particular
// every rational number is stored at level 1.
class Cyclotomic {
public:
  Cyclotomic() : level_(1), coeffs_(1, Rat(0)) {}
  Cyclotomic(const Rat& r) : level_(1), coeffs_(1, r) {}
  Cyclotomic(const Int& n) : level_(1), coeffs_(1, Rat(n)) {}
  Cyclotomic(long n) : level_(1), coeffs_(1, Rat(n)) {}

  // zeta_{2^level}^power, power arbitrary (reduced mod 2^level).
  static Cyclotomic root_of_unity(int level, long power);
  static Cyclotomic root_of_unity(int level, const Int& power);

  int level() const { return level_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return level_ == 1; }
  // Requires is_rational().
  const Rat& rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Multiplicative inverse; throws DivisionByZero on zero.
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const {
    return level_ == o.level_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Numerical value with zeta = exp(2*pi*i / 2^level); for float cross-checks.
  std::complex<double> to_complex() const;

  // Monomial display, e.g. "2 + ζ[3]^1 - ζ[3]^3"; rationals print plainly.
  std::string str() const;

  // Copy of this value re-expressed at a level >= level(). Used by code that
  // wants a fixed common basis (DFT oracles, serialization).
  Cyclotomic lifted_to(int level) const;

private:
  int level_;               // root order is 2^level_
  std::vector<Rat> coeffs_; // size 2^(level_-1)

  Cyclotomic(int level, std::vector<Rat> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {}
  void canonicalize();
  static void match_levels(Cyclotomic& a, Cyclotomic& b);
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& c) { return Cyclotomic(r) * c; }

}  // namespace pin2k
