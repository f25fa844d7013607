#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pin2k/errors.hpp"

namespace pin2k {

// Unbounded-precision integers and rationals. Every quantity in the engine
// that is not a cyclotomic number is one of these; no floating point leaks
// into results.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// 2^e for e >= 0.
inline Int pow2(unsigned e) { return Int(1) << e; }

// Exact 2^e as a rational, e may be negative.
inline Rat pow2_rat(long e) {
  if (e >= 0) return Rat(Int(1) << static_cast<unsigned>(e));
  return Rat(Int(1), Int(1) << static_cast<unsigned>(-e));
}

// 2-adic valuation of a nonzero integer.
inline long v2(const Int& n) {
  if (n == 0) throw DivisionByZero("v2 of zero");
  return static_cast<long>(boost::multiprecision::lsb(abs(n)));
}

// 2-adic valuation of a nonzero rational.
inline long v2(const Rat& r) {
  if (r == 0) throw DivisionByZero("v2 of zero");
  return v2(numerator(r)) - v2(denominator(r));
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) {
  return -floor_div(-numerator(r), denominator(r));
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool is_power_of_two(const Int& n) {
  return n > 0 && (n & (n - 1)) == 0;
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ZeroDenominator();
    return Rat(Int(s.substr(0, slash)), den);
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

}  // namespace pin2k
