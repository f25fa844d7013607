#include "pin2k/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pin2k {

namespace {

// Dense polynomials over Q, used only for the extended Euclid behind
// Cyclotomic::inverse(). Coefficient index = exponent.
using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_zero(const QPoly& p) { return p.empty(); }

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (poly_zero(a) || poly_zero(b)) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (poly_zero(b)) throw DivisionByZero("polynomial division by zero");
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(int level, long power) {
  return root_of_unity(level, Int(power));
}

Cyclotomic Cyclotomic::root_of_unity(int level, const Int& power) {
  if (level < 1) throw Error("root_of_unity: level must be >= 1");
  Int order = pow2(static_cast<unsigned>(level));
  Int e = power % order;
  if (e < 0) e += order;
  size_t d = static_cast<size_t>(1) << (level - 1);
  std::vector<Rat> coeffs(d, Rat(0));
  unsigned long exp = e.convert_to<unsigned long>();
  if (exp < d)
    coeffs[exp] = 1;
  else
    coeffs[exp - d] = -1;  // zeta^d = -1
  Cyclotomic c(level, std::move(coeffs));
  c.canonicalize();
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

const Rat& Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error("rational_value of a non-rational cyclotomic");
  return coeffs_[0];
}

void Cyclotomic::canonicalize() {
  // Descend while all odd-exponent coordinates vanish: the value then lies in
  // the index-2 subfield generated by zeta^2.
  while (level_ > 1) {
    bool odd_free = true;
    for (size_t j = 1; j < coeffs_.size(); j += 2)
      if (coeffs_[j] != 0) { odd_free = false; break; }
    if (!odd_free) break;
    std::vector<Rat> down(coeffs_.size() / 2);
    for (size_t j = 0; j < down.size(); ++j) down[j] = coeffs_[2 * j];
    coeffs_ = std::move(down);
    --level_;
  }
}

Cyclotomic Cyclotomic::lifted_to(int level) const {
  if (level < level_) throw Error("lifted_to: target level below current level");
  if (level == level_) return *this;
  size_t stride = static_cast<size_t>(1) << (level - level_);
  std::vector<Rat> up((static_cast<size_t>(1) << (level - 1)), Rat(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) up[j * stride] = coeffs_[j];
  return Cyclotomic(level, std::move(up));
}

void Cyclotomic::match_levels(Cyclotomic& a, Cyclotomic& b) {
  if (a.level_ < b.level_) a = a.lifted_to(b.level_);
  else if (b.level_ < a.level_) b = b.lifted_to(a.level_);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic a = *this, b = o;
  match_levels(a, b);
  for (size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] += b.coeffs_[j];
  a.canonicalize();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic a = *this, b = o;
  match_levels(a, b);
  size_t d = a.coeffs_.size();
  std::vector<Rat> prod(d, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      size_t e = i + j;
      if (e < d)
        prod[e] += a.coeffs_[i] * b.coeffs_[j];
      else
        prod[e - d] -= a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyclotomic r(a.level_, std::move(prod));
  r.canonicalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(Rat(1) / coeffs_[0]);
  // Extended Euclid for gcd(a, x^d + 1) = 1 in Q[x]; x^d + 1 is irreducible
  // (it is the 2^level-th cyclotomic polynomial), so the gcd is a nonzero
  // constant and the Bezout cofactor of a is the inverse mod x^d + 1.
  size_t d = coeffs_.size();
  QPoly modulus(d + 1, Rat(0));
  modulus[0] = 1;
  modulus[d] = 1;
  QPoly r0 = modulus, r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  QPoly s0 = {}, s1 = {Rat(1)};  // cofactors of a: r_i = u_i*modulus + s_i*a
  while (!poly_zero(r1)) {
    auto [q, rem] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant: a^{-1} = s0 / r0.
  Rat c = r0[0];
  std::vector<Rat> inv(d, Rat(0));
  for (size_t j = 0; j < s0.size(); ++j) inv[j] = s0[j] / c;
  Cyclotomic result(level_, std::move(inv));
  result.canonicalize();
  return result;
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Cyclotomic acc(Rat(1));
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0.0;
  double order = std::pow(2.0, level_);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order;
    sum += coeffs_[j].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rat& c = coeffs_[j];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (j == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << "ζ[" << level_ << "]^" << j;
    }
  }
  return out.str();
}

}  // namespace pin2k
