#include "pin2k/laurent.hpp"

#include <sstream>

namespace pin2k {

Cyclotomic Laurent::coeff_at(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

long Laurent::min_exp() const {
  if (is_zero()) throw Error("min_exp of zero Laurent polynomial");
  return terms_.begin()->first;
}

long Laurent::max_exp() const {
  if (is_zero()) throw Error("max_exp of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void Laurent::set_coeff(long exponent, const Cyclotomic& c) {
  if (c.is_zero())
    terms_.erase(exponent);
  else
    terms_[exponent] = c;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff_at(e) + c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.set_coeff(e1 + e2, r.coeff_at(e1 + e2) + c1 * c2);
  return r;
}

Laurent Laurent::pow(unsigned e) const {
  Laurent acc(Cyclotomic(Rat(1)));
  Laurent base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Laurent Laurent::shifted(const Cyclotomic& c, long e) const {
  Laurent r;
  for (const auto& [exp, coeff] : terms_) r.set_coeff(exp + e, coeff * c);
  return r;
}

Laurent Laurent::negated_variable() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.set_coeff(e, (e % 2 == 0) ? c : -c);
  return r;
}

std::complex<double> Laurent::eval_at(const std::complex<double>& z) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_complex() * std::pow(z, static_cast<double>(e));
  return sum;
}

std::string Laurent::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Ascending exponent order.
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool negated = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool composite = cs.find(' ') != std::string::npos;
    if (e == 0) {
      out << (composite ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") out << (composite ? "(" + cs + ")" : cs) << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace pin2k
