#include "pin2k/rep_element.hpp"

#include <sstream>

namespace pin2k {

RepElement RepElement::one(const GroupSpec& g, const Rat& c) {
  RepElement r(g);
  r.c0_ = APoly::constant(g, c);
  return r;
}

RepElement RepElement::one_tilde(const GroupSpec& g, const Rat& c) {
  RepElement r(g);
  r.c0_tilde_ = APoly::constant(g, c);
  return r;
}

RepElement RepElement::h(const GroupSpec& g, int i, const Rat& c) {
  if (i < 1) throw Error("RepElement::h requires i >= 1");
  RepElement r(g);
  if (g.is_odd() && (i & 1) == 1)
    throw ParityViolation("bare h_" + std::to_string(i) +
                          " is not in R(G_odd); multiply by an odd power of the generator");
  r.set_h(i, APoly::constant(g, c));
  return r;
}

RepElement RepElement::generator(const GroupSpec& g, size_t factor, long e) {
  if (factor < 1 || factor > g.num_factors())
    throw GroupMismatch("generator index out of range");
  std::vector<long> exps(g.num_factors(), 0);
  exps[factor - 1] = e;
  RepElement r(g);
  r.c0_ = APoly::monomial(g, std::move(exps), Rat(1));
  r.validate_parity();
  return r;
}

RepElement RepElement::assemble(const GroupSpec& g, APoly c0, APoly c0_tilde,
                                std::map<int, APoly> h_coeffs) {
  RepElement r(g);
  r.c0_ = std::move(c0);
  r.c0_tilde_ = std::move(c0_tilde);
  for (auto& [i, p] : h_coeffs) {
    if (i < 1) throw Error("h index must be >= 1");
    if (!p.is_zero()) r.h_.emplace(i, std::move(p));
  }
  r.validate_parity();
  return r;
}

void RepElement::validate_parity() const {
  if (!group_.is_odd()) return;
  if (!c0_.has_parity(0) || !c0_tilde_.has_parity(0))
    throw ParityViolation("coefficients of 1 and 1~ must be even polynomials in R(G_odd)");
  for (const auto& [i, p] : h_)
    if (!p.has_parity(i & 1))
      throw ParityViolation("coefficient of h_" + std::to_string(i) +
                            " must have parity " + std::to_string(i & 1) + " in R(G_odd)");
}

APoly RepElement::h_coeff(int i) const {
  auto it = h_.find(i);
  return it == h_.end() ? APoly(group_) : it->second;
}

bool RepElement::is_zero() const {
  return c0_.is_zero() && c0_tilde_.is_zero() && h_.empty();
}

bool RepElement::all_integer() const {
  if (!c0_.all_integer() || !c0_tilde_.all_integer()) return false;
  for (const auto& [i, p] : h_)
    if (!p.all_integer()) return false;
  return true;
}

void RepElement::set_h(int i, const APoly& p) {
  if (p.is_zero())
    h_.erase(i);
  else
    h_[i] = p;
}

void RepElement::add_h(int i, const APoly& p) { set_h(i, h_coeff(i) + p); }

RepElement RepElement::operator-() const {
  RepElement r(group_);
  r.c0_ = -c0_;
  r.c0_tilde_ = -c0_tilde_;
  for (const auto& [i, p] : h_) r.h_.emplace(i, -p);
  return r;
}

RepElement RepElement::operator+(const RepElement& o) const {
  if (group_ != o.group_) throw GroupMismatch("RepElement addition across groups");
  RepElement r(group_);
  r.c0_ = c0_ + o.c0_;
  r.c0_tilde_ = c0_tilde_ + o.c0_tilde_;
  r.h_ = h_;
  for (const auto& [i, p] : o.h_) r.add_h(i, p);
  return r;
}

RepElement RepElement::operator-(const RepElement& o) const { return *this + (-o); }

RepElement RepElement::operator*(const RepElement& o) const {
  if (group_ != o.group_) throw GroupMismatch("RepElement multiplication across groups");
  RepElement r(group_);
  // scalar x scalar block: (c0 + c0~ 1~)(d0 + d0~ 1~)
  r.c0_ = c0_ * o.c0_ + c0_tilde_ * o.c0_tilde_;
  r.c0_tilde_ = c0_ * o.c0_tilde_ + c0_tilde_ * o.c0_;
  // scalar x h: (1 and 1~ both carry h_i to h_i)
  APoly scalar_left = c0_ + c0_tilde_;
  APoly scalar_right = o.c0_ + o.c0_tilde_;
  for (const auto& [j, q] : o.h_) r.add_h(j, scalar_left * q);
  for (const auto& [i, p] : h_) r.add_h(i, p * scalar_right);
  // h x h fusion
  for (const auto& [i, p] : h_) {
    for (const auto& [j, q] : o.h_) {
      APoly prod = p * q;
      r.add_h(i + j, prod);
      if (i == j) {
        r.c0_ += prod;
        r.c0_tilde_ += prod;
      } else {
        r.add_h(i > j ? i - j : j - i, prod);
      }
    }
  }
  return r;
}

RepElement RepElement::scaled(const Rat& c) const {
  RepElement r(group_);
  r.c0_ = c0_.scaled(c);
  r.c0_tilde_ = c0_tilde_.scaled(c);
  if (c != 0)
    for (const auto& [i, p] : h_) r.h_.emplace(i, p.scaled(c));
  return r;
}

RepElement RepElement::pow(unsigned e) const {
  RepElement acc = one(group_);
  RepElement base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Laurent RepElement::character(const GroupElement& g) const {
  Cyclotomic v0 = c0_.evaluate(group_, g.finite);
  Cyclotomic v0t = c0_tilde_.evaluate(group_, g.finite);
  Laurent out;
  switch (g.pin2) {
    case GroupElement::Pin2::GenericTorus: {
      out = Laurent(v0 + v0t);  // tr 1 = tr 1~ = 1 on the torus
      for (const auto& [i, p] : h_) {
        Cyclotomic vi = p.evaluate(group_, g.finite);
        if (vi.is_zero()) continue;
        out += Laurent::monomial(vi, i) + Laurent::monomial(vi, -i);
      }
      return out;
    }
    case GroupElement::Pin2::J:
      // tr_J 1~ = -1, tr_J h_i = 0.
      return Laurent(v0 - v0t);
    case GroupElement::Pin2::Identity: {
      Cyclotomic sum = v0 + v0t;
      for (const auto& [i, p] : h_) sum += Cyclotomic(Rat(2)) * p.evaluate(group_, g.finite);
      return Laurent(sum);
    }
  }
  throw Error("unreachable");
}

Laurent RepElement::restrict_to_circle() const {
  Laurent out(Cyclotomic(c0_.sum_coeffs() + c0_tilde_.sum_coeffs()));
  for (const auto& [i, p] : h_) {
    Cyclotomic vi(p.sum_coeffs());
    if (vi.is_zero()) continue;
    out += Laurent::monomial(vi, i) + Laurent::monomial(vi, -i);
  }
  return out;
}

RepElement RepElement::to_odd_type() const {
  if (group_.is_odd()) return *this;
  if (group_.num_factors() != 1)
    throw GroupMismatch("to_odd_type: ambient ring must have a single cyclic factor");
  long order = group_.ambient_orders()[0];
  if (order < 4) throw GroupMismatch("to_odd_type: ambient order must be 2^(p+1) with p >= 1");
  int p = -1;
  for (long b = 0; (1L << b) <= order; ++b)
    if ((1L << b) == order) p = static_cast<int>(b) - 1;
  RepElement r(GroupSpec::odd(p));
  r.c0_ = c0_;
  r.c0_tilde_ = c0_tilde_;
  r.h_ = h_;
  r.validate_parity();
  return r;
}

std::string RepElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const APoly& p, const std::string& basis) {
    if (p.is_zero()) return;
    std::string ps = p.str();
    bool negated = ps.size() > 1 && ps[0] == '-' && ps.find(' ') == std::string::npos;
    if (negated) ps = ps.substr(1);
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool composite = ps.find(' ') != std::string::npos;
    if (basis.empty()) {
      out << (composite ? "(" + ps + ")" : ps);
    } else if (ps == "1") {
      out << basis;
    } else {
      out << (composite ? "(" + ps + ")" : ps) << "*" << basis;
    }
  };
  emit(c0_, "");
  emit(c0_tilde_, "t1");
  for (const auto& [i, p] : h_) emit(p, "h" + std::to_string(i));
  return out.str();
}

}  // namespace pin2k
