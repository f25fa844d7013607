#include "pin2k/rational_fn.hpp"

#include <vector>

namespace pin2k {

namespace {

// Dense ordinary polynomial over Q(zeta); index = exponent.
using CPoly = std::vector<Cyclotomic>;

void trim(CPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Shift a nonzero Laurent polynomial to an ordinary one; *shift receives the
// min exponent that was divided out.
CPoly to_poly(const Laurent& f, long* shift) {
  *shift = f.min_exp();
  CPoly p(static_cast<size_t>(f.max_exp() - f.min_exp()) + 1);
  for (const auto& [e, c] : f.terms()) p[static_cast<size_t>(e - *shift)] = c;
  return p;
}

Laurent from_poly(const CPoly& p, long shift) {
  Laurent f;
  for (size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) f.set_coeff(static_cast<long>(i) + shift, p[i]);
  return f;
}

std::pair<CPoly, CPoly> poly_divmod(CPoly a, const CPoly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  CPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Cyclotomic());
  Cyclotomic lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Cyclotomic c = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

Laurent laurent_gcd(const Laurent& f, const Laurent& g) {
  if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0) undefined");
  long sf = 0, sg = 0;
  CPoly a = f.is_zero() ? CPoly{} : to_poly(f, &sf);
  CPoly b = g.is_zero() ? CPoly{} : to_poly(g, &sg);
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  // Make monic.
  Cyclotomic lead_inv = a.back().inverse();
  for (auto& c : a) c *= lead_inv;
  return from_poly(a, 0);
}

std::pair<Laurent, Laurent> laurent_divmod(const Laurent& f, const Laurent& g) {
  if (g.is_zero()) throw DivisionByZero("laurent_divmod by zero");
  if (f.is_zero()) return {Laurent(), Laurent()};
  long sf = 0, sg = 0;
  CPoly a = to_poly(f, &sf);
  CPoly b = to_poly(g, &sg);
  auto [q, r] = poly_divmod(std::move(a), b);
  return {from_poly(q, 0), from_poly(r, 0)};
}

Laurent laurent_div_exact(const Laurent& f, const Laurent& g) {
  if (g.is_zero()) throw DivisionByZero("exact division by zero");
  if (f.is_zero()) return Laurent();
  long sf = 0, sg = 0;
  CPoly a = to_poly(f, &sf);
  CPoly b = to_poly(g, &sg);
  auto [q, r] = poly_divmod(std::move(a), b);
  if (!r.empty()) throw Error("laurent_div_exact: division is not exact");
  return from_poly(q, sf - sg);
}

RationalFn::RationalFn(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ZeroDenominator();
  reduce();
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(1L);
    return;
  }
  Laurent g = laurent_gcd(num_, den_);
  num_ = laurent_div_exact(num_, g);
  den_ = laurent_div_exact(den_, g);
  // Normalize the denominator: lowest exponent 0, coefficient 1 there.
  long m = den_.min_exp();
  Cyclotomic c = den_.coeff_at(m).inverse();
  den_ = den_.shifted(c, -m);
  num_ = num_.shifted(c, -m);
}

const Laurent& RationalFn::polynomial() const {
  if (!is_polynomial()) throw Error("rational function is not a Laurent polynomial: " + str());
  return num_;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return RationalFn(num_ * o.den_, den_ * o.num_);
}

std::string RationalFn::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace pin2k
