#include "pin2k/index_data.hpp"

namespace pin2k {

namespace {

Int rat_to_int(const Rat& r, const char* what) {
  if (!is_integer(r)) throw Error(std::string(what) + " must be an integer, got " + to_string(r));
  return numerator(r);
}

// Number of lines of chi (x) h fixed by g (0, 1 or 2), and the same for
// chi (x) 1~. J acts on h with eigenvalues +-zeta_4 and on 1~ by -1; the
// generic torus element acts on h by formally-never-1 eigenvalues
// chi(a) phi^{+-1} and trivially on 1~.
int h_fixed_lines(const GroupElement& g, const Cyclotomic& chi_a) {
  static const Cyclotomic plus_i = Cyclotomic::root_of_unity(2, 1);
  switch (g.pin2) {
    case GroupElement::Pin2::GenericTorus:
      return 0;
    case GroupElement::Pin2::J:
      return (chi_a == plus_i || chi_a == -plus_i) ? 1 : 0;
    case GroupElement::Pin2::Identity:
      return chi_a == Cyclotomic(Rat(1)) ? 2 : 0;
  }
  return 0;
}

int tilde_fixed_lines(const GroupElement& g, const Cyclotomic& chi_a) {
  Cyclotomic one(Rat(1));
  if (g.pin2 == GroupElement::Pin2::J) return chi_a == -one ? 1 : 0;
  return chi_a == one ? 1 : 0;
}

}  // namespace

IndexData::IndexData(const GroupSpec& g, APoly s, APoly t)
    : group_(g), s_(std::move(s)), t_(std::move(t)) {
  if (s_.orders() != g.ambient_orders() || t_.orders() != g.ambient_orders())
    throw GroupMismatch("IndexData polynomials do not live on the group's character lattice");
  if (g.is_odd()) {
    if (!s_.has_parity(1)) throw ParityViolation("odd-type s must be an odd polynomial in xi");
    if (!t_.has_parity(0)) throw ParityViolation("odd-type t must be an even polynomial in xi");
  }
  for (const auto& [chi, c] : t_.coeffs()) {
    Int v = rat_to_int(c, "t coefficient");
    if (v < 0) throw Error("t coefficients must be nonnegative, got " + to_string(v));
  }
  for (const auto& [chi, c] : s_.coeffs()) rat_to_int(c, "s coefficient");
  Int tk = two_k();
  if (tk < 0 || (tk & 1) != 0)
    throw Error("sum of s coefficients must be an even number 2k >= 0, got " + to_string(tk));
}

IndexData IndexData::odd_type(int p, const std::vector<Int>& s, const std::vector<Int>& t) {
  GroupSpec g = GroupSpec::odd(p);
  long n = 1L << p;
  if (s.size() != static_cast<size_t>(n) || t.size() != static_cast<size_t>(n))
    throw Error("odd_type: s and t must have length 2^p");
  APoly sp(g), tp(g);
  for (long i = 1; i <= n; ++i) {
    sp.add_coeff(reduce_residues(g, {2 * i - 1}), Rat(s[static_cast<size_t>(i - 1)]));
    tp.add_coeff(reduce_residues(g, {2 * i}), Rat(t[static_cast<size_t>(i - 1)]));
  }
  return IndexData(g, std::move(sp), std::move(tp));
}

IndexData IndexData::even_cyclic(int p, const std::vector<Int>& s, const std::vector<Int>& t) {
  if (p == 0) {
    if (s.size() != 1 || t.size() != 1) throw Error("even_cyclic p=0: s and t must have length 1");
    GroupSpec g = GroupSpec::trivial();
    APoly sp(g), tp(g);
    sp.set_coeff({}, Rat(s[0]));
    tp.set_coeff({}, Rat(t[0]));
    return IndexData(g, std::move(sp), std::move(tp));
  }
  GroupSpec g = GroupSpec::even({1L << p});
  long n = 1L << p;
  if (s.size() != static_cast<size_t>(n) || t.size() != static_cast<size_t>(n))
    throw Error("even_cyclic: s and t must have length 2^p");
  APoly sp(g), tp(g);
  for (long i = 1; i <= n; ++i) {
    sp.add_coeff(reduce_residues(g, {i}), Rat(s[static_cast<size_t>(i - 1)]));
    tp.add_coeff(reduce_residues(g, {i}), Rat(t[static_cast<size_t>(i - 1)]));
  }
  return IndexData(g, std::move(sp), std::move(tp));
}

IndexData IndexData::furuta(const Int& k, const Int& m) {
  return even_cyclic(0, {2 * k}, {m});
}

Int IndexData::two_k() const { return numerator(s_.sum_coeffs()); }

Int IndexData::m() const { return numerator(t_.sum_coeffs()); }

Int IndexData::trivial_t_coeff() const {
  return numerator(t_.coeff(std::vector<long>(group_.num_factors(), 0)));
}

int IndexData::cyclic_p() const {
  if (!group_.is_cyclic()) throw NonCyclicGroup();
  if (group_.num_factors() == 0) return 0;
  long order = group_.ambient_orders()[0];
  int bits = 0;
  while ((1L << bits) < order) ++bits;
  return group_.is_odd() ? bits - 1 : bits;
}

std::vector<Int> IndexData::t_paper() const {
  int p = cyclic_p();
  long n = 1L << p;
  std::vector<Int> out(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    std::vector<long> chi = group_.num_factors() == 0
                                ? std::vector<long>{}
                                : reduce_residues(group_, {group_.is_odd() ? 2 * i : i});
    out[static_cast<size_t>(i - 1)] = numerator(t_.coeff(chi));
  }
  return out;
}

std::vector<Int> IndexData::s_paper() const {
  int p = cyclic_p();
  long n = 1L << p;
  std::vector<Int> out(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i) {
    std::vector<long> chi = group_.num_factors() == 0
                                ? std::vector<long>{}
                                : reduce_residues(group_, {group_.is_odd() ? 2 * i - 1 : i});
    out[static_cast<size_t>(i - 1)] = numerator(s_.coeff(chi));
  }
  return out;
}

RepElement IndexData::rep_element() const {
  return RepElement::assemble(group_, APoly(group_), -t_, {{1, s_}});
}

FixedDims fixed_dims(const IndexData& idx, const GroupElement& g) {
  FixedDims d{Int(0), Int(0), false, false};
  for (const auto& [chi, c] : idx.s().coeffs()) {
    Cyclotomic chi_a = character_value(idx.group(), chi, g.finite);
    int lines = h_fixed_lines(g, chi_a);
    if (lines > 0) {
      d.dim_v += numerator(c) * lines;
      d.v_has_fixed_line = true;
    }
  }
  for (const auto& [chi, c] : idx.t().coeffs()) {
    Cyclotomic chi_a = character_value(idx.group(), chi, g.finite);
    int lines = tilde_fixed_lines(g, chi_a);
    if (lines > 0) {
      d.dim_w += numerator(c) * lines;
      d.w_has_fixed_line = true;
    }
  }
  return d;
}

RationalFn lambda_minus_one_trace(const IndexData& idx, const GroupElement& g) {
  Laurent num(1L), den(1L);
  auto apply = [&](const Laurent& factor, const Int& mult) {
    if (mult == 0) return;
    unsigned e = static_cast<unsigned>(abs(mult).convert_to<unsigned long>());
    Laurent power = factor.pow(e);
    if (mult > 0)
      num *= power;
    else
      den *= power;
  };
  // W = t * 1~ contributes factors (1 - eigenvalue on the 1~ line).
  for (const auto& [chi, c] : idx.t().coeffs()) {
    Cyclotomic chi_a = character_value(idx.group(), chi, g.finite);
    Cyclotomic eig = (g.pin2 == GroupElement::Pin2::J) ? -chi_a : chi_a;
    apply(Laurent(Cyclotomic(Rat(1)) - eig), numerator(c));
  }
  // V = s * h contributes inverted factors from the two lines of each h.
  for (const auto& [chi, c] : idx.s().coeffs()) {
    Cyclotomic chi_a = character_value(idx.group(), chi, g.finite);
    Laurent pair;
    switch (g.pin2) {
      case GroupElement::Pin2::GenericTorus: {
        Laurent one(1L);
        pair = (one - Laurent::monomial(chi_a, 1)) * (one - Laurent::monomial(chi_a, -1));
        break;
      }
      case GroupElement::Pin2::J:
        pair = Laurent(Cyclotomic(Rat(1)) + chi_a * chi_a);
        break;
      case GroupElement::Pin2::Identity: {
        Cyclotomic f = Cyclotomic(Rat(1)) - chi_a;
        pair = Laurent(f * f);
        break;
      }
    }
    Int mult = numerator(c);
    if (pair.is_zero() && mult > 0)
      throw PoleAtElement("lambda_-1 trace has a pole at " + g.str(idx.group()) +
                          ": g fixes a line of " + APoly::monomial(idx.group(), chi, c).str() +
                          "*h with positive multiplicity");
    apply(pair, -mult);
  }
  if (den.is_zero()) throw PoleAtElement("lambda_-1 trace has a pole at " + g.str(idx.group()));
  return RationalFn(num, den);
}

Int quotient_b2plus(const IndexData& idx, int j) {
  int p = idx.cyclic_p();  // throws NonCyclicGroup for multi-factor groups
  if (j < 0 || j > p) throw Error("quotient_b2plus: j must lie in [0, p]");
  std::vector<Int> t = idx.t_paper();
  long step = 1L << j;
  Int sum = 0;
  for (long i = step; i <= (1L << p); i += step) sum += t[static_cast<size_t>(i - 1)];
  return sum;
}

Int invariant_dim(const IndexData& idx, const std::vector<long>& elem) {
  std::vector<long> e = reduce_residues(idx.group(), elem);
  Cyclotomic one(Rat(1));
  Int sum = 0;
  for (const auto& [chi, c] : idx.t().coeffs())
    if (character_value(idx.group(), chi, e) == one) sum += numerator(c);
  return sum;
}

}  // namespace pin2k
