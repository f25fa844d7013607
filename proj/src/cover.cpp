#include "pin2k/cover.hpp"

namespace pin2k {

namespace {

Int require_nonneg_integer(const Rat& v, const std::string& what) {
  if (!is_integer(v))
    throw NonIntegralInvariant(what + " = " + to_string(v) + " is not an integer");
  Int n = numerator(v);
  if (n < 0) throw NonIntegralInvariant(what + " = " + to_string(n) + " is negative");
  return n;
}

std::vector<Condition> spin_hypotheses(const ManifoldSpec& M, const SurfaceClass& cls, int p) {
  std::vector<Condition> out;
  Int d = pow2(static_cast<unsigned>(p));
  bool divisible = true;
  for (const Int& c : cls.coords) divisible &= (c % d == 0);
  out.push_back({"divisibility: 2^p | [Sigma]",
                 divisible,
                 "2^p = " + to_string(d) + ", gcd of coordinates = " + to_string(cls.divisibility())});
  if (divisible) {
    std::vector<Int> reduced(cls.coords.size());
    for (size_t i = 0; i < cls.coords.size(); ++i) reduced[i] = cls.coords[i] / d;
    bool ch = is_characteristic_mod2(M.form, reduced);
    out.push_back({"characteristic: [Sigma]/2^p = w2(M) mod 2", ch,
                   ch ? "reduced class is characteristic" : "reduced class is not characteristic"});
  } else {
    out.push_back({"characteristic: [Sigma]/2^p = w2(M) mod 2", false,
                   "not evaluated: divisibility fails"});
  }
  return out;
}

}  // namespace

CoverInvariants cover_invariants(const ManifoldSpec& M, const SurfaceClass& cls, const Int& genus,
                                 int p) {
  if (p < 1) throw Error("cover_invariants: p must be >= 1");
  if (genus < 0) throw Error("cover_invariants: genus must be >= 0");
  for (const auto& h : spin_hypotheses(M, cls, p))
    if (!h.pass) throw SpinConditionFailed(h.name + " (" + h.detail + ")");

  Rat Q(cls.square(M.form));
  Rat sigma(M.signature());
  CoverInvariants inv;
  inv.p = p;
  // k = (1/16)(-2^p sigma(M) + (4^p - 1)/(3 2^p) [Sigma]^2)
  Rat k = (Rat(-pow2(static_cast<unsigned>(p))) * sigma +
           Rat(pow2(static_cast<unsigned>(2 * p)) - 1, 3 * pow2(static_cast<unsigned>(p))) * Q) /
          16;
  inv.k = require_nonneg_integer(k, "k");
  // m_i = 2^(p-i) b2+(M) + (2^(p-i) - 1) g - (4^(p-i) - 1)/(6 2^(p-i)) [Sigma]^2
  for (int i = 0; i <= p; ++i) {
    int r = p - i;
    Rat mi = Rat(pow2(static_cast<unsigned>(r))) * Rat(M.b2plus()) +
             Rat(pow2(static_cast<unsigned>(r)) - 1) * Rat(genus) -
             Rat(pow2(static_cast<unsigned>(2 * r)) - 1, 6 * pow2(static_cast<unsigned>(r))) * Q;
    inv.m.push_back(require_nonneg_integer(mi, "m_" + std::to_string(i)));
  }
  return inv;
}

GenusBoundReport genus_bound(const ManifoldSpec& M, const SurfaceClass& cls, int p) {
  if (p < 1) throw Error("genus_bound: p must be >= 1");
  GenusBoundReport rep;
  rep.p = p;
  rep.hypotheses = spin_hypotheses(M, cls, p);
  rep.hypotheses.push_back({"b2+(M) > 1", M.b2plus() > 1, "b2+(M) = " + std::to_string(M.b2plus())});
  for (const auto& h : rep.hypotheses)
    if (!h.pass) throw HypothesisFailed(h.name, rep.hypotheses);

  Rat Q(cls.square(M.form));
  Rat sigma(M.signature());
  Rat b2(M.b2());
  Int tp = pow2(static_cast<unsigned>(p));
  // (1/(2^p - 1)) [ 5/4 ( (4^p-1)/(6 2^p) Q - 2^(p-1) sigma ) + 1 (+ p) - 2^(p-1) b2 ]
  Rat core = Rat(5, 4) * (Rat(tp * tp - 1, 6 * tp) * Q - Rat(tp / 2) * sigma) - Rat(tp / 2) * b2;
  Rat scale(1, tp - 1);
  rep.furuta_bound = scale * (core + 1);
  rep.refined_bound = scale * (core + 1 + p);

  // g = Q (1 + 2^(2i - 2p + 1))/6 - b2+(M) for i = 1..p-1; only integer
  // values actually exclude a genus.
  for (int i = 1; i <= p - 1; ++i) {
    Rat e = Q * (Rat(1) + pow2_rat(2 * i - 2 * p + 1)) / 6 - Rat(M.b2plus());
    if (is_integer(e)) rep.excluded_genera.insert(numerator(e));
  }

  Int ceil_furuta = ceil_rat(rep.furuta_bound);
  Int ceil_refined = ceil_rat(rep.refined_bound);
  if (ceil_furuta < 0) ceil_furuta = 0;
  if (ceil_refined < 0) ceil_refined = 0;
  Int effective = ceil_refined;
  for (const Int& e : rep.excluded_genera)
    if (e >= ceil_furuta && e < effective) effective = e;
  rep.effective_min_genus = effective;

  // The Furuta baseline assumes m_0 != 0; recompute it at the effective genus
  // and record the check.
  try {
    CoverInvariants inv = cover_invariants(M, cls, rep.effective_min_genus, p);
    rep.hypotheses.push_back({"m_0 > 0 at the effective genus", inv.m[0] > 0,
                              "m_0 = " + to_string(inv.m[0])});
  } catch (const NonIntegralInvariant& e) {
    rep.hypotheses.push_back({"m_0 > 0 at the effective genus", false, e.what()});
  }
  return rep;
}

CoverIndexConstraints index_from_cover(const ManifoldSpec& M, const SurfaceClass& cls,
                                       const Int& genus, int p) {
  CoverInvariants inv = cover_invariants(M, cls, genus, p);
  CoverIndexConstraints c;
  c.p = p;
  c.two_k = 2 * inv.k;
  c.partial_t_sums = inv.m;  // sum over i = 0 mod 2^j of t_i equals m_j
  return c;
}

std::vector<Condition> check_nondegeneracy(const CoverIndexConstraints& c) {
  std::vector<Condition> out;
  const auto& m = c.partial_t_sums;
  int p = c.p;
  {
    Condition cond;
    cond.name = "b2+(X_" + std::to_string(p) + ") > 0";
    cond.pass = m[static_cast<size_t>(p)] > 0;
    cond.detail = "b2+(X/tau) = " + to_string(m[static_cast<size_t>(p)]);
    out.push_back(std::move(cond));
  }
  for (int j = p - 1; j >= 1; --j) {
    Condition cond;
    cond.name = "b2+(X_" + std::to_string(j) + ") != b2+(X_" + std::to_string(j + 1) + ")";
    cond.pass = m[static_cast<size_t>(j)] != m[static_cast<size_t>(j + 1)];
    cond.detail = to_string(m[static_cast<size_t>(j)]) + " vs " + to_string(m[static_cast<size_t>(j + 1)]);
    out.push_back(std::move(cond));
  }
  {
    Condition cond;
    cond.name = "m != 2k + b2+(X_1)";
    Int rhs = c.two_k + m[1];
    cond.pass = m[0] != rhs;
    cond.detail = "m = " + to_string(m[0]) + ", 2k + b2+(X_1) = " + to_string(rhs);
    out.push_back(std::move(cond));
  }
  return out;
}

}  // namespace pin2k
