#include "pin2k/degree.hpp"

#include <sstream>

namespace pin2k {

namespace {

std::vector<long> negate_residues(const GroupSpec& g, const std::vector<long>& a) {
  std::vector<long> neg(a.size());
  for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  return reduce_residues(g, neg);
}

// Exact inverse DFT over the finite character lattice: recovers the
// coefficient c_chi of every admissible character from the values of the
// polynomial at the element representatives. For odd-type groups the
// admissible characters are one parity class and the representatives are the
// 2^p cosets; the same averaging formula inverts both settings because
// characters of distinct admissible exponents restrict to distinct characters
// of the representative set.
std::map<std::vector<long>, Cyclotomic> dft_interpolate(const GroupSpec& g, int parity,
                                                        const std::vector<Cyclotomic>& values) {
  auto reps = g.element_representatives();
  if (values.size() != reps.size()) throw Error("dft_interpolate: value count mismatch");
  Rat norm(1, static_cast<Int>(reps.size()));
  std::map<std::vector<long>, Cyclotomic> out;
  for (const auto& chi : g.characters()) {
    if (g.is_odd() && (chi[0] & 1) != parity) continue;
    Cyclotomic c;
    for (size_t j = 0; j < reps.size(); ++j)
      c += values[j] * character_value(g, chi, negate_residues(g, reps[j]));
    out.emplace(chi, Cyclotomic(norm) * c);
  }
  return out;
}

// Converts an interpolated coefficient table to an APoly, or reports the
// first non-rational coefficient (no solution exists in the rational ring).
bool to_apoly(const GroupSpec& g, const std::map<std::vector<long>, Cyclotomic>& table,
              APoly* out, std::string* offending) {
  APoly p(g);
  for (const auto& [chi, c] : table) {
    if (!c.is_rational()) {
      std::ostringstream msg;
      msg << "coefficient of character (";
      for (size_t i = 0; i < chi.size(); ++i) msg << (i ? "," : "") << chi[i];
      msg << ") interpolates to the non-rational value " << c.str();
      *offending = msg.str();
      return false;
    }
    p.add_coeff(chi, c.rational_value());
  }
  *out = std::move(p);
  return true;
}

}  // namespace

DegreeSolution solve_degree(const TraceSystem& sys) {
  const GroupSpec& g = sys.index.group();
  auto reps = g.element_representatives();
  auto rep_index = [&](const std::vector<long>& a) {
    for (size_t j = 0; j < reps.size(); ++j)
      if (reps[j] == a) return j;
    throw Error("internal: element representative not found");
  };

  DegreeSolution sol;
  std::vector<std::optional<Laurent>> torus_rhs(reps.size());
  std::vector<std::optional<Cyclotomic>> j_rhs(reps.size());

  for (const auto& eq : sys.equations) {
    if (eq.kind == TraceEquation::Kind::Skipped) {
      sol.skipped.push_back({eq.element.str(g), eq.skip_reason});
      continue;
    }
    RationalFn rhs = eq.kind == TraceEquation::Kind::ZeroTrace ? RationalFn() : eq.value;
    size_t j = rep_index(eq.element.finite);
    if (eq.element.pin2 == GroupElement::Pin2::GenericTorus) {
      if (!rhs.is_polynomial()) {
        sol.outcome = DegreeSolution::Outcome::Inconsistent;
        sol.certificate = "tr at " + eq.element.str(g) +
                          " must be a Laurent polynomial in phi, but the required value " +
                          rhs.str() + " is not (reduced denominator " +
                          rhs.denominator().str() + ")";
        return sol;
      }
      const Laurent& poly = rhs.polynomial();
      for (const auto& [e, c] : poly.terms()) {
        long ae = e < 0 ? -e : e;
        if (ae > sys.h_cutoff) {
          sol.outcome = DegreeSolution::Outcome::Inconsistent;
          sol.certificate = "tr at " + eq.element.str(g) + " requires a phi^" +
                            std::to_string(e) + " term beyond the h-cutoff " +
                            std::to_string(sys.h_cutoff);
          return sol;
        }
        if (poly.coeff_at(e) != poly.coeff_at(-e)) {
          sol.outcome = DegreeSolution::Outcome::Inconsistent;
          sol.certificate =
              "tr at " + eq.element.str(g) +
              " must be symmetric under phi -> 1/phi (traces of h_i are), but " +
              poly.str() + " is not";
          return sol;
        }
      }
      torus_rhs[j] = poly;
    } else {
      // J-family values are phi-free.
      if (!rhs.is_polynomial() || !rhs.polynomial().is_constant()) {
        sol.outcome = DegreeSolution::Outcome::Inconsistent;
        sol.certificate = "tr at " + eq.element.str(g) + " must be constant, got " + rhs.str();
        return sol;
      }
      j_rhs[j] = rhs.polynomial().constant_value();
    }
  }

  for (size_t j = 0; j < reps.size(); ++j) {
    if (!torus_rhs[j] || !j_rhs[j]) {
      sol.outcome = DegreeSolution::Outcome::Underdetermined;
      return sol;
    }
  }

  // Every evaluation is pinned: alpha_0(a) = (S(a) + D(a))/2 and
  // alpha~_0(a) = (S(a) - D(a))/2 where S comes from the constant phi-term
  // and D from the J-family; alpha_i(a) is the phi^i coefficient.
  Cyclotomic half(Rat(1, 2));
  std::vector<Cyclotomic> v0(reps.size()), v0t(reps.size());
  for (size_t j = 0; j < reps.size(); ++j) {
    Cyclotomic s = torus_rhs[j]->coeff_at(0);
    Cyclotomic d = *j_rhs[j];
    v0[j] = half * (s + d);
    v0t[j] = half * (s - d);
  }

  APoly a0(g), a0t(g);
  std::string offending;
  if (!to_apoly(g, dft_interpolate(g, 0, v0), &a0, &offending) ||
      !to_apoly(g, dft_interpolate(g, 0, v0t), &a0t, &offending)) {
    sol.outcome = DegreeSolution::Outcome::Inconsistent;
    sol.certificate = "no solution with rational coefficients: " + offending;
    return sol;
  }
  std::map<int, APoly> h_coeffs;
  for (int i = 1; i <= sys.h_cutoff; ++i) {
    std::vector<Cyclotomic> vi(reps.size());
    for (size_t j = 0; j < reps.size(); ++j) vi[j] = torus_rhs[j]->coeff_at(i);
    APoly ai(g);
    if (!to_apoly(g, dft_interpolate(g, i & 1, vi), &ai, &offending)) {
      sol.outcome = DegreeSolution::Outcome::Inconsistent;
      sol.certificate = "no solution with rational coefficients: " + offending;
      return sol;
    }
    if (!ai.is_zero()) h_coeffs.emplace(i, std::move(ai));
  }

  RepElement alpha = RepElement::assemble(g, std::move(a0), std::move(a0t), std::move(h_coeffs));

  // Re-substitution check: the solution must reproduce every non-skipped
  // equation exactly.
  for (const auto& eq : sys.equations) {
    if (eq.kind == TraceEquation::Kind::Skipped) continue;
    Laurent expect = eq.kind == TraceEquation::Kind::ZeroTrace ? Laurent() : eq.value.polynomial();
    if (alpha.character(eq.element) != expect)
      throw Error("internal: re-substitution failed at " + eq.element.str(g));
  }

  sol.outcome = DegreeSolution::Outcome::Unique;
  sol.alpha = std::move(alpha);
  return sol;
}

InequalityReport conclude_bound(const DegreeSolution& sol, const IndexData& idx) {
  if (sol.outcome != DegreeSolution::Outcome::Unique)
    throw NotUnique("conclude_bound requires a unique degree solution");
  const RepElement& alpha = *sol.alpha;
  InequalityReport rep;
  rep.nondegeneracy = check_nondegeneracy(idx);
  if (alpha.is_zero()) {
    rep.conclusion = "alpha = 0: no integrality constraint";
    rep.holds_for_input = true;
    return rep;
  }
  bool have = false;
  long vmin = 0;
  auto scan = [&](const APoly& p) {
    for (const auto& [chi, c] : p.coeffs()) {
      long v = v2(c);
      if (!have || v < vmin) vmin = v;
      have = true;
    }
  };
  scan(alpha.c0());
  scan(alpha.c0_tilde());
  for (const auto& [i, p] : alpha.h_coeffs()) scan(p);

  rep.required_valuation = vmin;
  Int m = idx.m(), two_k = idx.two_k();
  Int offset = m - two_k - vmin;
  rep.bound_offset = offset.convert_to<long>();
  rep.conclusion = "m >= 2k+" + to_string(offset);
  rep.holds_for_input = vmin >= 0;
  return rep;
}

std::vector<Condition> check_nondegeneracy(const IndexData& idx) {
  std::vector<Condition> out;
  const GroupSpec& g = idx.group();
  if (g.is_odd()) {
    int p = idx.cyclic_p();
    std::vector<Int> b(static_cast<size_t>(p) + 1);
    for (int j = 0; j <= p; ++j) b[static_cast<size_t>(j)] = quotient_b2plus(idx, j);
    {
      Condition c;
      c.name = "b2+(X_" + std::to_string(p) + ") > 0";
      c.pass = b[static_cast<size_t>(p)] > 0;
      c.detail = "b2+(X/tau) = t_{2^p} = " + to_string(b[static_cast<size_t>(p)]);
      out.push_back(std::move(c));
    }
    for (int j = p - 1; j >= 1; --j) {
      Condition c;
      c.name = "b2+(X_" + std::to_string(j) + ") != b2+(X_" + std::to_string(j + 1) + ")";
      c.pass = b[static_cast<size_t>(j)] != b[static_cast<size_t>(j + 1)];
      c.detail = to_string(b[static_cast<size_t>(j)]) + " vs " + to_string(b[static_cast<size_t>(j + 1)]);
      out.push_back(std::move(c));
    }
    {
      Condition c;
      c.name = "m != 2k + b2+(X_1)";
      Int rhs = idx.two_k() + b[1];
      c.pass = idx.m() != rhs;
      c.detail = "m = " + to_string(idx.m()) + ", 2k + b2+(X_1) = " + to_string(rhs);
      out.push_back(std::move(c));
    }
    return out;
  }
  // Even type: m != b2+(X/<g>) for every non-trivial g, and b2+(X/A) != 0.
  for (const auto& a : g.element_representatives()) {
    bool trivial = true;
    for (long r : a) trivial &= (r == 0);
    if (trivial) continue;
    Condition c;
    GroupElement el = GroupElement::identity(g, a);
    c.name = "m != b2+(X/<" + el.str(g) + ">)";
    Int inv = invariant_dim(idx, a);
    c.pass = idx.m() != inv;
    c.detail = "m = " + to_string(idx.m()) + ", b2+ of quotient = " + to_string(inv);
    out.push_back(std::move(c));
  }
  {
    Condition c;
    c.name = "b2+(X/A) != 0";
    Int inv = idx.trivial_t_coeff();
    c.pass = inv != 0;
    c.detail = "b2+(X/A) = " + to_string(inv);
    out.push_back(std::move(c));
  }
  return out;
}

ContradictionReport verify_theorem_c(const IndexData& idx) {
  if (!idx.group().is_cyclic())
    throw NonCyclicGroup("verify_theorem_c requires a cyclic (or trivial) group");
  if (idx.k() <= 0) throw HypothesisNotMet("theorem C requires k > 0, got k = " + to_string(idx.k()));
  if (idx.m() <= 0) throw HypothesisNotMet("theorem C requires m > 0, got m = " + to_string(idx.m()));
  if (idx.trivial_t_coeff() != 0)
    throw HypothesisNotMet("theorem C contradiction requires the trivial t-coefficient to be 0, got " +
                           to_string(idx.trivial_t_coeff()));
  if (idx.group().num_factors() == 0)
    throw HypothesisNotMet("theorem C requires a non-trivial group action");

  GroupElement el = GroupElement::torus(idx.group(), {1});
  ContradictionReport rep;
  rep.element = el.str(idx.group());
  rep.trace = lambda_minus_one_trace(idx, el);
  rep.certified = !rep.trace.is_polynomial();
  if (rep.certified) rep.offending_denominator = rep.trace.denominator().str();
  return rep;
}

}  // namespace pin2k
