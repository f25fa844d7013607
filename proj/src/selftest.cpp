#include "pin2k/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "pin2k/cover.hpp"
#include "pin2k/dense_solver.hpp"
#include "pin2k/k3.hpp"

namespace pin2k {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// alpha = c * (sum over chis) * (1 - 1~) assembled directly from the closed
// form.
RepElement closed_form_alpha(const GroupSpec& g, const Rat& c,
                             const std::vector<std::vector<long>>& chis) {
  APoly a0(g);
  for (const auto& chi : chis) a0.add_coeff(chi, c);
  return RepElement::assemble(g, a0, -a0, {});
}

struct ClosedFormCase {
  std::string family;
  IndexData idx;
  RepElement expected_alpha;
  long expected_offset;
};

// Random admissible index data for each closed-form family, with the
// non-degeneracy conditions passing by construction (resampled when the
// s-dependent condition of the odd family fails).
ClosedFormCase random_case(Rng& rng, int which) {
  switch (which) {
    case 0: {  // trivial group
      Int k(uniform(rng, 0, 2)), m(uniform(rng, 1, 6));
      IndexData idx = IndexData::furuta(k, m);
      long e = (m - 2 * k - 1).convert_to<long>();
      return {"furuta", idx,
              closed_form_alpha(idx.group(), pow2_rat(e), {{}}),
              1};
    }
    case 1: {  // even involution
      Int t1(uniform(rng, 1, 4)), t2(uniform(rng, 1, 4));
      Int s1(uniform(rng, 0, 3)), s2(uniform(rng, 0, 3));
      if ((s1 + s2) % 2 != 0) s2 += 1;
      IndexData idx = IndexData::even_cyclic(1, {s1, s2}, {t1, t2});
      long e = (idx.m() - idx.two_k() - 2).convert_to<long>();
      return {"even involution", idx,
              closed_form_alpha(idx.group(), pow2_rat(e), {{0}, {1}}),
              2};
    }
    case 2: {  // (Z/2)^q
      int q = static_cast<int>(uniform(rng, 1, 3));
      GroupSpec g = GroupSpec::even(std::vector<long>(static_cast<size_t>(q), 2));
      APoly s(g), t(g);
      for (const auto& chi : g.characters()) {
        t.add_coeff(chi, Rat(uniform(rng, 1, 3)));
        s.add_coeff(chi, Rat(uniform(rng, 0, 2)));
      }
      if (numerator(s.sum_coeffs()) % 2 != 0)
        s.add_coeff(std::vector<long>(static_cast<size_t>(q), 0),
                    s.coeff(std::vector<long>(static_cast<size_t>(q), 0)) >= 0 ? 1 : -1);
      IndexData idx(g, s, t);
      long e = (idx.m() - idx.two_k() - 1 - q).convert_to<long>();
      return {"(Z/2)^" + std::to_string(q), idx,
              closed_form_alpha(g, pow2_rat(e), g.characters()),
              1 + q};
    }
    default: {  // odd type
      int p = static_cast<int>(uniform(rng, 1, 3));
      long n = 1L << p;
      while (true) {
        std::vector<Int> s(static_cast<size_t>(n)), t(static_cast<size_t>(n));
        for (auto& v : t) v = uniform(rng, 1, 3);
        for (auto& v : s) v = uniform(rng, 0, 2);
        Int total = 0;
        for (const auto& v : s) total += v;
        if (total % 2 != 0) s[0] += 1;
        IndexData idx = IndexData::odd_type(p, s, t);
        if (!all_pass(check_nondegeneracy(idx))) continue;  // t_odd sum hit 2k
        GroupSpec g = idx.group();
        std::vector<std::vector<long>> chis;
        for (long i = 1; i <= n; ++i) chis.push_back(reduce_residues(g, {2 * i}));
        long e = (idx.m() - idx.two_k() - static_cast<Int>(p) - 1).convert_to<long>();
        return {"odd p=" + std::to_string(p), idx, closed_form_alpha(g, pow2_rat(e), chis),
                1 + p};
      }
    }
  }
}

std::string fmt_rat(const Rat& r) { return to_string(r); }

// ---- criteria ----

CriterionResult criterion_closed_forms(Rng& rng) {
  CriterionResult res{1, "degree closed forms (Furuta / involution / (Z/2)^q / odd 2^p)", true, ""};
  int checked = 0;
  for (int which = 0; which < 4; ++which) {
    for (int trial = 0; trial < 6; ++trial) {
      ClosedFormCase c = random_case(rng, which);
      DegreeSolution sol = solve_degree(build_trace_system(c.idx));
      if (sol.outcome != DegreeSolution::Outcome::Unique) {
        res.pass = false;
        res.detail = c.family + ": solver did not return a unique solution";
        return res;
      }
      if (!(*sol.alpha == c.expected_alpha)) {
        res.pass = false;
        res.detail = c.family + ": alpha = " + sol.alpha->str() + " expected " +
                     c.expected_alpha.str();
        return res;
      }
      ++checked;
    }
  }
  res.detail = std::to_string(checked) + " randomized systems matched coefficient-for-coefficient";
  return res;
}

CriterionResult criterion_inequalities(Rng& rng) {
  CriterionResult res{2, "inequality conclusions m >= 2k + (1, 2, 1+q, 1+p)", true, ""};
  for (int which = 0; which < 4; ++which) {
    for (int trial = 0; trial < 6; ++trial) {
      ClosedFormCase c = random_case(rng, which);
      DegreeSolution sol = solve_degree(build_trace_system(c.idx));
      InequalityReport rep = conclude_bound(sol, c.idx);
      std::string expect = "m >= 2k+" + std::to_string(c.expected_offset);
      if (rep.bound_offset != c.expected_offset || rep.conclusion != expect) {
        res.pass = false;
        res.detail = c.family + ": concluded '" + rep.conclusion + "', expected '" + expect + "'";
        return res;
      }
    }
  }
  res.detail = "all four families conclude the stated bound";
  return res;
}

CriterionResult criterion_j_trace(Rng& rng) {
  CriterionResult res{3, "lambda_-1 trace at J equals 2^(m-2k)", true, ""};
  for (int which = 0; which < 4; ++which) {
    for (int trial = 0; trial < 8; ++trial) {
      ClosedFormCase c = random_case(rng, which);
      RationalFn tr = lambda_minus_one_trace(c.idx, GroupElement::j(c.idx.group()));
      long e = (c.idx.m() - c.idx.two_k()).convert_to<long>();
      RationalFn expect{Laurent(Cyclotomic(pow2_rat(e)))};
      if (tr != expect) {
        res.pass = false;
        res.detail = c.family + ": tr_J = " + tr.str() + " expected 2^" + std::to_string(e);
        return res;
      }
    }
  }
  res.detail = "32 randomized index data agree exactly";
  return res;
}

CriterionResult criterion_genus_corollaries() {
  CriterionResult res{4, "minimal genus 10 for (6,2) in CP2#CP2 and 19 for ((4,4),6) in S2xS2#CP2",
                      true, ""};
  ManifoldSpec cp2cp2{"CP2#CP2", IntersectionForm::diagonal({1, 1})};
  GenusBoundReport r1 = genus_bound(cp2cp2, SurfaceClass{{6, 2}}, 1);
  ManifoldSpec s2s2cp2{"S2xS2#CP2",
                       IntersectionForm::hyperbolic(1).direct_sum(IntersectionForm::diagonal({1}))};
  GenusBoundReport r2 = genus_bound(s2s2cp2, SurfaceClass{{4, 4, 6}}, 1);
  if (r1.effective_min_genus != 10 || r2.effective_min_genus != 19) {
    res.pass = false;
    res.detail = "got " + to_string(r1.effective_min_genus) + " and " +
                 to_string(r2.effective_min_genus);
    return res;
  }
  res.detail = "both corollaries reproduced exactly";
  return res;
}

CriterionResult criterion_sweep() {
  CriterionResult res{5, "#_N CP2 sweep, class (4,...,4), p = 2, N = 2..12", true, ""};
  for (long N = 2; N <= 12; ++N) {
    ManifoldSpec M{"#_" + std::to_string(N) + "CP2",
                   IntersectionForm::diagonal(std::vector<int>(static_cast<size_t>(N), 1))};
    SurfaceClass cls{std::vector<Int>(static_cast<size_t>(N), Int(4))};
    GenusBoundReport r = genus_bound(M, cls, 2);
    Rat expect_refined(8 * N + 3, 3);
    Int expect_eff = N <= 5 ? Int(3 * N) : ceil_rat(expect_refined);
    if (r.refined_bound != expect_refined || r.effective_min_genus != expect_eff) {
      res.pass = false;
      res.detail = "N = " + std::to_string(N) + ": refined " + fmt_rat(r.refined_bound) +
                   " effective " + to_string(r.effective_min_genus) + ", expected " +
                   fmt_rat(expect_refined) + " / " + to_string(expect_eff);
      return res;
    }
  }
  res.detail = "refined bound (8N+3)/3 and effective minimum match for all N";
  return res;
}

CriterionResult criterion_k3() {
  CriterionResult res{6, "K3 involution classification and cover construction audit", true, ""};
  QK3Classification even = classify_qk3_involution(SpinActionType::Even);
  QK3Classification odd = classify_qk3_involution(SpinActionType::Odd);
  K3ConstructionCheck cons = k3_cover_construction_check();
  bool ok = even.fixed_points && *even.fixed_points == 8 && even.b2plus_quotient == 3 &&
            even.b2minus_quotient && *even.b2minus_quotient == 11 && odd.b2plus_quotient == 1 &&
            cons.chi_cover == 32 && cons.chi_final == 24 && cons.sigma_final == -16 &&
            cons.sign_discrepancy;
  if (!ok) {
    res.pass = false;
    res.detail = "classification or construction ledger mismatch";
    return res;
  }
  res.detail = "even: (N=8, b2+=3, b2-=11); odd: b2+=1; chi ledger 32/24, sigma -16, sign flagged";
  return res;
}

CriterionResult criterion_theorem_c() {
  CriterionResult res{7, "non-polynomiality certificate for vanishing quotient b2+", true, ""};
  int checked = 0;
  // Enumerate all t with trivial coefficient zero and sum m, and a spread of
  // s distributions with sum 2k.
  std::function<void(std::vector<Int>&, size_t, Int, std::vector<std::vector<Int>>&)> gen =
      [&](std::vector<Int>& cur, size_t pos, Int remaining, std::vector<std::vector<Int>>& out) {
        if (pos + 1 == cur.size()) {
          cur[pos] = remaining;
          out.push_back(cur);
          return;
        }
        for (Int v = 0; v <= remaining; ++v) {
          cur[pos] = v;
          gen(cur, pos + 1, remaining - v, out);
        }
      };
  for (int p : {1, 2}) {
    long n = 1L << p;
    for (Int k(1); k <= 2; ++k) {
      for (Int m(1); m <= 4; ++m) {
        std::vector<std::vector<Int>> ts;
        std::vector<Int> cur(static_cast<size_t>(n - 1));
        gen(cur, 0, m, ts);
        for (auto t : ts) {
          t.push_back(0);  // trivial coefficient t_{2^p} = 0
          std::vector<std::vector<Int>> ss;
          for (long i = 0; i < n; ++i) {
            std::vector<Int> s(static_cast<size_t>(n), Int(0));
            s[static_cast<size_t>(i)] = 2 * k;
            ss.push_back(std::move(s));
          }
          if (n > 1) {  // one spread distribution, one virtual
            std::vector<Int> spread(static_cast<size_t>(n), Int(0));
            spread[0] = k;
            spread[1] = k;
            ss.push_back(std::move(spread));
            std::vector<Int> virt(static_cast<size_t>(n), Int(0));
            virt[0] = 2 * k + 1;
            virt[1] = -1;
            ss.push_back(std::move(virt));
          }
          for (const auto& s : ss) {
            for (bool odd_kind : {true, false}) {
              IndexData idx = odd_kind ? IndexData::odd_type(p, s, t)
                                       : IndexData::even_cyclic(p, s, t);
              ContradictionReport rep = verify_theorem_c(idx);
              if (!rep.certified) {
                res.pass = false;
                res.detail = "trace unexpectedly polynomial for " + idx.group().str() +
                             ", trace = " + rep.trace.str();
                return res;
              }
              ++checked;
            }
          }
        }
      }
    }
  }
  res.detail = std::to_string(checked) + " index data certified non-polynomial";
  return res;
}

CriterionResult criterion_oracle_equivalence(Rng& rng) {
  CriterionResult res{8, "DFT solver agrees with the dense linear-algebra oracle", true, ""};
  const int cutoff = 3;
  for (int p : {1, 2}) {
    for (int trial = 0; trial < 25; ++trial) {
      long n = 1L << p;
      std::vector<Int> s(static_cast<size_t>(n)), t(static_cast<size_t>(n));
      while (true) {
        for (auto& v : t) v = uniform(rng, 1, 3);
        for (auto& v : s) v = uniform(rng, 0, 2);
        Int total = 0;
        for (const auto& v : s) total += v;
        if (total % 2 != 0) s[0] += 1;
        IndexData idx = IndexData::odd_type(p, s, t);
        if (all_pass(check_nondegeneracy(idx))) break;
      }
      IndexData idx = IndexData::odd_type(p, s, t);
      TraceSystem sys = build_trace_system(idx, cutoff);
      DegreeSolution fast = solve_degree(sys);
      DegreeSolution dense = dense_solve_degree(sys);
      if (fast.outcome != DegreeSolution::Outcome::Unique ||
          dense.outcome != DegreeSolution::Outcome::Unique || !(*fast.alpha == *dense.alpha)) {
        res.pass = false;
        res.detail = "solvers disagree for p = " + std::to_string(p);
        return res;
      }
    }
  }
  res.detail = "50 randomized admissible odd-type systems agree exactly";
  return res;
}

CriterionResult criterion_ring_properties(Rng& rng) {
  CriterionResult res{9, "ring property suite (fusion, characters, parity, restriction)", true, ""};
  // Fusion associativity up to h_6 over the trivial group.
  GroupSpec triv = GroupSpec::trivial();
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      for (int k = 1; k <= 6; ++k) {
        RepElement hi = RepElement::h(triv, i), hj = RepElement::h(triv, j),
                   hk = RepElement::h(triv, k);
        if ((hi * hj) * hk != hi * (hj * hk)) {
          res.pass = false;
          res.detail = "fusion associativity failed at (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")";
          return res;
        }
      }

  // Character multiplicativity on 100 random pairs over assorted groups.
  auto random_rep = [&](const GroupSpec& g) {
    RepElement e = RepElement::zero(g);
    auto chis = g.characters();
    for (int n = 0; n < 4; ++n) {
      const auto& chi = chis[static_cast<size_t>(uniform(rng, 0, static_cast<long>(chis.size()) - 1))];
      Rat c(uniform(rng, -3, 3));
      int part = static_cast<int>(uniform(rng, 0, 3));
      APoly mono = APoly::monomial(g, chi, c);
      if (g.is_odd()) {
        int parity = static_cast<int>(chi[0] & 1);
        if (part <= 1) {
          if (parity != 0) continue;
          e += RepElement::assemble(g, part == 0 ? mono : APoly(g),
                                    part == 0 ? APoly(g) : mono, {});
        } else {
          int hi = part - 1;  // 1 or 2
          if ((hi & 1) != parity) hi = 3 - hi;
          e += RepElement::assemble(g, APoly(g), APoly(g), {{hi, mono}});
        }
      } else {
        if (part == 0)
          e += RepElement::assemble(g, mono, APoly(g), {});
        else if (part == 1)
          e += RepElement::assemble(g, APoly(g), mono, {});
        else
          e += RepElement::assemble(g, APoly(g), APoly(g), {{part - 1, mono}});
      }
    }
    return e;
  };
  std::vector<GroupSpec> groups = {GroupSpec::trivial(), GroupSpec::even({2}),
                                   GroupSpec::even({2, 2}), GroupSpec::even({4}),
                                   GroupSpec::odd(1), GroupSpec::odd(2)};
  for (int trial = 0; trial < 100; ++trial) {
    const GroupSpec& g = groups[static_cast<size_t>(uniform(rng, 0, static_cast<long>(groups.size()) - 1))];
    RepElement a = random_rep(g), b = random_rep(g);
    RepElement ab = a * b;
    std::vector<GroupElement> elements;
    for (const auto& fin : g.element_representatives()) {
      elements.push_back(GroupElement::torus(g, fin));
      elements.push_back(GroupElement::j(g, fin));
      elements.push_back(GroupElement::identity(g, fin));
    }
    for (const auto& el : elements) {
      if (ab.character(el) != a.character(el) * b.character(el)) {
        res.pass = false;
        res.detail = "character not multiplicative at " + el.str(g) + " over " + g.str();
        return res;
      }
    }
    // Parity preservation in R(G_odd).
    if (g.is_odd()) {
      if (!ab.c0().has_parity(0) || !ab.c0_tilde().has_parity(0)) {
        res.pass = false;
        res.detail = "parity violated by product over " + g.str();
        return res;
      }
      for (const auto& [i, ph] : ab.h_coeffs())
        if (!ph.has_parity(i & 1)) {
          res.pass = false;
          res.detail = "parity violated at h_" + std::to_string(i);
          return res;
        }
    }
    // Restriction homomorphism and compatibility with the generic torus.
    if (ab.restrict_to_circle() != a.restrict_to_circle() * b.restrict_to_circle()) {
      res.pass = false;
      res.detail = "restriction is not multiplicative over " + g.str();
      return res;
    }
    if (a.restrict_to_circle() != a.character(GroupElement::torus(g))) {
      res.pass = false;
      res.detail = "restriction disagrees with the generic-torus character";
      return res;
    }
  }
  res.detail = "fusion associativity (216 triples), 100 random pairs, parity and restriction hold";
  return res;
}

CriterionResult criterion_float_crosscheck(Rng& rng) {
  CriterionResult res{10, "exact cyclotomic arithmetic matches floating evaluation to 1e-9", true, ""};
  auto random_leaf = [&](int level) {
    Cyclotomic c;
    for (int t = 0; t < 2; ++t)
      c += Cyclotomic(Rat(uniform(rng, -4, 4))) *
           Cyclotomic::root_of_unity(level, uniform(rng, 0, (1L << level) - 1));
    return c;
  };
  for (int trial = 0; trial < 100; ++trial) {
    int level = static_cast<int>(uniform(rng, 1, 5));
    Cyclotomic exact = random_leaf(level);
    std::complex<double> approx = exact.to_complex();
    for (int step = 0; step < 6; ++step) {
      Cyclotomic operand = random_leaf(level);
      switch (uniform(rng, 0, 2)) {
        case 0:
          exact += operand;
          approx += operand.to_complex();
          break;
        case 1:
          exact *= operand;
          approx *= operand.to_complex();
          break;
        default:
          if (!operand.is_zero()) {
            exact *= operand.inverse();
            approx /= operand.to_complex();
          }
          break;
      }
    }
    double delta = std::abs(exact.to_complex() - approx);
    if (!(delta <= 1e-9)) {
      res.pass = false;
      res.detail = "delta = " + std::to_string(delta) + " at trial " + std::to_string(trial);
      return res;
    }
  }
  res.detail = "100 random expression trees agree within 1e-9";
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
  Rng rng(0x5EED5EEDULL);
  std::vector<CriterionResult> out;
  out.push_back(criterion_closed_forms(rng));
  out.push_back(criterion_inequalities(rng));
  out.push_back(criterion_j_trace(rng));
  out.push_back(criterion_genus_corollaries());
  out.push_back(criterion_sweep());
  out.push_back(criterion_k3());
  out.push_back(criterion_theorem_c());
  out.push_back(criterion_oracle_equivalence(rng));
  out.push_back(criterion_ring_properties(rng));
  out.push_back(criterion_float_crosscheck(rng));
  return out;
}

bool acceptance_all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string render_acceptance_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results)
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  [" << r.detail
        << "]\n";
  return out.str();
}

}  // namespace pin2k
