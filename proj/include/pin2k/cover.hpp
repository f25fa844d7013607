#pragma once

#include <set>

#include "pin2k/condition.hpp"
#include "pin2k/form.hpp"

namespace pin2k {

// Invariants of the 2^p-fold cover X -> M branched along a genus-g surface:
// k = -sigma(X)/16 and m_i = b2+(X_i) for the intermediate quotients
// X_i = X / (Z/2^i), with m_p = b2+(M).
struct CoverInvariants {
  int p = 0;
  Int k;
  std::vector<Int> m;  // m[0..p]

  bool operator==(const CoverInvariants& o) const { return p == o.p && k == o.k && m == o.m; }
};

// Checks the divisibility and characteristic-vector hypotheses, then
// evaluates the signature/Euler formulas exactly. Throws SpinConditionFailed
// when the hypotheses fail and NonIntegralInvariant when a formula value is
// not a nonnegative integer (inconsistent input data).
CoverInvariants cover_invariants(const ManifoldSpec& M, const SurfaceClass& cls, const Int& genus,
                                 int p);

struct GenusBoundReport {
  int p = 0;
  Rat furuta_bound;        // general bound without the +p term
  Rat refined_bound;       // with the +p improvement
  std::set<Int> excluded_genera;
  std::vector<Condition> hypotheses;
  Int effective_min_genus;

  bool operator==(const GenusBoundReport& o) const {
    return p == o.p && furuta_bound == o.furuta_bound && refined_bound == o.refined_bound &&
           excluded_genera == o.excluded_genera && hypotheses == o.hypotheses &&
           effective_min_genus == o.effective_min_genus;
  }
};

// The genus bound for classes divisible by 2^p, with the excluded-genus
// refinement: a genus value e is possible iff it clears the unconditional
// Furuta baseline and either clears the refined bound or lies in the
// excluded set (where the refined theorem does not speak);
// effective_min_genus is the least possible value. Throws HypothesisFailed
// (carrying the evaluated table) when a hypothesis fails.
GenusBoundReport genus_bound(const ManifoldSpec& M, const SurfaceClass& cls, int p);

class HypothesisFailed : public Error {
public:
  HypothesisFailed(std::string which, std::vector<Condition> table)
      : Error("hypothesis failed: " + which), which_(std::move(which)), table_(std::move(table)) {}
  const std::string& which() const { return which_; }
  const std::vector<Condition>& table() const { return table_; }

private:
  std::string which_;
  std::vector<Condition> table_;
};

// The linear constraints the cover places on an odd-type index: the p+1
// partial sums of t (the m_j) and the total of s (2k). The t-vector itself
// is underdetermined; the non-degeneracy checks only need these sums.
struct CoverIndexConstraints {
  int p = 0;
  Int two_k;
  std::vector<Int> partial_t_sums;  // partial_t_sums[j] = sum of t_i over i = 0 mod 2^j = m_j

  bool operator==(const CoverIndexConstraints& o) const {
    return p == o.p && two_k == o.two_k && partial_t_sums == o.partial_t_sums;
  }
};

CoverIndexConstraints index_from_cover(const ManifoldSpec& M, const SurfaceClass& cls,
                                       const Int& genus, int p);

// The odd-type non-degeneracy conditions evaluated from the partial sums
// alone (same names as check_nondegeneracy on full index data).
std::vector<Condition> check_nondegeneracy(const CoverIndexConstraints& c);

}  // namespace pin2k
