#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pin2k/condition.hpp"
#include "pin2k/trace_system.hpp"

namespace pin2k {

struct SkippedEquation {
  std::string element;
  std::string reason;
  bool operator==(const SkippedEquation& o) const {
    return element == o.element && reason == o.reason;
  }
};

// Outcome of solving a trace system for the K-theoretic degree alpha.
//  Unique:          every unknown is pinned; alpha has exact rational
//                   coefficients and satisfies all non-skipped equations.
//  Underdetermined: some skipped equation left an evaluation unpinned.
//  Inconsistent:    no alpha in the ring can satisfy the system; the
//                   certificate names the offending equation(s).
struct DegreeSolution {
  enum class Outcome { Unique, Underdetermined, Inconsistent };
  Outcome outcome = Outcome::Inconsistent;
  std::optional<RepElement> alpha;
  std::vector<SkippedEquation> skipped;
  std::string certificate;
};

// Solves by evaluation/interpolation over the character group: the phi-family
// equation at a pins alpha_0(a) + alpha~_0(a) and every alpha_i(a); the
// J-family equation pins alpha_0(a) - alpha~_0(a). Once every representative
// carries both, each coefficient polynomial is recovered by the exact inverse
// discrete Fourier transform over 2-power roots of unity.
DegreeSolution solve_degree(const TraceSystem& sys);

// The integrality argument: alpha lies in R(G), so its basis coefficients are
// integers; the solved coefficients carry 2-adic valuation m - 2k - offset,
// which forces m >= 2k + offset.
struct InequalityReport {
  long required_valuation = 0;  // minimal v2 over the nonzero coefficients of alpha
  long bound_offset = 0;        // the c in "m >= 2k + c"
  std::string conclusion;       // e.g. "m >= 2k+2"
  bool holds_for_input = false;
  std::vector<Condition> nondegeneracy;
};

InequalityReport conclude_bound(const DegreeSolution& sol, const IndexData& idx);

// Evaluates the paper-named non-degeneracy conditions from the index data
// alone. Odd type: the chain 0 < b2+(X_p) < ... < b2+(X_1) plus
// m != 2k + b2+(X_1). Even type: m != b2+(X/<g>) for every non-trivial g and
// b2+(X/A) != 0 (for the trivial group this degenerates to m != 0).
std::vector<Condition> check_nondegeneracy(const IndexData& idx);

// Mechanization of the b2+(X/tau) != 0 contradiction: under the hypotheses
// k > 0, m > 0 and vanishing trivial t-coefficient, the lambda_-1 trace at
// phi*nu fails to be a Laurent polynomial, contradicting the polynomial form
// of tr_{phi nu}(alpha).
struct ContradictionReport {
  bool certified = false;  // reduced denominator is not a unit
  RationalFn trace;
  std::string element;
  std::string offending_denominator;
};

ContradictionReport verify_theorem_c(const IndexData& idx);

}  // namespace pin2k
