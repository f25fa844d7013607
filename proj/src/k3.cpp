#include "pin2k/k3.hpp"

namespace pin2k {

SpinActionType spin_type_from_fixed_set(const FixedSetDescription& desc) {
  switch (desc.kind) {
    case FixedSetDescription::Kind::IsolatedPoints:
    case FixedSetDescription::Kind::AllOfX:
      return SpinActionType::Even;
    case FixedSetDescription::Kind::Surface2D:
      return SpinActionType::Odd;
    case FixedSetDescription::Kind::Free:
      return desc.quotient_spin ? SpinActionType::Even : SpinActionType::Odd;
  }
  throw Error("unreachable");
}

QuotientInvariants involution_quotient_arith(const Int& sigma_x, const Int& chi_x,
                                             const Int& fixed_points) {
  if (sigma_x % 2 != 0)
    throw ParityError("sigma(X) = " + to_string(sigma_x) + " is odd; sigma(X/tau) is not an integer");
  if ((chi_x + fixed_points) % 2 != 0)
    throw ParityError("chi(X) + N = " + to_string(chi_x + fixed_points) +
                      " is odd; chi(X/tau) is not an integer");
  return {sigma_x / 2, (chi_x + fixed_points) / 2};
}

QK3Classification classify_qk3_involution(SpinActionType type) {
  // Rational cohomology K3: sigma = -16, chi = 24, so k = 1 and m = 3.
  const Int k = 1, m = 3, sigma = -16, chi = 24;
  QK3Classification out;
  out.type = type;
  if (type == SpinActionType::Odd) {
    // The p = 1 odd bound 2k+1+p = 4 <= m = 3 fails, so a non-degeneracy
    // condition must fail: b2+(X/tau) = 0 or b2+(X/tau) = m - 2k = 1. The
    // trace contradiction rules out 0 when k > 0.
    out.b2plus_quotient = m - 2 * k;
    out.derivation = {
        "k = 1, m = 3 for a rational cohomology K3",
        "odd-type bound would give 2k+1+p = 4 <= m = 3: false, so a non-degeneracy condition fails",
        "p = 1 conditions: b2+(X/tau) != 0 and m != 2k + b2+(X/tau); failure means b2+(X/tau) in {0, 1}",
        "b2+(X/tau) = 0 is impossible for k > 0 (non-polynomial trace contradiction)",
        "therefore b2+(X/tau) = 1"};
    return out;
  }
  // Even type: the involution bound 2k+2 = 4 <= m = 3 fails, so
  // m = b2+(X/sigma) or b2+(X/sigma) = 0; the latter is impossible for
  // k > 0, hence b2+(X/sigma) = 3. The fixed set of an even involution is
  // at most isolated points, so the G-signature theorem halves sigma and the
  // Lefschetz formula counts the points.
  out.b2plus_quotient = m;
  Int sigma_q = sigma / 2;                            // -8
  Int b2minus_q = out.b2plus_quotient - sigma_q;      // 3 + 8 = 11
  Int chi_q = 2 + out.b2plus_quotient + b2minus_q;    // b1 = 0
  Int fixed = 2 * chi_q - chi;                        // chi_q = (chi + N)/2
  out.b2minus_quotient = b2minus_q;
  out.fixed_points = fixed;
  // Consistency: the quotient arithmetic reproduces (sigma_q, chi_q).
  QuotientInvariants q = involution_quotient_arith(sigma, chi, fixed);
  if (q.sigma_quotient != sigma_q || q.chi_quotient != chi_q)
    throw Error("internal: K3 quotient arithmetic mismatch");
  out.derivation = {
      "k = 1, m = 3 for a rational cohomology K3",
      "even involution bound would give 2k+2 = 4 <= m = 3: false, so a non-degeneracy condition fails",
      "conditions: m != b2+(X/sigma) > 0; failure means b2+(X/sigma) in {0, m}",
      "b2+(X/sigma) = 0 is impossible for k > 0 (non-polynomial trace contradiction)",
      "therefore b2+(X/sigma) = 3",
      "fixed set is at most isolated points, so sigma(X/sigma) = sigma(X)/2 = -8",
      "b2-(X/sigma) = b2+ - sigma = 11, chi(X/sigma) = 2 + 3 + 11 = 16",
      "Lefschetz: chi(X/sigma) = (chi(X) + N)/2 forces N = 8"};
  return out;
}

K3ConstructionCheck k3_cover_construction_check() {
  K3ConstructionCheck out;
  const Int chi_k3 = 24, sigma_k3 = -16;
  const Int sphere_count = 8, sphere_square = -2;
  Int chi_branch = sphere_count * 2;                   // eight 2-spheres
  Int branch_square = sphere_count * sphere_square;    // S^2 = -16

  out.chi_cover = 2 * chi_k3 - chi_branch;             // 32
  // Standard double branched cover signature: 2 sigma(Y~) - S^2 / 2.
  out.sigma_cover = 2 * sigma_k3 - branch_square / 2;  // -24
  out.stated_sigma_cover = 24;
  out.sign_discrepancy = out.stated_sigma_cover != out.sigma_cover;

  // Blow down the eight (-1)-spheres over the branch locus.
  out.chi_final = out.chi_cover - sphere_count;        // 24
  out.sigma_final = out.sigma_cover + sphere_count;    // -16
  out.b2_final = out.chi_final - 2;
  out.is_rational_k3 = out.chi_final == 24 && out.sigma_final == -16 && out.b2_final == 22;

  out.notes = {
      "chi(X~) = 2 chi(Y~) - chi(S) = 48 - 16 = 32",
      "sigma(X~) = 2 sigma(Y~) - S^2/2 = -32 + 8 = -24 by the double-cover signature formula",
      "the stated intermediate value +24 disagrees in sign (and the displayed formula 2 sigma - S^2 "
      "would give -16); only -24 is consistent with the final sigma(X) = -16 after eight blow-downs",
      "blow-downs: chi(X) = 32 - 8 = 24, sigma(X) = -24 + 8 = -16, b2 = 22: rational cohomology K3"};
  return out;
}

}  // namespace pin2k
