#include "pin2k/dense_solver.hpp"

namespace pin2k {

namespace {

struct Unknown {
  int family;  // 0 = alpha_0, -1 = alpha~_0, i >= 1 = alpha_i
  std::vector<long> chi;
};

}  // namespace

DegreeSolution dense_solve_degree(const TraceSystem& sys) {
  const GroupSpec& g = sys.index.group();
  DegreeSolution sol;

  std::vector<Unknown> unknowns;
  auto admissible = [&](int family, const std::vector<long>& chi) {
    if (!g.is_odd()) return true;
    int parity = family >= 1 ? (family & 1) : 0;
    return (chi[0] & 1) == parity;
  };
  for (int family = -1; family <= sys.h_cutoff; ++family)
    for (const auto& chi : g.characters())
      if (admissible(family, chi)) unknowns.push_back({family, chi});

  std::vector<std::vector<Cyclotomic>> rows;  // augmented: last column = rhs
  size_t n = unknowns.size();

  auto add_row = [&](const GroupElement& el, int exponent, const Cyclotomic& rhs) {
    std::vector<Cyclotomic> row(n + 1);
    for (size_t c = 0; c < n; ++c) {
      const Unknown& u = unknowns[c];
      Cyclotomic chi_a = character_value(g, u.chi, el.finite);
      Cyclotomic coeff;  // contribution of this unknown to the phi^exponent trace term
      if (el.pin2 == GroupElement::Pin2::GenericTorus) {
        if (exponent == 0 && u.family <= 0) coeff = chi_a;
        if (exponent != 0 && u.family == (exponent < 0 ? -exponent : exponent)) coeff = chi_a;
      } else {  // J component
        if (exponent == 0) {
          if (u.family == 0) coeff = chi_a;
          if (u.family == -1) coeff = -chi_a;  // tr_J 1~ = -1
        }
      }
      row[c] = coeff;
    }
    row[n] = rhs;
    rows.push_back(std::move(row));
  };

  for (const auto& eq : sys.equations) {
    if (eq.kind == TraceEquation::Kind::Skipped) {
      sol.skipped.push_back({eq.element.str(g), eq.skip_reason});
      continue;
    }
    RationalFn rhs = eq.kind == TraceEquation::Kind::ZeroTrace ? RationalFn() : eq.value;
    if (!rhs.is_polynomial()) {
      sol.outcome = DegreeSolution::Outcome::Inconsistent;
      sol.certificate = "trace at " + eq.element.str(g) + " is required to equal the non-polynomial " + rhs.str();
      return sol;
    }
    const Laurent& poly = rhs.polynomial();
    if (eq.element.pin2 == GroupElement::Pin2::GenericTorus) {
      if (!poly.is_zero() &&
          (poly.max_exp() > sys.h_cutoff || poly.min_exp() < -sys.h_cutoff)) {
        sol.outcome = DegreeSolution::Outcome::Inconsistent;
        sol.certificate = "trace at " + eq.element.str(g) + " needs terms beyond the h-cutoff";
        return sol;
      }
      for (int e = -sys.h_cutoff; e <= sys.h_cutoff; ++e)
        add_row(eq.element, e, poly.coeff_at(e));
    } else {
      add_row(eq.element, 0, poly.coeff_at(0));
    }
  }

  // Gaussian elimination with exact cyclotomic arithmetic.
  size_t rank = 0;
  std::vector<long> pivot_of_col(n, -1);
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Cyclotomic inv = rows[rank][col].inverse();
    for (size_t c = col; c <= n; ++c) rows[rank][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Cyclotomic f = rows[r][col];
      for (size_t c = col; c <= n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }

  for (size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][n].is_zero()) {
      sol.outcome = DegreeSolution::Outcome::Inconsistent;
      sol.certificate = "inconsistent linear system (0 = " + rows[r][n].str() + ")";
      return sol;
    }
  }
  for (size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] < 0) {
      sol.outcome = DegreeSolution::Outcome::Underdetermined;
      return sol;
    }
  }

  APoly a0(g), a0t(g);
  std::map<int, APoly> h_coeffs;
  for (size_t col = 0; col < n; ++col) {
    const Cyclotomic& v = rows[static_cast<size_t>(pivot_of_col[col])][n];
    if (v.is_zero()) continue;
    if (!v.is_rational()) {
      sol.outcome = DegreeSolution::Outcome::Inconsistent;
      sol.certificate = "solution coefficient is not rational: " + v.str();
      return sol;
    }
    const Unknown& u = unknowns[col];
    if (u.family == 0)
      a0.add_coeff(u.chi, v.rational_value());
    else if (u.family == -1)
      a0t.add_coeff(u.chi, v.rational_value());
    else {
      auto [it, inserted] = h_coeffs.try_emplace(u.family, APoly(g));
      it->second.add_coeff(u.chi, v.rational_value());
    }
  }
  sol.outcome = DegreeSolution::Outcome::Unique;
  sol.alpha = RepElement::assemble(g, std::move(a0), std::move(a0t), std::move(h_coeffs));
  return sol;
}

}  // namespace pin2k
