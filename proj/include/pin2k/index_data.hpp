#pragma once

#include <vector>

#include "pin2k/group.hpp"
#include "pin2k/rational_fn.hpp"
#include "pin2k/rep_element.hpp"

namespace pin2k {

// The equivariant index s*h - t*1~ of the Dirac-plus-form operator. The
// coefficient sums are pinned to the topology: sum of s = 2k = -sigma(X)/8,
// and the partial sums of t over index classes give b2+ of the quotients.
//
// t has nonnegative integer coefficients (it is an honest representation);
// s has integer coefficients and may be virtual (negative entries allowed),
// but its total must be the even number 2k with k >= 0.
class IndexData {
public:
  IndexData(const GroupSpec& g, APoly s, APoly t);

  // Odd type with the standard indexing: s_i multiplies xi^(2i-1) and t_i
  // multiplies xi^(2i), i = 1..2^p. Vectors must have length 2^p.
  static IndexData odd_type(int p, const std::vector<Int>& s, const std::vector<Int>& t);
  // Cyclic even type: s_i, t_i multiply zeta^i, i = 1..2^p (so index 2^p is
  // the trivial character). An empty pair of singleton vectors with p = 0
  // gives the plain Furuta setting.
  static IndexData even_cyclic(int p, const std::vector<Int>& s, const std::vector<Int>& t);
  // Trivial finite group: s = 2k, t = m on the trivial character.
  static IndexData furuta(const Int& k, const Int& m);

  const GroupSpec& group() const { return group_; }
  const APoly& s() const { return s_; }
  const APoly& t() const { return t_; }

  Int two_k() const;
  Int k() const { return two_k() / 2; }
  Int m() const;

  // Coefficient of the trivial character of t (= b2+ of the quotient by the
  // full group).
  Int trivial_t_coeff() const;

  // For cyclic groups: t and s in the paper's 1-based indexing (length 2^p).
  std::vector<Int> t_paper() const;
  std::vector<Int> s_paper() const;
  // p for cyclic groups (0 for the trivial group).
  int cyclic_p() const;

  // The index as a ring element s*h - t*1~ (h = h_1).
  RepElement rep_element() const;

  bool operator==(const IndexData& o) const {
    return group_ == o.group_ && s_ == o.s_ && t_ == o.t_;
  }

private:
  GroupSpec group_;
  APoly s_, t_;
};

// Signed fixed-subspace dimensions of (V, W) = (s*h, t*1~) under g, by exact
// eigenvalue enumeration on each character line. The dimensions are virtual
// when s has negative entries; the *_has_fixed_line flags record whether any
// line with nonzero multiplicity is actually fixed (used to decide when the
// lambda_-1 trace is a genuine product of nonzero factors).
struct FixedDims {
  Int dim_v;
  Int dim_w;
  bool v_has_fixed_line = false;
  bool w_has_fixed_line = false;
};

FixedDims fixed_dims(const IndexData& idx, const GroupElement& g);

// tr_g lambda_-1(W - V) = prod over lines of W of (1 - eigenvalue) divided by
// the same product over V. Throws PoleAtElement when a factor that ends up
// inverted vanishes (g fixes a line that occurs with positive s-multiplicity).
RationalFn lambda_minus_one_trace(const IndexData& idx, const GroupElement& g);

// Sum of t_i over i = 0 mod 2^j in the paper's cyclic indexing: b2+ of the
// quotient X_j. j = 0 returns m. Throws NonCyclicGroup for multi-factor
// groups (use invariant_dim per subgroup instead).
Int quotient_b2plus(const IndexData& idx, int j);

// Dimension of the part of t fixed by the cyclic subgroup generated by elem:
// the sum of t_chi over characters with chi(elem) = 1.
Int invariant_dim(const IndexData& idx, const std::vector<long>& elem);

}  // namespace pin2k
