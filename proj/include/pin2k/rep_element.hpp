#pragma once

#include <map>

#include "pin2k/group.hpp"
#include "pin2k/laurent.hpp"

namespace pin2k {

// Element of R(G_ev) = R(Pin(2)) (x) R(A), or of R(G_odd) inside
// R(Pin(2) x Z/2^(p+1)): a coefficient polynomial over the finite character
// lattice attached to each of 1, 1~ and the two dimensional irreducibles h_i.
//
// For odd-type groups the stored polynomials obey the parity constraints of
// the subring R(G_odd): the 1 and 1~ coefficients are supported on even
// exponents of xi and the h_i coefficient on exponents of parity i. Ring
// operations preserve parity; public constructors validate it.
class RepElement {
public:
  RepElement() = default;
  explicit RepElement(const GroupSpec& g)
      : group_(g), c0_(g), c0_tilde_(g) {}

  static RepElement zero(const GroupSpec& g) { return RepElement(g); }
  static RepElement one(const GroupSpec& g, const Rat& c = Rat(1));
  static RepElement one_tilde(const GroupSpec& g, const Rat& c = Rat(1));
  static RepElement h(const GroupSpec& g, int i, const Rat& c = Rat(1));
  // The character z_f^e as a ring element (coefficient of 1).
  static RepElement generator(const GroupSpec& g, size_t factor, long e = 1);
  // Assemble from parts, validating parity for odd groups.
  static RepElement assemble(const GroupSpec& g, APoly c0, APoly c0_tilde,
                             std::map<int, APoly> h_coeffs);

  const GroupSpec& group() const { return group_; }
  const APoly& c0() const { return c0_; }
  const APoly& c0_tilde() const { return c0_tilde_; }
  const std::map<int, APoly>& h_coeffs() const { return h_; }
  APoly h_coeff(int i) const;

  bool is_zero() const;
  bool all_integer() const;

  RepElement operator-() const;
  RepElement operator+(const RepElement& o) const;
  RepElement operator-(const RepElement& o) const;
  // Fusion product: h_i h_j = h_{i+j} + h_{|i-j|} with h_0 = 1 + 1~,
  // 1~ 1~ = 1, 1~ h_i = h_i; character-lattice exponents add mod orders.
  RepElement operator*(const RepElement& o) const;
  RepElement scaled(const Rat& c) const;
  RepElement pow(unsigned e) const;
  RepElement& operator+=(const RepElement& o) { return *this = *this + o; }
  RepElement& operator-=(const RepElement& o) { return *this = *this - o; }
  RepElement& operator*=(const RepElement& o) { return *this = *this * o; }

  bool operator==(const RepElement& o) const {
    return group_ == o.group_ && c0_ == o.c0_ && c0_tilde_ == o.c0_tilde_ && h_ == o.h_;
  }
  bool operator!=(const RepElement& o) const { return !(*this == o); }

  // Trace of the action of g. A Laurent polynomial in phi for the generic
  // torus element, a constant for J-component and identity elements.
  Laurent character(const GroupElement& g) const;

  // Restriction to R(S^1): 1~ -> 1, every finite character -> 1,
  // h_i -> theta^i + theta^(-i). The returned Laurent is in theta.
  Laurent restrict_to_circle() const;

  // Reinterpret an element of the ambient ring R(Pin(2) x Z/2^(p+1)) (given
  // as an even-type element with the single factor order 2^(p+1)) as an
  // element of R(G_odd); throws ParityViolation if it is not in the subring.
  RepElement to_odd_type() const;

  std::string str() const;

private:
  GroupSpec group_ = GroupSpec::trivial();
  APoly c0_, c0_tilde_;
  std::map<int, APoly> h_;  // i >= 1 -> nonzero coefficient polynomial

  void set_h(int i, const APoly& p);
  void add_h(int i, const APoly& p);
  void validate_parity() const;
};

}  // namespace pin2k
