#pragma once

#include <map>
#include <string>
#include <vector>

#include "pin2k/cyclotomic.hpp"

namespace pin2k {

// The finite symmetry data attached to Pin(2).
//
// Even kind: G = Pin(2) x A with A = (+) Z/orders[i], each order a power of
// two >= 2; an empty list is the trivial group (plain Furuta setting).
//
// Odd kind: G = (Pin(2) x Z/2^(p+1)) / (diagonal Z/2), p >= 1. We work inside
// R(Pin(2) x Z/2^(p+1)) with parity constraints, and enumerate finite parts
// as nu^j for j in [0, 2^p) only, since (-u, nu^(j+2^p)) names the same
// element of the quotient.
class GroupSpec {
public:
  enum class Kind { Even, Odd };

  static GroupSpec even(std::vector<long> orders);
  static GroupSpec odd(int p);
  static GroupSpec trivial() { return even({}); }

  Kind kind() const { return kind_; }
  bool is_even() const { return kind_ == Kind::Even; }
  bool is_odd() const { return kind_ == Kind::Odd; }
  int p() const;  // Odd only

  // Orders of the character lattice the coefficient polynomials live on:
  // the factor orders for Even, {2^(p+1)} for Odd.
  const std::vector<long>& ambient_orders() const { return ambient_orders_; }
  size_t num_factors() const { return ambient_orders_.size(); }
  bool is_cyclic() const { return ambient_orders_.size() <= 1; }

  // Finite parts enumerated when building trace systems: all of A for Even,
  // the 2^p coset representatives for Odd.
  std::vector<std::vector<long>> element_representatives() const;
  // All characters of the ambient lattice (for Odd, both parities).
  std::vector<std::vector<long>> characters() const;
  long num_element_representatives() const;

  bool operator==(const GroupSpec& o) const {
    return kind_ == o.kind_ && ambient_orders_ == o.ambient_orders_;
  }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

  std::string str() const;

private:
  GroupSpec(Kind k, std::vector<long> ambient) : kind_(k), ambient_orders_(std::move(ambient)) {}
  Kind kind_;
  std::vector<long> ambient_orders_;
};

// Componentwise reduction mod the ambient orders.
std::vector<long> reduce_residues(const GroupSpec& g, std::vector<long> residues);

// chi(a) for a character exponent vector chi and element residue vector a:
// the product over factors of zeta_{order}^(chi_k * a_k). Exact root of unity.
Cyclotomic character_value(const GroupSpec& g, const std::vector<long>& chi,
                           const std::vector<long>& elem);

// An element of the rational group ring of the ambient character lattice:
// finite sum of characters with rational coefficients. These are the
// coefficient polynomials beta_i(zeta) / beta_i(xi) of the representation
// ring, and the s, t polynomials of the index.
class APoly {
public:
  APoly() = default;
  explicit APoly(const GroupSpec& g) : orders_(g.ambient_orders()) {}

  static APoly constant(const GroupSpec& g, const Rat& c);
  // c * (product of factor generators raised to exps).
  static APoly monomial(const GroupSpec& g, std::vector<long> exps, const Rat& c);

  const std::vector<long>& orders() const { return orders_; }
  const std::map<std::vector<long>, Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(const std::vector<long>& exps) const;
  void set_coeff(std::vector<long> exps, const Rat& c);
  void add_coeff(std::vector<long> exps, const Rat& c);

  APoly operator-() const;
  APoly operator+(const APoly& o) const;
  APoly operator-(const APoly& o) const;
  APoly operator*(const APoly& o) const;  // exponents add mod orders
  APoly scaled(const Rat& c) const;
  APoly& operator+=(const APoly& o) { return *this = *this + o; }

  bool operator==(const APoly& o) const { return orders_ == o.orders_ && coeffs_ == o.coeffs_; }
  bool operator!=(const APoly& o) const { return !(*this == o); }

  // Value at a group element (sum of coeff * chi(a)).
  Cyclotomic evaluate(const GroupSpec& g, const std::vector<long>& elem) const;
  // Value at the identity = sum of coefficients.
  Rat sum_coeffs() const;

  bool all_integer() const;

  // For the Odd ambient lattice: support lies in one parity class.
  // parity 0 = even exponents only, 1 = odd exponents only.
  bool has_parity(int parity) const;

  // Display like "2 + z1*z2 - 3*z1^2"; factor generators are named z1, z2,
  // ... (a single factor prints as z1).
  std::string str() const;

private:
  std::vector<long> orders_;
  std::map<std::vector<long>, Rat> coeffs_;
};

// An element of G up to the ambiguity that never matters for characters in
// scope: the Pin(2) part is the formal dense-torus generator phi, any element
// of the J component, or the torus identity. J carries no angle: every
// element e^{i theta} J has eigenvalues +-zeta_4 on h and trace -1 on 1~, so
// angles are unobservable by the characters of 1, 1~, h_i.
struct GroupElement {
  enum class Pin2 { GenericTorus, J, Identity };
  Pin2 pin2 = Pin2::Identity;
  std::vector<long> finite;  // residues in the ambient lattice, reduced

  static GroupElement torus(const GroupSpec& g, std::vector<long> finite = {});
  static GroupElement j(const GroupSpec& g, std::vector<long> finite = {});
  static GroupElement identity(const GroupSpec& g, std::vector<long> finite = {});

  bool operator==(const GroupElement& o) const {
    return pin2 == o.pin2 && finite == o.finite;
  }

  std::string str(const GroupSpec& g) const;
};

}  // namespace pin2k
