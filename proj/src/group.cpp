#include "pin2k/group.hpp"

#include <sstream>

namespace pin2k {

namespace {

long bit_length(long n) {
  long b = 0;
  while ((1L << b) < n) ++b;
  return b;
}

}  // namespace

GroupSpec GroupSpec::even(std::vector<long> orders) {
  for (long o : orders) {
    if (o < 2 || (o & (o - 1)) != 0)
      throw Error("GroupSpec: factor orders must be powers of two >= 2, got " + std::to_string(o));
  }
  return GroupSpec(Kind::Even, std::move(orders));
}

GroupSpec GroupSpec::odd(int p) {
  if (p < 1) throw Error("GroupSpec: odd type requires p >= 1");
  return GroupSpec(Kind::Odd, {1L << (p + 1)});
}

int GroupSpec::p() const {
  if (!is_odd()) throw Error("GroupSpec::p: not an odd-type group");
  return static_cast<int>(bit_length(ambient_orders_[0])) - 1;
}

std::vector<std::vector<long>> GroupSpec::characters() const {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(ambient_orders_.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (++cur[i] < ambient_orders_[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  return out;
}

std::vector<std::vector<long>> GroupSpec::element_representatives() const {
  if (is_even()) return characters();  // same index set: all of A
  long reps = ambient_orders_[0] / 2;  // 2^p of the 2^(p+1)
  std::vector<std::vector<long>> out;
  out.reserve(static_cast<size_t>(reps));
  for (long j = 0; j < reps; ++j) out.push_back({j});
  return out;
}

long GroupSpec::num_element_representatives() const {
  if (is_odd()) return ambient_orders_[0] / 2;
  long n = 1;
  for (long o : ambient_orders_) n *= o;
  return n;
}

std::string GroupSpec::str() const {
  std::ostringstream out;
  if (is_odd()) {
    out << "G_odd(p=" << p() << ")";
  } else {
    out << "G_ev(A=";
    if (ambient_orders_.empty()) out << "1";
    for (size_t i = 0; i < ambient_orders_.size(); ++i)
      out << (i ? "x" : "") << "Z/" << ambient_orders_[i];
    out << ")";
  }
  return out.str();
}

std::vector<long> reduce_residues(const GroupSpec& g, std::vector<long> residues) {
  const auto& orders = g.ambient_orders();
  if (residues.size() != orders.size())
    throw GroupMismatch("residue vector length " + std::to_string(residues.size()) +
                        " does not match " + std::to_string(orders.size()) + " factors");
  for (size_t i = 0; i < residues.size(); ++i) {
    residues[i] %= orders[i];
    if (residues[i] < 0) residues[i] += orders[i];
  }
  return residues;
}

Cyclotomic character_value(const GroupSpec& g, const std::vector<long>& chi,
                           const std::vector<long>& elem) {
  const auto& orders = g.ambient_orders();
  if (chi.size() != orders.size() || elem.size() != orders.size())
    throw GroupMismatch("character/element arity mismatch");
  Cyclotomic v(Rat(1));
  for (size_t i = 0; i < orders.size(); ++i) {
    int level = static_cast<int>(bit_length(orders[i]));
    v *= Cyclotomic::root_of_unity(level, chi[i] * elem[i]);
  }
  return v;
}

APoly APoly::constant(const GroupSpec& g, const Rat& c) {
  APoly p(g);
  p.set_coeff(std::vector<long>(g.num_factors(), 0), c);
  return p;
}

APoly APoly::monomial(const GroupSpec& g, std::vector<long> exps, const Rat& c) {
  APoly p(g);
  p.set_coeff(reduce_residues(g, std::move(exps)), c);
  return p;
}

Rat APoly::coeff(const std::vector<long>& exps) const {
  auto it = coeffs_.find(exps);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void APoly::set_coeff(std::vector<long> exps, const Rat& c) {
  if (exps.size() != orders_.size()) throw GroupMismatch("APoly exponent arity mismatch");
  if (c == 0)
    coeffs_.erase(exps);
  else
    coeffs_[std::move(exps)] = c;
}

void APoly::add_coeff(std::vector<long> exps, const Rat& c) {
  set_coeff(exps, coeff(exps) + c);
}

APoly APoly::operator-() const {
  APoly r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

APoly APoly::operator+(const APoly& o) const {
  if (orders_ != o.orders_) throw GroupMismatch("APoly group mismatch");
  APoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, c);
  return r;
}

APoly APoly::operator-(const APoly& o) const { return *this + (-o); }

APoly APoly::operator*(const APoly& o) const {
  if (orders_ != o.orders_) throw GroupMismatch("APoly group mismatch");
  APoly r;
  r.orders_ = orders_;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      std::vector<long> e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = (e1[i] + e2[i]) % orders_[i];
      r.add_coeff(std::move(e), c1 * c2);
    }
  }
  return r;
}

APoly APoly::scaled(const Rat& c) const {
  APoly r;
  r.orders_ = orders_;
  if (c == 0) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
  return r;
}

Cyclotomic APoly::evaluate(const GroupSpec& g, const std::vector<long>& elem) const {
  if (g.ambient_orders() != orders_) throw GroupMismatch("APoly evaluated against foreign group");
  Cyclotomic sum;
  for (const auto& [chi, c] : coeffs_) sum += Cyclotomic(c) * character_value(g, chi, elem);
  return sum;
}

Rat APoly::sum_coeffs() const {
  Rat s(0);
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool APoly::all_integer() const {
  for (const auto& [e, c] : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool APoly::has_parity(int parity) const {
  for (const auto& [e, c] : coeffs_)
    if ((e[0] & 1) != parity) return false;
  return true;
}

std::string APoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << mono;
    }
  }
  return out.str();
}

GroupElement GroupElement::torus(const GroupSpec& g, std::vector<long> finite) {
  if (finite.empty()) finite.assign(g.num_factors(), 0);
  return {Pin2::GenericTorus, reduce_residues(g, std::move(finite))};
}

GroupElement GroupElement::j(const GroupSpec& g, std::vector<long> finite) {
  if (finite.empty()) finite.assign(g.num_factors(), 0);
  return {Pin2::J, reduce_residues(g, std::move(finite))};
}

GroupElement GroupElement::identity(const GroupSpec& g, std::vector<long> finite) {
  if (finite.empty()) finite.assign(g.num_factors(), 0);
  return {Pin2::Identity, reduce_residues(g, std::move(finite))};
}

std::string GroupElement::str(const GroupSpec& g) const {
  std::string pin;
  switch (pin2) {
    case Pin2::GenericTorus: pin = "phi"; break;
    case Pin2::J: pin = "J"; break;
    case Pin2::Identity: pin = "1"; break;
  }
  std::string gen = g.is_odd() ? "nu" : "g";
  std::string fin;
  for (size_t i = 0; i < finite.size(); ++i) {
    if (finite[i] == 0) continue;
    fin += "*" + gen + (finite.size() > 1 ? std::to_string(i + 1) : "");
    if (finite[i] != 1) fin += "^" + std::to_string(finite[i]);
  }
  if (pin == "1" && !fin.empty()) return fin.substr(1);
  return pin + fin;
}

}  // namespace pin2k
