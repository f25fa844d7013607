#include "pin2k/form.hpp"

#include <numeric>
#include <sstream>

namespace pin2k {

IntersectionForm::IntersectionForm(std::vector<FormBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (const auto* d = std::get_if<DiagBlock>(&b)) {
      for (int e : d->entries)
        if (e != 1 && e != -1) throw Error("diagonal entries must be +1 or -1");
    } else if (std::get<HypBlock>(b).count < 0) {
      throw Error("hyperbolic block count must be >= 0");
    }
  }
}

IntersectionForm IntersectionForm::diagonal(std::vector<int> entries) {
  return IntersectionForm({DiagBlock{std::move(entries)}});
}

IntersectionForm IntersectionForm::hyperbolic(int count) {
  return IntersectionForm({HypBlock{count}});
}

IntersectionForm IntersectionForm::direct_sum(const IntersectionForm& o) const {
  std::vector<FormBlock> blocks = blocks_;
  blocks.insert(blocks.end(), o.blocks_.begin(), o.blocks_.end());
  return IntersectionForm(std::move(blocks));
}

long IntersectionForm::rank() const {
  long r = 0;
  for (const auto& b : blocks_) {
    if (const auto* d = std::get_if<DiagBlock>(&b))
      r += static_cast<long>(d->entries.size());
    else
      r += 2L * std::get<HypBlock>(b).count;
  }
  return r;
}

long IntersectionForm::signature() const { return b2plus() - b2minus(); }

long IntersectionForm::b2plus() const {
  long n = 0;
  for (const auto& b : blocks_) {
    if (const auto* d = std::get_if<DiagBlock>(&b)) {
      for (int e : d->entries) n += e > 0;
    } else {
      n += std::get<HypBlock>(b).count;  // H has eigenvalues +1, -1
    }
  }
  return n;
}

long IntersectionForm::b2minus() const {
  long n = 0;
  for (const auto& b : blocks_) {
    if (const auto* d = std::get_if<DiagBlock>(&b)) {
      for (int e : d->entries) n += e < 0;
    } else {
      n += std::get<HypBlock>(b).count;
    }
  }
  return n;
}

Int IntersectionForm::pairing(const std::vector<Int>& x, const std::vector<Int>& y) const {
  if (x.size() != static_cast<size_t>(rank()) || y.size() != static_cast<size_t>(rank()))
    throw DimensionMismatch();
  Int sum = 0;
  size_t i = 0;
  for (const auto& b : blocks_) {
    if (const auto* d = std::get_if<DiagBlock>(&b)) {
      for (int e : d->entries) {
        sum += Int(e) * x[i] * y[i];
        ++i;
      }
    } else {
      int count = std::get<HypBlock>(b).count;
      for (int c = 0; c < count; ++c) {
        sum += x[i] * y[i + 1] + x[i + 1] * y[i];
        i += 2;
      }
    }
  }
  return sum;
}

Int IntersectionForm::square(const std::vector<Int>& x) const { return pairing(x, x); }

std::string IntersectionForm::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& b : blocks_) {
    if (!first) out << " (+) ";
    first = false;
    if (const auto* d = std::get_if<DiagBlock>(&b)) {
      out << "diag(";
      for (size_t i = 0; i < d->entries.size(); ++i)
        out << (i ? "," : "") << (d->entries[i] > 0 ? "+1" : "-1");
      out << ")";
    } else {
      int n = std::get<HypBlock>(b).count;
      out << n << "H";
    }
  }
  if (first) out << "0";
  return out.str();
}

Int class_square(const IntersectionForm& form, const std::vector<Int>& coords) {
  return form.square(coords);
}

bool is_characteristic_mod2(const IntersectionForm& form, const std::vector<Int>& coords) {
  long r = form.rank();
  if (coords.size() != static_cast<size_t>(r)) throw DimensionMismatch();
  // coords . e_i = e_i . e_i mod 2 for every basis vector e_i.
  std::vector<Int> basis(static_cast<size_t>(r), Int(0));
  for (long i = 0; i < r; ++i) {
    basis[static_cast<size_t>(i)] = 1;
    Int lhs = form.pairing(coords, basis);
    Int rhs = form.pairing(basis, basis);
    basis[static_cast<size_t>(i)] = 0;
    if ((lhs - rhs) % 2 != 0) return false;
  }
  return true;
}

Int SurfaceClass::divisibility() const {
  Int g = 0;
  for (const Int& c : coords) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

}  // namespace pin2k
