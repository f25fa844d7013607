#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pin2k/numeric.hpp"

namespace pin2k {

// Diagonal block: one basis vector per entry, self-pairing +-1.
struct DiagBlock {
  std::vector<int> entries;  // each +1 or -1
  bool operator==(const DiagBlock& o) const { return entries == o.entries; }
};

// count hyperbolic planes, each a basis pair (e, f) with pairing
// [[0,1],[1,0]].
struct HypBlock {
  int count = 0;
  bool operator==(const HypBlock& o) const { return count == o.count; }
};

using FormBlock = std::variant<DiagBlock, HypBlock>;

// Block-diagonal unimodular symmetric form: direct sum of <+-1> diagonal
// entries and hyperbolic planes. Sufficient for every worked example; an E8
// block would be the natural extension point if indefinite even forms beyond
// hyperbolic sums are ever needed.
class IntersectionForm {
public:
  IntersectionForm() = default;
  explicit IntersectionForm(std::vector<FormBlock> blocks);

  static IntersectionForm diagonal(std::vector<int> entries);
  static IntersectionForm hyperbolic(int count);
  IntersectionForm direct_sum(const IntersectionForm& o) const;

  const std::vector<FormBlock>& blocks() const { return blocks_; }
  long rank() const;
  long signature() const;
  long b2plus() const;
  long b2minus() const;

  // Q(x, y), bilinear pairing of two coordinate vectors.
  Int pairing(const std::vector<Int>& x, const std::vector<Int>& y) const;
  // Q(x, x).
  Int square(const std::vector<Int>& x) const;

  bool operator==(const IntersectionForm& o) const { return blocks_ == o.blocks_; }

  std::string str() const;

private:
  std::vector<FormBlock> blocks_;
};

// Quadratic-form evaluation [Sigma]^2 of a class in the form's basis.
Int class_square(const IntersectionForm& form, const std::vector<Int>& coords);

// True iff coords . y = y . y (mod 2) for every basis vector y, i.e. coords
// reduces mod 2 to the characteristic class w_2.
bool is_characteristic_mod2(const IntersectionForm& form, const std::vector<Int>& coords);

// Closed oriented 4-manifold with b1 = 0, described by its intersection form.
struct ManifoldSpec {
  std::string name;
  IntersectionForm form;

  long b2() const { return form.rank(); }
  long b2plus() const { return form.b2plus(); }
  long b2minus() const { return form.b2minus(); }
  long signature() const { return form.signature(); }
  long euler() const { return 2 + form.rank(); }  // b1 = 0

  bool operator==(const ManifoldSpec& o) const { return name == o.name && form == o.form; }
};

struct SurfaceClass {
  std::vector<Int> coords;

  Int square(const IntersectionForm& form) const { return class_square(form, coords); }
  Int divisibility() const;  // gcd of coordinates (0 for the zero class)

  bool operator==(const SurfaceClass& o) const { return coords == o.coords; }
};

}  // namespace pin2k
