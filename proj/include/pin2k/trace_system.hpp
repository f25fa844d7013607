#pragma once

#include <vector>

#include "pin2k/index_data.hpp"

namespace pin2k {

// One character-formula constraint tr_g(alpha) = d(f^g) tr_g(lambda_-1(...)).
// The kind is determined by the fixed dimensions of (V, W) at g:
//   - dims differ                      -> d(f^g) = 0, so tr_g(alpha) = 0;
//   - no fixed lines at all            -> d(f^g) = 1 and the right side is
//                                         the lambda_-1 trace;
//   - dims equal but fixed lines exist -> the degree of the restricted map is
//                                         unknown; the equation is skipped.
struct TraceEquation {
  enum class Kind { ZeroTrace, LambdaTrace, Skipped };
  GroupElement element;
  Kind kind = Kind::ZeroTrace;
  RationalFn value;         // LambdaTrace only
  std::string skip_reason;  // Skipped only
  Int dim_v, dim_w;         // signed fixed dimensions, recorded for reports
};

struct TraceSystem {
  IndexData index;
  int h_cutoff = 8;
  std::vector<TraceEquation> equations;
};

// Builds one equation per element of {phi*a} u {J*a}, a running over the
// finite-part representatives. h_cutoff bounds the h_i support allowed in the
// unknown alpha (the phi-family equations force every alpha_i to zero, so the
// cutoff never changes the solution; it exists to make the unknown finite).
TraceSystem build_trace_system(const IndexData& idx, int h_cutoff = 8);

}  // namespace pin2k
