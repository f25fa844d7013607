#include "pin2k/trace_system.hpp"

namespace pin2k {

TraceSystem build_trace_system(const IndexData& idx, int h_cutoff) {
  if (h_cutoff < 1) throw Error("build_trace_system: h_cutoff must be >= 1");
  TraceSystem sys{idx, h_cutoff, {}};
  const GroupSpec& g = idx.group();
  for (auto pin2 : {GroupElement::Pin2::GenericTorus, GroupElement::Pin2::J}) {
    for (const auto& a : g.element_representatives()) {
      GroupElement el{pin2, a};
      FixedDims d = fixed_dims(idx, el);
      TraceEquation eq;
      eq.element = el;
      eq.dim_v = d.dim_v;
      eq.dim_w = d.dim_w;
      if (d.dim_v != d.dim_w) {
        eq.kind = TraceEquation::Kind::ZeroTrace;
      } else if (!d.v_has_fixed_line && !d.w_has_fixed_line) {
        eq.kind = TraceEquation::Kind::LambdaTrace;
        // Cannot pole: no line with nonzero multiplicity is fixed at el.
        eq.value = lambda_minus_one_trace(idx, el);
      } else {
        eq.kind = TraceEquation::Kind::Skipped;
        eq.skip_reason = "fixed dimensions equal (" + to_string(d.dim_v) +
                         ") with fixed lines present; the degree of the restricted map is unknown";
      }
      sys.equations.push_back(std::move(eq));
    }
  }
  return sys;
}

}  // namespace pin2k
