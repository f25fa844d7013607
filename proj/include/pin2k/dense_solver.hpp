#pragma once

#include "pin2k/degree.hpp"

namespace pin2k {

// Verification-only solver: assembles the trace equations as a dense linear
// system over Q(zeta) -- one row per (equation, phi-exponent) pair, one
// column per unknown basis coefficient of alpha -- and runs Gaussian
// elimination. It shares no code with the DFT route in solve_degree and
// exists to cross-check it (and to power the self-test table).
DegreeSolution dense_solve_degree(const TraceSystem& sys);

}  // namespace pin2k
