#pragma once

namespace lfsim {

// Central numeric tolerances. Arithmetic checks (norms, traces, probability
// sums) use the tighter value; structural checks (unitarity, Kraus
// completeness, positivity) use the looser one.
inline constexpr double kTolArithmetic = 1e-12;
inline constexpr double kTolStructural = 1e-10;

// Default tolerance for the LP-based polytope decisions.
inline constexpr double kTolLP = 1e-9;

}  // namespace lfsim
