#pragma once

namespace orthoentropy::defaults {

// One tolerance regime, stated once. Criterion equivalence tests rely on
// these being shared across modules.
inline constexpr double kUnitaryTol = 1e-10;    // ||u*u - I||_F acceptance
inline constexpr double kHermitianTol = 1e-10;  // ||a - a*||_max acceptance
inline constexpr double kZeroTol = 1e-12;       // eigenvalue clamp below this
inline constexpr double kCriterionTol = 1e-8;   // default criterion verdict cut
inline constexpr double kLoadTol = 1e-8;        // looser: survives file rounding
inline constexpr double kPatternTol = 1e-12;    // off-block mass rejection cut
inline constexpr double kGradEpsFloor = 1e-12;  // spectral floor inside log

}  // namespace orthoentropy::defaults
