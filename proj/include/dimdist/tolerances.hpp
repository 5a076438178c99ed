#ifndef DIMDIST_TOLERANCES_HPP
#define DIMDIST_TOLERANCES_HPP

namespace dimdist::tol {

// Every quantitative window used by the experiments and the acceptance
// checks lives here, so each pass/fail cites one shared constant. The
// dimension tolerances absorb the box-counting proxy gap on the chosen
// test sets; the multiplicative windows absorb packing constants.

inline constexpr double kDimension = 0.15;         // dimension-proxy comparisons
inline constexpr double kExceptionalDim = 0.2;     // exceptional-set surveys
inline constexpr double kCalibrationPlane = 0.10;  // uniform-square calibration
inline constexpr double kCalibrationCantor = 0.05; // middle-thirds calibration
inline constexpr double kFrostmanC = 4.0;          // audited Frostman constant
inline constexpr double kLevelNormWindow = 8.0;    // critical per-level L^p ratio
inline constexpr double kRegularityWindow = 4.0;   // N(r) r^s max/min window
inline constexpr double kGrushinRatio = 10.0;      // quotient-vs-core comparability
inline constexpr double kCarpetRegularity = 32.0;  // measure(B)/r^2 window
inline constexpr double kExact = 1e-12;            // closed-form/algebraic checks

}  // namespace dimdist::tol

#endif
