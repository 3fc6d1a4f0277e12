#pragma once

// Propagation speed of the settled falling wave.
//
// Once the launch velocity has relaxed to its fixed point Omega, every rod
// takes the same time T to fall from upright to the strike angle and the
// wave advances one spacing d per fall, so v = d / T.  T reduces to a
// difference of elliptic integrals (see elliptic.hpp); pulling out the
// gravitational scale leaves
//
//   v = sqrt(g l) * G(d / l)
//
// with G a dimensionless function of the spacing ratio alone.

#include "domino/chain_model.hpp"

namespace domino {

/// Settled-wave solution for one geometry.
struct WaveSolution {
    double omega_limit;  ///< fixed-point launch velocity Omega (rad/s)
    double k;            ///< elliptic modulus of the limiting fall integral
    double fall_time;    ///< upright-to-strike time T at the fixed point (s)
    double speed;        ///< v = spacing / fall_time (m/s)
    double G;            ///< v / sqrt(g l)
};

/// Time for one rod to fall from upright (launch velocity omega_i > 0) to
/// the strike angle.  Gravity may be zero, in which case the rod coasts and
/// T = beta1 / omega_i exactly.
double fall_time(double omega_i, const ChainGeometry& geometry);

/// Full settled-wave solution.  Requires gravity > 0 (without gravity the
/// recurrence decays to rest and no settled wave exists).
WaveSolution limiting_solution(const ChainGeometry& geometry);

/// Elliptic modulus k(x) of the limiting fall integral as a function of the
/// spacing ratio alone.  Requires 0 < x < 1.
double wave_modulus(double spacing_ratio);

/// Dimensionless speed factor G(x), 0 < x < 1.  Evaluated through the
/// complementary-parameter elliptic kernels, so it stays accurate into both
/// asymptotic regimes (x -> 0 and x -> 1).
double scaling_G(double spacing_ratio);

/// Close-packing asymptote G(x) ~ 1 / x, valid as x -> 0.
double scaling_G_close(double spacing_ratio);

/// Wide-spacing asymptote
///
///   G(x) ~ -1 / [ ln(1 + sqrt(2)) + ln(1 - x) ],
///
/// valid as x -> 1.  Rejects x <= 2 - sqrt(2), where the denominator is
/// nonnegative and the asymptote meaningless.
double scaling_G_wide(double spacing_ratio);

}  // namespace domino
