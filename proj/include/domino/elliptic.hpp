#pragma once

// Incomplete and complete elliptic integrals of the first kind, plus the
// specific pendulum-style time integral the chain model reduces to.
//
// Conventions (modulus form):
//
//   F(phi, k) = integral_0^phi dt / sqrt(1 - k^2 sin^2 t),  K(k) = F(pi/2, k)
//
// Two evaluation kernels are provided.  The modulus-facing functions
// (incomplete_F, complete_K) validate against the near-singular policy:
// the complete integral diverges as k -> 1, so moduli above 1 - 1e-12 are
// rejected.  The *_from_complement kernels accept the complementary
// parameter k'^2 = 1 - k^2 directly, so callers that can form k'^2 without
// cancellation stay accurate arbitrarily close to the singularity.  All
// kernels are deterministic (fixed iteration schemes, no randomness).

#include <cstdint>

namespace domino {

/// Arguments of the incomplete integral F(phi, k).
struct EllipticArgs {
    double phi;  ///< amplitude, 0 <= phi <= pi/2
    double k;    ///< modulus, 0 <= k < 1
};

/// Arguments of the fall-time reduction I(theta0) = integral_0^theta0
/// d(theta) / sqrt(a - c cos(theta)) with a > c > 0.
struct FallIntegralArgs {
    double theta0;  ///< upper limit, 0 <= theta0 <= pi/2
    double a;       ///< constant term (rad^2/s^2 scale)
    double c;       ///< cosine coefficient, 0 < c < a
};

/// F(phi, k) via Carlson's R_F.  Rejects phi outside [0, pi/2] and k
/// outside [0, 1).
double incomplete_F(const EllipticArgs& args);

/// K(k) via the arithmetic-geometric mean.  Rejects k < 0 and, per the
/// near-singular policy, k > 1 - 1e-12.
double complete_K(double k);

/// K given the complementary parameter k'^2 = 1 - k^2 = (1-k)(1+k).
/// Requires 0 < k_prime_sq <= 1; no near-singular cap (the caller owns the
/// cancellation-free formation of k'^2).
double complete_K_from_complement(double k_prime_sq);

/// F(phi, k) given the complementary parameter; same domain rules as
/// complete_K_from_complement plus phi in [0, pi/2].
double incomplete_F_from_complement(double phi, double k_prime_sq);

/// Logarithmic approximation K(k) ~ ln(4 / k') for k' -> 0.  Requires
/// k_prime > 0.
double complete_K_log_asymptotic(double k_prime);

/// Closed form of the fall-time reduction:
///
///   I(theta0) = (2 / sqrt(a + c)) * [ K(k) - F((pi - theta0)/2, k) ],
///   k^2 = 2c / (a + c).
///
/// Accepts theta0 = 0 (empty integral).  Rejects c <= 0, c >= a, and
/// theta0 outside [0, pi/2].
double fall_time_integral(const FallIntegralArgs& args);

/// The same integral evaluated by adaptive quadrature; the independent
/// cross-check for fall_time_integral.  Same domain rules.  Throws
/// NumericalError if the quadrature cannot certify its tolerance.
double fall_time_quadrature(const FallIntegralArgs& args);

}  // namespace domino
