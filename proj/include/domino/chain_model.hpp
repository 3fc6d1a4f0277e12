#pragma once

// Idealized domino chain: identical massless rods of length l, hinged to
// the ground at spacing d, each carrying a point mass m at its tip.  A rod
// released past vertical falls under gravity until its tip strikes the next
// rod, which is tilted by the strike angle beta1 = arcsin(d / l) at the
// moment of impact.  The collision is instantaneous and elastic; afterwards
// the striking rod rebounds and the struck rod starts falling, and the
// pattern repeats down the chain.
//
// Because every rod has moment of inertia I = m l^2 about its hinge, the
// mass cancels from the collision laws and from every published quantity;
// it is kept in ChainGeometry only so energy bookkeeping can be written in
// physical units.

#include <cstdint>

namespace domino {

/// Static description of the chain.  All lengths in meters, gravity in
/// m/s^2, mass in kg.
struct ChainGeometry {
    double rod_length;   ///< l > 0
    double spacing;      ///< d, hinge-to-hinge, 0 < d < l
    double gravity;      ///< g >= 0
    double mass = 1.0;   ///< m > 0; cancels from all observables

    /// Throws std::invalid_argument naming the violated bound.
    void validate() const;

    double spacing_ratio() const { return spacing / rod_length; }
    double moment_of_inertia() const { return mass * rod_length * rod_length; }
};

/// Tilt of the struck rod at the moment of impact, beta1 = arcsin(d / l).
struct CollisionAngle {
    double beta1;  ///< radians, 0 < beta1 < pi/2
};

/// Velocity-transfer factors of the elastic collision.  With u = cos^2(beta1):
///
///   f_plus  = 2u / (1 + u^2)   (struck rod,  0 < f_plus < 1)
///   f_minus = 2u / (u^2 - 1)   (striker rebound, f_minus < 0)
struct CollisionFactors {
    double f_plus;
    double f_minus;
};

/// Angular velocities immediately after a collision (rad/s).
struct CollisionOutcome {
    double omega_b;       ///< striker rebound, <= 0
    double omega_i_next;  ///< struck rod launch, >= 0
};

/// Mixed arithmetic-geometric progression a_{k+1} = r a_k + b.
struct MixedProgressionParams {
    double a1;        ///< first term
    double r;         ///< ratio, r != 1
    double b;         ///< increment
    std::int64_t n;   ///< target index, n >= 1
};

/// Strike angle for a geometry.  Throws on invalid geometry.
CollisionAngle collision_angle(const ChainGeometry& geometry);

/// Transfer factors for a strike angle in (0, pi/2), exclusive.
CollisionFactors collision_factors(const CollisionAngle& angle);

/// Elastic collision: striker arrives with omega_f >= 0, leaves with
/// omega_b = f_plus / f_minus * omega_f, struck rod starts at
/// omega_i_next = f_plus * omega_f.  Conserves kinetic energy and angular
/// momentum of the pair exactly (in exact arithmetic).
CollisionOutcome collide(double omega_f, const CollisionAngle& angle);

/// Angular velocity of a rod when its tip reaches the strike angle, having
/// started from upright with omega_i >= 0:
///
///   omega_f = sqrt(omega_i^2 + (2 g / l) (1 - cos beta1))
double fall_exit_velocity(double omega_i, const ChainGeometry& geometry);

/// One step of the squared-velocity recurrence
///
///   omega_{k+1}^2 = f_plus^2 omega_k^2 + b,
///   b = (2 g / l) f_plus^2 (1 - cos beta1),
///
/// equivalent to fall_exit_velocity followed by collide.
double recurrence_step(double omega_i_sq, const ChainGeometry& geometry);

/// Closed form of the mixed progression at index n:
///
///   a_n = r^{n-1} a_1 + b (1 - r^{n-1}) / (1 - r)
double mixed_progression(const MixedProgressionParams& params);

/// Launch velocity of rod k (1-based) given the launch velocity of rod 1,
/// by the closed form of the recurrence.  Requires k >= 1, omega_1 > 0.
double omega_i_at(std::int64_t k, double omega_1, const ChainGeometry& geometry);

/// Fixed point of the recurrence: the limiting launch velocity
///
///   Omega = sqrt( (2 g / l) (1 - cos beta1) f_plus^2 / (1 - f_plus^2) )
///
/// Zero when gravity is zero.
double limiting_omega(const ChainGeometry& geometry);

}  // namespace domino
