#pragma once

// Rod-by-rod propagation of the falling wave, composing the chain-model
// primitives (fall, collide) in sequence.  The simulator exists to check
// the closed forms against the mechanism they summarize, so it performs no
// algebraic shortcuts of its own.

#include <cstdint>
#include <optional>
#include <vector>

#include "domino/chain_model.hpp"

namespace domino {

/// Per-rod record of one propagation step.
struct RodTrace {
    std::int64_t index;          ///< 1-based rod number
    double omega_i;              ///< launch velocity (rad/s)
    double omega_f;              ///< velocity at the strike angle (rad/s)
    double omega_b;              ///< striker rebound after its collision (rad/s)
    double fall_time;            ///< upright-to-strike time T_k (s)
    double cumulative_time;      ///< sum of fall times through rod k (s)
    double instantaneous_speed;  ///< v_k = spacing / T_k (m/s)
};

struct SimulationResult {
    std::vector<RodTrace> rods;
    /// First rod whose speed is within the requested tolerance of the
    /// settled-wave speed; empty if the run ended first.
    std::optional<std::int64_t> converged_at;
    /// Speed of the last simulated rod.
    double limiting_speed_estimate;
};

/// Propagate the wave from launch velocity omega_1 > 0 for at most max_rods
/// rods (max_rods >= 1).  Convergence is measured against the closed-form
/// settled speed with relative tolerance tol > 0.  By default the run stops
/// at the convergence rod; pass stop_at_convergence = false to always
/// record max_rods rods (converged_at is still reported).  Requires
/// gravity > 0, as the settled wave does.
SimulationResult simulate_chain(const ChainGeometry& geometry, double omega_1,
                                std::int64_t max_rods, double tol,
                                bool stop_at_convergence = true);

/// Maximum relative residuals of a recorded trace against the closed forms
/// and the conservation laws.  All are round-off-sized for a faithful run.
struct TraceVerification {
    /// launch velocities vs. the closed-form recurrence solution
    double max_omega_residual;
    /// kinetic energy across each collision
    double max_energy_residual;
    /// angular momentum across each collision
    double max_momentum_residual;
    /// total energy across each fall segment
    double max_fall_energy_residual;
};

/// Re-derives every rod of the trace.  Throws std::invalid_argument on an
/// empty trace or when omega_1 is not the trace's own first launch velocity.
TraceVerification verify_trace(const SimulationResult& result,
                               const ChainGeometry& geometry, double omega_1);

}  // namespace domino
