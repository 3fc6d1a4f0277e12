#include "domino/chain_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "domino/wave_speed.hpp"

namespace domino {

SimulationResult simulate_chain(const ChainGeometry& geometry, double omega_1,
                                std::int64_t max_rods, double tol,
                                bool stop_at_convergence) {
    const WaveSolution closed = limiting_solution(geometry);  // validates, needs g > 0
    if (!(omega_1 > 0.0)) {
        throw std::invalid_argument("simulate_chain: omega_1 must be > 0");
    }
    if (max_rods < 1) {
        throw std::invalid_argument("simulate_chain: max_rods must be >= 1");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("simulate_chain: tol must be > 0");
    }

    const CollisionAngle angle = collision_angle(geometry);

    SimulationResult result;
    result.rods.reserve(static_cast<std::size_t>(std::min<std::int64_t>(max_rods, 1024)));

    double omega = omega_1;
    double elapsed = 0.0;
    for (std::int64_t k = 1; k <= max_rods; ++k) {
        const double t_fall = fall_time(omega, geometry);
        const double omega_f = fall_exit_velocity(omega, geometry);
        const CollisionOutcome outcome = collide(omega_f, angle);
        elapsed += t_fall;

        RodTrace trace;
        trace.index = k;
        trace.omega_i = omega;
        trace.omega_f = omega_f;
        trace.omega_b = outcome.omega_b;
        trace.fall_time = t_fall;
        trace.cumulative_time = elapsed;
        trace.instantaneous_speed = geometry.spacing / t_fall;
        result.rods.push_back(trace);

        if (!result.converged_at &&
            std::abs(trace.instantaneous_speed - closed.speed) <= tol * closed.speed) {
            result.converged_at = k;
        }
        if (result.converged_at && stop_at_convergence) break;

        omega = outcome.omega_i_next;
    }
    result.limiting_speed_estimate = result.rods.back().instantaneous_speed;
    return result;
}

TraceVerification verify_trace(const SimulationResult& result,
                               const ChainGeometry& geometry, double omega_1) {
    geometry.validate();
    if (result.rods.empty()) {
        throw std::invalid_argument("verify_trace: trace contains no rods");
    }
    if (result.rods.front().omega_i != omega_1) {
        throw std::invalid_argument(
            "verify_trace: omega_1 does not match the first rod of the trace");
    }

    const CollisionAngle angle = collision_angle(geometry);
    const double u = std::cos(angle.beta1) * std::cos(angle.beta1);
    const double inertia = geometry.moment_of_inertia();
    const double mgl = geometry.mass * geometry.gravity * geometry.rod_length;

    TraceVerification v{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < result.rods.size(); ++i) {
        const RodTrace& rod = result.rods[i];

        const double closed = omega_i_at(static_cast<std::int64_t>(i) + 1, omega_1, geometry);
        v.max_omega_residual =
            std::max(v.max_omega_residual, std::abs(rod.omega_i - closed) / closed);

        // Fall segment: E = I omega^2 / 2 + m g l cos(theta), upright vs strike.
        const double e_top = 0.5 * inertia * rod.omega_i * rod.omega_i + mgl;
        const double e_strike =
            0.5 * inertia * rod.omega_f * rod.omega_f + mgl * std::cos(angle.beta1);
        v.max_fall_energy_residual =
            std::max(v.max_fall_energy_residual, std::abs(e_top - e_strike) / e_strike);

        // Collision laws need the struck rod's launch velocity, recorded as
        // the next rod's omega_i; the last collision has no recorded successor.
        if (i + 1 < result.rods.size()) {
            const double omega_next = result.rods[i + 1].omega_i;
            const double ke_in = rod.omega_f * rod.omega_f;
            const double ke_out = rod.omega_b * rod.omega_b + omega_next * omega_next;
            v.max_energy_residual =
                std::max(v.max_energy_residual, std::abs(ke_in - ke_out) / ke_in);

            const double p_in = u * rod.omega_f;
            const double p_out = u * rod.omega_b + omega_next;
            v.max_momentum_residual =
                std::max(v.max_momentum_residual, std::abs(p_in - p_out) / p_in);
        }
    }
    return v;
}

}  // namespace domino
