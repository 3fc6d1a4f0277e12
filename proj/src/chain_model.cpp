#include "domino/chain_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "domino/detail/coefficients.hpp"

namespace domino {

namespace detail {

SpacingCoefficients spacing_coefficients(double ratio) {
    if (!(ratio > 0.0) || !(ratio < 1.0)) {
        throw std::invalid_argument("chain geometry: spacing ratio d/l must lie in (0, 1)");
    }
    SpacingCoefficients sc;
    sc.ratio = ratio;
    sc.beta1 = std::asin(ratio);

    const double x2 = ratio * ratio;
    const double u = (1.0 - ratio) * (1.0 + ratio);
    sc.cos_sq_beta1 = u;
    sc.cos_beta1 = std::sqrt(u);
    sc.one_minus_cos_beta1 = x2 / (1.0 + sc.cos_beta1);

    const double up1 = 1.0 + u;
    const double usq1 = 1.0 + u * u;
    sc.f_plus = 2.0 * u / usq1;
    sc.f_plus_sq = sc.f_plus * sc.f_plus;
    const double t = x2 * up1 / usq1;
    sc.one_minus_f_plus_sq = t * t;
    sc.f_minus = -2.0 * u / (x2 * up1);

    const double a = sc.one_minus_cos_beta1 * sc.f_plus_sq;
    const double b = 2.0 * sc.one_minus_f_plus_sq;
    sc.modulus_sq = b / (a + b);
    sc.modulus_comp_sq = a / (a + b);
    sc.modulus = std::sqrt(sc.modulus_sq);
    return sc;
}

ChainCoefficients chain_coefficients(const ChainGeometry& geometry) {
    geometry.validate();
    ChainCoefficients cc;
    cc.spacing = spacing_coefficients(geometry.spacing_ratio());
    cc.two_g_over_l = 2.0 * geometry.gravity / geometry.rod_length;
    cc.b_increment = cc.two_g_over_l * cc.spacing.f_plus_sq * cc.spacing.one_minus_cos_beta1;
    cc.omega_limit_sq = cc.b_increment / cc.spacing.one_minus_f_plus_sq;
    return cc;
}

}  // namespace detail

void ChainGeometry::validate() const {
    if (!(rod_length > 0.0) || !std::isfinite(rod_length)) {
        throw std::invalid_argument("chain geometry: rod_length must be positive and finite");
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("chain geometry: mass must be positive and finite");
    }
    if (!(gravity >= 0.0) || !std::isfinite(gravity)) {
        throw std::invalid_argument("chain geometry: gravity must be >= 0 and finite");
    }
    if (!(spacing > 0.0) || !(spacing < rod_length)) {
        throw std::invalid_argument("chain geometry: spacing must satisfy 0 < spacing < rod_length");
    }
}

CollisionAngle collision_angle(const ChainGeometry& geometry) {
    geometry.validate();
    return {detail::spacing_coefficients(geometry.spacing_ratio()).beta1};
}

CollisionFactors collision_factors(const CollisionAngle& angle) {
    if (!(angle.beta1 > 0.0) || !(angle.beta1 < std::numbers::pi / 2.0)) {
        throw std::invalid_argument("collision: beta1 must lie strictly inside (0, pi/2)");
    }
    const double c = std::cos(angle.beta1);
    const double s = std::sin(angle.beta1);
    const double u = c * c;
    // f_minus = 2u / (u^2 - 1) with u^2 - 1 factored through sin^2(beta1)
    // to avoid the 1 - u^2 cancellation at small angles.
    return {2.0 * u / (1.0 + u * u), -2.0 * u / (s * s * (1.0 + u))};
}

CollisionOutcome collide(double omega_f, const CollisionAngle& angle) {
    if (!(omega_f >= 0.0)) {
        throw std::invalid_argument("collide: striker velocity omega_f must be >= 0");
    }
    const CollisionFactors f = collision_factors(angle);
    const double omega_i_next = f.f_plus * omega_f;
    return {omega_i_next / f.f_minus, omega_i_next};
}

double fall_exit_velocity(double omega_i, const ChainGeometry& geometry) {
    if (!(omega_i >= 0.0)) {
        throw std::invalid_argument("fall_exit_velocity: omega_i must be >= 0");
    }
    const auto cc = detail::chain_coefficients(geometry);
    return std::sqrt(omega_i * omega_i + cc.two_g_over_l * cc.spacing.one_minus_cos_beta1);
}

double recurrence_step(double omega_i_sq, const ChainGeometry& geometry) {
    if (!(omega_i_sq >= 0.0)) {
        throw std::invalid_argument("recurrence_step: omega_i_sq must be >= 0");
    }
    const auto cc = detail::chain_coefficients(geometry);
    return cc.spacing.f_plus_sq * omega_i_sq + cc.b_increment;
}

double mixed_progression(const MixedProgressionParams& params) {
    if (params.n < 1) {
        throw std::invalid_argument("mixed progression: index n must be >= 1");
    }
    if (params.r == 1.0) {
        throw std::domain_error("mixed progression: ratio r = 1 makes the closed form singular");
    }
    const double rn = std::pow(params.r, static_cast<double>(params.n - 1));
    return rn * params.a1 + params.b * (1.0 - rn) / (1.0 - params.r);
}

double omega_i_at(std::int64_t k, double omega_1, const ChainGeometry& geometry) {
    if (k < 1) {
        throw std::invalid_argument("omega_i_at: rod index k must be >= 1");
    }
    if (!(omega_1 > 0.0)) {
        throw std::invalid_argument("omega_i_at: omega_1 must be > 0");
    }
    const auto cc = detail::chain_coefficients(geometry);
    const double q = std::pow(cc.spacing.f_plus_sq, static_cast<double>(k - 1));
    const double omega_sq =
        q * omega_1 * omega_1 + cc.b_increment * (1.0 - q) / cc.spacing.one_minus_f_plus_sq;
    return std::sqrt(omega_sq);
}

double limiting_omega(const ChainGeometry& geometry) {
    return std::sqrt(detail::chain_coefficients(geometry).omega_limit_sq);
}

}  // namespace domino
