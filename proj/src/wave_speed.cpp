#include "domino/wave_speed.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "domino/detail/coefficients.hpp"
#include "domino/elliptic.hpp"

namespace domino {

namespace {

// K(k) - F((pi - beta1)/2, k) evaluated from the complementary parameter.
double fall_bracket(double beta1, double k_prime_sq) {
    const double phi = 0.5 * (std::numbers::pi - beta1);
    return complete_K_from_complement(k_prime_sq) -
           incomplete_F_from_complement(phi, k_prime_sq);
}

}  // namespace

double fall_time(double omega_i, const ChainGeometry& geometry) {
    if (!(omega_i > 0.0)) {
        throw std::invalid_argument(
            "fall_time: omega_i must be > 0 (an upright rod at rest never reaches the strike angle)");
    }
    const auto cc = detail::chain_coefficients(geometry);
    const double c = cc.two_g_over_l;
    if (c == 0.0) {
        return cc.spacing.beta1 / omega_i;  // coasting rod, uniform rotation
    }
    // Energy gives d(theta)/dt = sqrt(a - c cos(theta)) with a = omega_i^2 + c,
    // so a - c = omega_i^2 exactly and k'^2 = omega_i^2 / (a + c) is formed
    // without cancellation.
    const double omega_sq = omega_i * omega_i;
    const double a_plus_c = omega_sq + 2.0 * c;
    const double k_prime_sq = omega_sq / a_plus_c;
    return 2.0 / std::sqrt(a_plus_c) * fall_bracket(cc.spacing.beta1, k_prime_sq);
}

WaveSolution limiting_solution(const ChainGeometry& geometry) {
    const auto cc = detail::chain_coefficients(geometry);
    if (!(geometry.gravity > 0.0)) {
        throw std::domain_error("limiting_solution: a settled wave requires gravity > 0");
    }
    const auto& sc = cc.spacing;

    // At the fixed point a + c = Omega^2 + 2(2g/l); the modulus pair comes
    // from the dimensionless coefficients, not from a - c subtraction.
    const double a_plus_c = cc.omega_limit_sq + 2.0 * cc.two_g_over_l;
    const double bracket = fall_bracket(sc.beta1, sc.modulus_comp_sq);

    WaveSolution sol;
    sol.omega_limit = std::sqrt(cc.omega_limit_sq);
    sol.k = sc.modulus;
    sol.fall_time = 2.0 / std::sqrt(a_plus_c) * bracket;
    sol.speed = geometry.spacing / sol.fall_time;
    sol.G = sc.ratio / (sc.modulus * bracket);
    return sol;
}

double wave_modulus(double spacing_ratio) {
    return detail::spacing_coefficients(spacing_ratio).modulus;
}

double scaling_G(double spacing_ratio) {
    const auto sc = detail::spacing_coefficients(spacing_ratio);
    return sc.ratio / (sc.modulus * fall_bracket(sc.beta1, sc.modulus_comp_sq));
}

double scaling_G_close(double spacing_ratio) {
    if (!(spacing_ratio > 0.0) || !(spacing_ratio < 1.0)) {
        throw std::invalid_argument("scaling_G_close: spacing ratio must lie in (0, 1)");
    }
    return 1.0 / spacing_ratio;
}

double scaling_G_wide(double spacing_ratio) {
    if (!(spacing_ratio > 0.0) || !(spacing_ratio < 1.0)) {
        throw std::invalid_argument("scaling_G_wide: spacing ratio must lie in (0, 1)");
    }
    const double denominator = std::log1p(std::sqrt(2.0)) + std::log1p(-spacing_ratio);
    if (!(denominator < 0.0)) {
        throw std::domain_error(
            "scaling_G_wide: asymptote applies only for x > 2 - sqrt(2) (denominator must be negative)");
    }
    return -1.0 / denominator;
}

}  // namespace domino
