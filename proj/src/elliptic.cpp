#include "domino/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "domino/errors.hpp"
#include "domino/quadrature.hpp"

namespace domino {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Moduli above this are rejected by the modulus-facing API; K(k) grows only
// logarithmically but the double representation of k has run out of digits.
constexpr double kModulusCap = 1.0 - 1e-12;

// Carlson symmetric integral R_F(x, y, z) by the duplication theorem.
// Requires x, y, z >= 0 with at most one of them zero.  The error of the
// fifth-order tail expansion is O(errtol^6), far below double round-off at
// the tolerance used here.
double carlson_rf(double x, double y, double z) {
    constexpr double errtol = 0.0012;
    constexpr int max_iter = 64;

    double xt = x, yt = y, zt = z;
    double mu = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    for (int i = 0; i < max_iter; ++i) {
        const double sx = std::sqrt(xt);
        const double sy = std::sqrt(yt);
        const double sz = std::sqrt(zt);
        const double lambda = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
        mu = (xt + yt + zt) / 3.0;
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) {
            const double e2 = dx * dy - dz * dz;
            const double e3 = dx * dy * dz;
            return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
        }
    }
    throw NumericalError("carlson_rf: duplication iteration failed to converge");
}

void check_amplitude(double phi) {
    if (!(phi >= 0.0) || phi > kHalfPi) {
        throw std::invalid_argument("elliptic: amplitude phi must lie in [0, pi/2]");
    }
}

void check_complement(double k_prime_sq) {
    if (!(k_prime_sq > 0.0) || k_prime_sq > 1.0) {
        throw std::domain_error("elliptic: complementary parameter k'^2 must lie in (0, 1]");
    }
}

void check_fall_args(const FallIntegralArgs& args) {
    if (!(args.a > 0.0)) {
        throw std::invalid_argument("fall integral: coefficient a must be > 0");
    }
    if (!(args.c > 0.0)) {
        throw std::invalid_argument("fall integral: coefficient c must be > 0");
    }
    if (args.c >= args.a) {
        throw std::domain_error("fall integral: requires c < a (otherwise the modulus reaches 1)");
    }
    if (!(args.theta0 >= 0.0) || args.theta0 > kHalfPi) {
        throw std::invalid_argument("fall integral: theta0 must lie in [0, pi/2]");
    }
}

}  // namespace

double complete_K_from_complement(double k_prime_sq) {
    check_complement(k_prime_sq);
    double a = 1.0;
    double g = std::sqrt(k_prime_sq);
    for (int i = 0; i < 64; ++i) {
        if (std::abs(a - g) <= 2.3e-16 * a) {
            return std::numbers::pi / (a + g);
        }
        const double next_a = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = next_a;
    }
    throw NumericalError("complete_K: arithmetic-geometric mean failed to converge");
}

double incomplete_F_from_complement(double phi, double k_prime_sq) {
    check_amplitude(phi);
    check_complement(k_prime_sq);
    if (phi == 0.0) return 0.0;
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double c2 = c * c;
    // 1 - k^2 sin^2(phi) rewritten as cos^2(phi) + k'^2 sin^2(phi): exact at
    // both ends of the amplitude range and free of cancellation for k -> 1.
    const double y = c2 + k_prime_sq * s * s;
    return s * carlson_rf(c2, y, 1.0);
}

double incomplete_F(const EllipticArgs& args) {
    if (!(args.k >= 0.0)) {
        throw std::invalid_argument("incomplete_F: modulus k must be >= 0");
    }
    if (args.k >= 1.0) {
        throw std::domain_error("incomplete_F: modulus k must be < 1");
    }
    const double k_prime_sq = (1.0 - args.k) * (1.0 + args.k);
    return incomplete_F_from_complement(args.phi, k_prime_sq);
}

double complete_K(double k) {
    if (!(k >= 0.0)) {
        throw std::invalid_argument("complete_K: modulus k must be >= 0");
    }
    if (k > kModulusCap) {
        throw std::domain_error(
            "complete_K: modulus exceeds the near-singular cap 1 - 1e-12; "
            "use the complementary-parameter form");
    }
    return complete_K_from_complement((1.0 - k) * (1.0 + k));
}

double complete_K_log_asymptotic(double k_prime) {
    if (!(k_prime > 0.0)) {
        throw std::invalid_argument("complete_K_log_asymptotic: k' must be > 0");
    }
    return std::log(4.0 / k_prime);
}

double fall_time_integral(const FallIntegralArgs& args) {
    check_fall_args(args);
    if (args.theta0 == 0.0) return 0.0;
    const double den = args.a + args.c;
    const double k_prime_sq = (args.a - args.c) / den;
    const double phi = 0.5 * (std::numbers::pi - args.theta0);
    const double complete = complete_K_from_complement(k_prime_sq);
    const double partial = incomplete_F_from_complement(phi, k_prime_sq);
    return 2.0 / std::sqrt(den) * (complete - partial);
}

double fall_time_quadrature(const FallIntegralArgs& args) {
    check_fall_args(args);
    if (args.theta0 == 0.0) return 0.0;
    // a - c cos(theta) = (a - c) + 2 c sin^2(theta/2), the right-hand side
    // staying well conditioned as theta -> 0 with a close to c.
    const double gap = args.a - args.c;
    const double c2 = 2.0 * args.c;
    auto integrand = [gap, c2](double theta) {
        const double s = std::sin(0.5 * theta);
        return 1.0 / std::sqrt(gap + c2 * s * s);
    };
    return integrate_adaptive(integrand, 0.0, args.theta0).value;
}

}  // namespace domino
