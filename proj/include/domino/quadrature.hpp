#pragma once

// Adaptive Gauss-Kronrod quadrature over a finite interval.
//
// A 7-point Gauss rule embedded in a 15-point Kronrod rule gives both a
// value and a local error estimate per panel; panels whose estimate exceeds
// their share of the budget are bisected.  The returned error_estimate is
// the sum of the accepted per-panel estimates, so it is a usable (if
// conservative) bound on the true error.  If the budget cannot be met
// within the depth limit the routine throws rather than silently returning
// a value it cannot vouch for.

#include <algorithm>
#include <cmath>
#include <utility>

#include "domino/errors.hpp"

namespace domino {

struct QuadratureResult {
    double value;
    double error_estimate;  ///< accumulated absolute error bound
};

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_depth = 48;  ///< bisection depth limit per panel
};

namespace detail {

// Nodes and weights of the 15-point Kronrod rule on [-1, 1] (positive half;
// the rule is symmetric).  Odd-indexed abscissae carry the embedded 7-point
// Gauss rule.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

// One Kronrod panel: returns {value, error estimate} on [a, b].
template <class F>
std::pair<double, double> kronrod_panel(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double samples[15];
    const double fc = f(center);
    samples[14] = fc;

    double result_gauss = kGaussWeights[3] * fc;
    double result_kronrod = kKronrodWeights[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double f_lo = f(center - dx);
        const double f_hi = f(center + dx);
        samples[2 * j] = f_lo;
        samples[2 * j + 1] = f_hi;
        result_kronrod += kKronrodWeights[j] * (f_lo + f_hi);
        if (j % 2 == 1) result_gauss += kGaussWeights[(j - 1) / 2] * (f_lo + f_hi);
    }

    // Error heuristic from QUADPACK's dqk15: scale the Gauss/Kronrod gap by
    // the panel's deviation from its mean to avoid over-trusting smooth
    // integrands and under-trusting spiky ones.
    const double mean = 0.5 * result_kronrod;
    double deviation = kKronrodWeights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        deviation += kKronrodWeights[j] *
                     (std::abs(samples[2 * j] - mean) + std::abs(samples[2 * j + 1] - mean));
    }
    deviation *= std::abs(half);

    const double value = result_kronrod * half;
    double err = std::abs((result_kronrod - result_gauss) * half);
    if (deviation != 0.0 && err != 0.0) {
        err = deviation * std::min(1.0, std::pow(200.0 * err / deviation, 1.5));
    }
    return {value, err};
}

template <class F>
QuadratureResult integrate_panel(F& f, double a, double b, double tol, int depth,
                                 const QuadratureOptions& opt) {
    const auto [value, err] = kronrod_panel(f, a, b);
    if (!std::isfinite(value)) {
        throw NumericalError("integrate_adaptive: integrand produced a non-finite value");
    }
    if (err <= tol) return {value, err};
    if (depth >= opt.max_depth) {
        throw NumericalError("integrate_adaptive: tolerance not reached at maximum bisection depth");
    }
    const double mid = 0.5 * (a + b);
    const QuadratureResult left = integrate_panel(f, a, mid, 0.5 * tol, depth + 1, opt);
    const QuadratureResult right = integrate_panel(f, mid, b, 0.5 * tol, depth + 1, opt);
    return {left.value + right.value, left.error_estimate + right.error_estimate};
}

}  // namespace detail

/// Integrate f over [lo, hi] to the requested absolute/relative tolerance.
/// Throws NumericalError if the tolerance cannot be certified.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, QuadratureOptions opt = {}) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("integrate_adaptive: interval bounds must satisfy lo <= hi");
    }
    if (lo == hi) return {0.0, 0.0};

    auto& fn = f;
    const auto [coarse, coarse_err] = detail::kronrod_panel(fn, lo, hi);
    if (!std::isfinite(coarse)) {
        throw NumericalError("integrate_adaptive: integrand produced a non-finite value");
    }
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(coarse));
    if (coarse_err <= tol) return {coarse, coarse_err};
    return detail::integrate_panel(fn, lo, hi, tol, 0, opt);
}

}  // namespace domino
