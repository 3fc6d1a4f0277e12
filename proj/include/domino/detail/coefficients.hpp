#pragma once

// Internal: quantities derived from the spacing ratio x = d / l and from a
// full geometry, written in forms that stay accurate at both ends of the
// spacing range.  With u = cos^2(beta1) the identities used are
//
//   u             = (1 - x)(1 + x)
//   1 - cos beta1 = x^2 / (1 + cos beta1)
//   1 - f_plus^2  = ( x^2 (1 + u) / (1 + u^2) )^2
//
// none of which subtracts nearly equal numbers.  The elliptic modulus of
// the limiting fall integral is carried as the pair (k^2, k'^2) with
// k^2 = B / (A + B), k'^2 = A / (A + B), where A = (1 - cos beta1) f_plus^2
// and B = 2 (1 - f_plus^2); both stay exact to round-off for x -> 0 and
// x -> 1.  Not part of the public API.

#include "domino/chain_model.hpp"

namespace domino::detail {

struct SpacingCoefficients {
    double ratio;                 ///< x = d / l
    double beta1;                 ///< arcsin(x)
    double cos_beta1;
    double cos_sq_beta1;          ///< u
    double one_minus_cos_beta1;
    double f_plus;
    double f_plus_sq;
    double one_minus_f_plus_sq;
    double f_minus;
    double modulus_sq;            ///< k^2 of the limiting fall integral
    double modulus_comp_sq;       ///< k'^2 = 1 - k^2
    double modulus;               ///< k
};

/// Throws std::invalid_argument unless 0 < ratio < 1.
SpacingCoefficients spacing_coefficients(double ratio);

struct ChainCoefficients {
    SpacingCoefficients spacing;
    double two_g_over_l;
    double b_increment;      ///< (2g/l) f_plus^2 (1 - cos beta1)
    double omega_limit_sq;   ///< b_increment / (1 - f_plus^2)
};

/// Validates the geometry.
ChainCoefficients chain_coefficients(const ChainGeometry& geometry);

}  // namespace domino::detail
