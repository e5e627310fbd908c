#ifndef HMAP_CATALOG_HPP
#define HMAP_CATALOG_HPP

#include "hmap/harmonic.hpp"
#include "hmap/series.hpp"

namespace hmap {

// Named extremal functions. Every rational closed form is expanded through
// series division; the displayed coefficient formulas below serve as the
// independent cross-check in the tests.

/// k(z) = z/(1-z)^2, coefficients n.
PowerSeries koebe_k(int order = kDefaultOrder);

/// l(z) = z/(1-z), coefficients 1.
PowerSeries half_plane_l(int order = kDefaultOrder);

/// Harmonic Koebe map: h = (z - z^2/2 + z^3/6)/(1-z)^3, g = (z^2/2 + z^3/6)/(1-z)^3.
HarmonicMap harmonic_koebe_K(int order = kDefaultOrder);

/// Harmonic half-plane map: h = (z - z^2/2)/(1-z)^2, g = -(z^2/2)/(1-z)^2.
HarmonicMap harmonic_half_plane_L(int order = kDefaultOrder);

/// h = k, g integrated from g'(z) = z(-1+z+z^2)(1+z) / (3(1-z)^3).
HarmonicMap mapping_M(int order = kDefaultOrder);

/// h = l, g = alpha z^n/(1-z) with n >= 3 and 0 < |alpha| <= 1/(2n-1).
HarmonicMap v_alpha(int n, Complex alpha, int order = kDefaultOrder);

/// (n+1)(2n+1)/6 and (n-1)(2n-1)/6.
double coeff_A(int n);
double coeff_B(int n);
/// Same numerators scaled by 6, exact in integer arithmetic.
long long coeff_A6(int n);
long long coeff_B6(int n);

/// Degree-n coefficient of the slice K^eps: [(2n^2+1)(1+eps) + 3n(1-eps)]/6.
Complex phi_K(int n, Complex eps);
/// Degree-n coefficient of the slice L^eps: [n(1-eps) + (1+eps)]/2.
Complex phi_L(int n, Complex eps);

}  // namespace hmap

#endif
