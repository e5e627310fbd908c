#ifndef HMAP_INVARIANCE_HPP
#define HMAP_INVARIANCE_HPP

#include <span>

#include "hmap/harmonic.hpp"
#include "hmap/series.hpp"

namespace hmap {

/// phi(z) = e^{i theta} (z + a)/(1 + conj(a) z), |a| < 1.
struct DiskAutomorphism {
    Complex a;
    double theta = 0.0;
};

Complex auto_eval(const DiskAutomorphism& phi, Complex z);
Complex auto_derivative_at(const DiskAutomorphism& phi, Complex z);

/// Taylor series of phi about 0 (geometric expansion of the denominator).
/// Truncation error grows like |a|^order.
PowerSeries auto_series(const DiskAutomorphism& phi, int order);

/// A_c(f) = (f + c conj(f)) / (1 + c g'(0)); |c| < 1.
/// Expanded on the stored series: H = (h + c g)/d, G = (g + conj(c) h)/conj(d).
HarmonicMap affine_transform(const HarmonicMap& f, Complex c);

/// K_phi(f) = (f(phi(z)) - f(phi(0))) / (phi'(0) h'(phi(0))).
/// The co-analytic part is normalized by the conjugated denominator so that
/// G(0) = 0 and G'(0) equals b1_of_transform. |a| capped (default 0.8)
/// because the recentering series loses roughly |a|^N of accuracy.
HarmonicMap koebe_transform(const HarmonicMap& f, const DiskAutomorphism& phi,
                            double max_mobius_param = 0.8);

/// B1 = phi'(0) g'(phi(0)) / conj(phi'(0) h'(phi(0))).
Complex b1_of_transform(const HarmonicMap& f, const DiskAutomorphism& phi);

/// rho = (conj(phi'(0))/phi'(0)) *
///       (eps conj(h'(phi(0))) + conj(g'(phi(0)))) / (h'(phi(0)) + eps g'(phi(0))).
/// |rho| <= 1 whenever |eps| <= 1 and the dilatation stays inside the disk;
/// |rho| = 1 iff |eps| = 1.
Complex rho_of_transform(const HarmonicMap& f, Complex eps, const DiskAutomorphism& phi);

/// Invert the affine shear: F0 with H0 = (H - conj(b1) G)/(1-|b1|^2),
/// G0 = (G - b1 H)/(1-|b1|^2). For b1 matching the shear parameter this
/// recovers the H0-normalized base map.
HarmonicMap shear_decompose(const HarmonicMap& F, Complex b1);

/// sup over the list of |second analytic coefficient|.
double order_estimate(std::span<const HarmonicMap> maps);

}  // namespace hmap

#endif
