#ifndef HMAP_HARMONIC_HPP
#define HMAP_HARMONIC_HPP

#include "hmap/series.hpp"

namespace hmap {

/// Which coefficient constraints a map is held to.
/// H0: h(0)=0, h'(0)=1, g(0)=0, g'(0)=0.   H: same minus the g'(0) constraint.
enum class NormalizationClass { H0, H, Unconstrained };

inline constexpr double kNormalizationTol = 1e-12;

/// Planar harmonic mapping f = h + conj(g). The co-analytic part is stored
/// un-conjugated: all algebra acts on the series g itself, conjugation
/// happens only at evaluation.
struct HarmonicMap {
    PowerSeries h;
    PowerSeries g;
    NormalizationClass cls = NormalizationClass::Unconstrained;
};

/// Validating constructor; throws naming the offending coefficient.
HarmonicMap make_map(PowerSeries h, PowerSeries g, NormalizationClass cls);

/// Whether the stored coefficients satisfy the constraints of `cls`.
bool is_normalized(const HarmonicMap& f, NormalizationClass cls, double tol = kNormalizationTol);

/// f_eps = h + conj(eps g). Requires |eps| <= 1.
HarmonicMap epsilon_rotate(const HarmonicMap& f, Complex eps);

/// f^eps = h + eps g as an analytic series. Requires |eps| <= 1.
PowerSeries analytic_slice(const HarmonicMap& f, Complex eps);

/// Dilatation g'/h'. Requires h'(0) != 0.
PowerSeries dilatation(const HarmonicMap& f);

/// |h'(z)|^2 - |g'(z)|^2.
double jacobian_at(const HarmonicMap& f, Complex z);

Complex eval_map(const HarmonicMap& f, Complex z);

/// f + conj(b1 f) for f in H0, |b1| < 1; lands in class H with G'(0) = b1.
HarmonicMap affine_shear(const HarmonicMap& f, Complex b1);

}  // namespace hmap

#endif
