#ifndef HMAP_NUMCHECK_HPP
#define HMAP_NUMCHECK_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmap/grid.hpp"
#include "hmap/harmonic.hpp"

namespace hmap {

struct Witness {
    Complex z1;
    Complex z2;
};

struct UnivalenceReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    std::string reason;
};

/// Grid surrogate for univalence. Fail carries a witness (collision pair,
/// circle-image self-crossing, or an interior point covered other than once).
/// Pass means no violation was found on circles the truncation can certify:
/// each trusted circle image closes up with tangent winding one, interior
/// probes wind once, and no two grid points collide in the image.
UnivalenceReport univalence_check(const PowerSeries& s, const GridSpec& grid);
UnivalenceReport univalence_check(const HarmonicMap& f, const GridSpec& grid);

struct ConvexityRung {
    double r;
    Verdict verdict;
    double min_cross;  // smallest normalized corner cross product
    bool trusted;
};

struct ConvexityReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<ConvexityRung> ladder;
    double weakest_r = 0.0;     // rung with the smallest margin
    double re_ratio_min = 0.0;  // min Re(f(z)/z) over trusted rungs
    bool re_condition_ok = false;  // Re(f(z)/z) > 1/2 everywhere sampled
};

/// Polyline convexity of the circle images on a ladder of radii up to r,
/// plus the separate Re(f(z)/z) > 1/2 necessary condition for convexity.
ConvexityReport convexity_check(const PowerSeries& s, double r, int angles);
ConvexityReport convexity_check(const HarmonicMap& f, double r, int angles);

struct EpsilonVerdictRow {
    Complex eps;
    Verdict univalent;
    Verdict convex;
    std::optional<Witness> witness;
};

struct EpsilonVerdictTable {
    std::vector<EpsilonVerdictRow> rows;
};

/// Tuned defaults for slice scans at truncation order 64: univalence circles
/// up to 0.80 (the trust horizon of order-64 sections), convexity ladder to 0.85.
GridSpec scan_univalence_grid();
inline constexpr double kScanConvexityRadius = 0.85;

/// Per-epsilon univalence/convexity verdicts of the slices h + eps g.
EpsilonVerdictTable stability_scan(const HarmonicMap& f, std::span<const Complex> eps_samples,
                                   const GridSpec& grid,
                                   double convex_r = kScanConvexityRadius);

/// |7 + (5/21) eps|, the degree-7 slice coefficient modulus of the map M.
double m_slice_a7(Complex eps);

struct MDerivativeTest {
    double lhs_closed;
    double lhs_series;
    double rhs;
    bool violated;
};

/// |(M^eps)'(r)| against the growth ceiling (1+r)/(1-r)^3 for members of S.
/// lhs computed both from the closed factorization and from the series.
MDerivativeTest m_slice_derivative_test(Complex eps, double r, int order = 128);

struct VAlphaRatio {
    double closed_form;
    double series_value;
    double series_tail_bound;
};

/// Re of (V_alpha)^eps(z0)/z0 at the angle that turns the perturbing
/// coefficient negative real; tends to (1 - |alpha eps|)/2 as r -> 1.
VAlphaRatio v_alpha_ratio(int n, Complex alpha, Complex eps, double r, int order = kDefaultOrder);

}  // namespace hmap

#endif
