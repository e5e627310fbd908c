#ifndef HMAP_BOHR_HPP
#define HMAP_BOHR_HPP

#include <optional>

#include "hmap/bounds.hpp"
#include "hmap/harmonic.hpp"

namespace hmap {

struct BohrReport {
    double radius = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::optional<double> closed_form_root;
};

/// Sum |a_n| r^n + Sum |b_n| r^n over the stored coefficients, n >= 1.
double majorant_sum(const HarmonicMap& f, double r);

/// (h o w, g o w) for a Schwarz-type w: w(0) = 0 and |w| <= 1 on a boundary
/// sample grid at radius 0.999 (numeric admissibility check).
HarmonicMap subordinate(const HarmonicMap& F, const PowerSeries& w);

/// Coefficient-majorant domination Sum |f_k| r^k <= Sum |F_k| r^k at radius r.
/// Guaranteed by subordination for r <= 1/3; sufficient-only beyond.
bool check_majorant_domination(const PowerSeries& f, const PowerSeries& F, double r);

struct BohrCheck {
    Verdict verdict = Verdict::Inconclusive;
    double sum = 0.0;
    double tail = 0.0;
    double threshold = 0.0;
};

/// majorant_sum(f, r) <= profile.dist_lower, with the profile majorant tail;
/// verdicts inside the tail band come back Inconclusive.
BohrCheck bohr_check(const HarmonicMap& f, const ClassProfile& profile, double r);

/// Bisection root of majorant_closed_form(r) = dist_lower on (0,1), plus the
/// closed-form value where one is stated.
BohrReport bohr_radius(const ClassProfile& profile);

/// 3r^3 - 3r^2 + 9r - 1.
double bohr_polynomial_residual(double r);

}  // namespace hmap

#endif
