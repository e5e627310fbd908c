#ifndef HMAP_BOUNDS_HPP
#define HMAP_BOUNDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hmap/grid.hpp"
#include "hmap/harmonic.hpp"

namespace hmap {

/// Closed form of the combined coefficient majorant sum  Sum (|a_n|+|b_n|) r^n.
enum class MajorantForm {
    Koebe,      // (r + r^3/3)/(1-r)^3,  combined bound (2n^2+1)/3
    HalfPlane,  // r/(1-r)^2,            combined bound n
    Linear,     // r/(1-r)^2,            combined bound n
    Geometric,  // r/(1-r),              combined bound 1
};

/// Per-class constants: coefficient majorants, orders, covering distance and
/// the majorant closed form used by the Bohr machinery.
struct ClassProfile {
    std::string name;
    std::function<double(int)> analytic_bound;
    std::function<double(int)> coanalytic_bound;
    std::optional<double> alpha_affine;  // growth order of the affine closure
    double alpha_h0 = 0.0;               // order of the H0 class (distortion)
    double dist_lower = 0.0;             // covering radius of the class
    MajorantForm form = MajorantForm::HalfPlane;

    double combined_bound(int n) const;
    double majorant_closed_form(double r) const;
    /// Sum_{n=1..upto} combined_bound(n) r^n.
    double majorant_partial(double r, int upto) const;
    /// Remainder of the majorant beyond `order` at radius r.
    double majorant_tail(double r, int order) const;
};

const ClassProfile& profile_S_STAR();
const ClassProfile& profile_C_STAR();
const ClassProfile& profile_S_STABLE();
const ClassProfile& profile_C_STABLE();
/// Lookup by name; throws on unknown names.
const ClassProfile& profile_by_name(const std::string& name);
std::vector<std::string> profile_names();

struct CoeffBoundRow {
    int n;
    double a_abs, a_bound;
    double b_abs, b_bound;
    bool pass;
    double margin;  // min of the two bound slacks
};

struct CoeffBoundReport {
    std::string profile;
    std::vector<CoeffBoundRow> rows;
    bool pass;
    double min_margin;
};

/// |a_n| <= analytic bound, |b_n| <= co-analytic bound for 2 <= n <= upto.
CoeffBoundReport check_coeff_bounds(const HarmonicMap& f, const ClassProfile& p, int upto);

enum class AffineFamily { S, C };

/// Strict bounds for the affine closures: |a_n|, |b_n| < (2n^2+1)/3 (S) or < n (C).
CoeffBoundReport check_affine_coeff_bounds(const HarmonicMap& f, AffineFamily which, int upto);

struct Interval {
    double lower;
    double upper;
};

/// Growth envelope (1/2a)[1 - ((1-r)/(1+r))^a] .. (1/2a)[((1+r)/(1-r))^a - 1].
Interval growth_interval(double alpha, double r);

/// 1/(2 alpha).
double covering_radius(double alpha);

/// Jacobian envelope (1-b^2)(1-r)^{2a-2}/(1+r)^{2a+2} .. (1-b^2)(1+r)^{2a-2}/(1-r)^{2a+2}.
Interval jacobian_interval(double alpha, double b1_mod, double r);

enum class DistortionVariant { OrderEnvelope, StableMin };

struct DerivativeBoundPair {
    double h_bound;
    double g_bound;
};

/// OrderEnvelope: (1+r b)(1+r)^{a-3/2}/(1-r)^{a+3/2} and (r+b)(same).
/// StableMin (alpha = 2): (1+r)/(1-r)^3 and min{1, r+b}(1+r)/(1-r)^3;
/// StableMin (alpha = 1): 1/(1-r)^2 and min{1, r+b}/(1-r)^2.
DerivativeBoundPair derivative_bounds(double alpha, double b1_mod, double r,
                                      DistortionVariant variant);

struct GridViolation {
    Complex z;
    double value;
    double lower;
    double upper;
    double tail;
};

struct GrowthReport {
    bool pass;
    int points_checked;
    double max_excess;  // worst overshoot beyond tolerance+tail, <= 0 when passing
    std::vector<GridViolation> violations;
};

/// Checks lower <= |f(z)| <= upper on the grid; a point only counts as a
/// violation beyond tol plus the truncation-tail estimate from `tail_profile`.
GrowthReport verify_growth(const HarmonicMap& f, double alpha, const GridSpec& grid,
                           const ClassProfile& tail_profile);

struct DistortionReport {
    bool pass;
    int points_checked;
    double max_excess;
    std::vector<GridViolation> violations;
};

/// Checks the Jacobian envelope and the |h'|, |g'| bounds pointwise.
DistortionReport verify_distortion(const HarmonicMap& f, double alpha, Complex b1,
                                   const GridSpec& grid, DistortionVariant variant,
                                   const ClassProfile& tail_profile);

}  // namespace hmap

#endif
