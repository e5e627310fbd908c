#include "hmap/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "hmap/catalog.hpp"

namespace hmap {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

void validate(const GridSpec& g) {
    if (g.r_max >= 1.0 || g.r_max <= 0.0) throw std::invalid_argument("grid r_max must be in (0,1)");
    if (g.radii < 8 || g.angles < 8) throw std::invalid_argument("grid counts must be >= 8");
    if (g.tol <= 0.0) throw std::invalid_argument("grid tol must be positive");
}

std::vector<double> grid_radii(const GridSpec& g) {
    validate(g);
    std::vector<double> r(g.radii);
    const double r0 = std::min(0.1, g.r_max / 2.0);
    for (int i = 0; i < g.radii; ++i) {
        r[i] = r0 * std::pow(g.r_max / r0, double(i) / double(g.radii - 1));
    }
    return r;
}

std::vector<double> grid_angles(const GridSpec& g) {
    validate(g);
    std::vector<double> t(g.angles);
    for (int j = 0; j < g.angles; ++j) t[j] = 2.0 * M_PI * j / g.angles;
    return t;
}

double ClassProfile::combined_bound(int n) const {
    if (n == 1) return 1.0;
    return analytic_bound(n) + coanalytic_bound(n);
}

double ClassProfile::majorant_closed_form(double r) const {
    switch (form) {
        case MajorantForm::Koebe: {
            const double d = 1.0 - r;
            return (r + r * r * r / 3.0) / (d * d * d);
        }
        case MajorantForm::HalfPlane:
        case MajorantForm::Linear:
            return r / ((1.0 - r) * (1.0 - r));
        case MajorantForm::Geometric:
            return r / (1.0 - r);
    }
    return 0.0;
}

double ClassProfile::majorant_partial(double r, int upto) const {
    double s = 0.0;
    double rn = 1.0;
    for (int n = 1; n <= upto; ++n) {
        rn *= r;
        s += combined_bound(n) * rn;
    }
    return s;
}

double ClassProfile::majorant_tail(double r, int order) const {
    return std::max(0.0, majorant_closed_form(r) - majorant_partial(r, order));
}

namespace {

ClassProfile make_S_STAR() {
    ClassProfile p;
    p.name = "S_STAR";
    p.analytic_bound = [](int n) { return coeff_A(n); };
    p.coanalytic_bound = [](int n) { return coeff_B(n); };
    p.alpha_affine = 3.0;
    p.alpha_h0 = 2.5;
    p.dist_lower = 1.0 / 6.0;
    p.form = MajorantForm::Koebe;
    return p;
}

ClassProfile make_C_STAR() {
    ClassProfile p;
    p.name = "C_STAR";
    p.analytic_bound = [](int n) { return (n + 1) / 2.0; };
    p.coanalytic_bound = [](int n) { return (n - 1) / 2.0; };
    p.alpha_affine = 2.0;
    p.alpha_h0 = 1.5;
    p.dist_lower = 0.25;
    p.form = MajorantForm::HalfPlane;
    return p;
}

// The stable-class majorants are calibration: they reproduce the known Bohr
// radii of these classes and are validated against the extremal members k
// and l. The per-part coefficient bounds are not derived here.
ClassProfile make_S_STABLE() {
    ClassProfile p;
    p.name = "S_STABLE";
    p.analytic_bound = [](int n) { return double(n); };
    p.coanalytic_bound = [](int) { return 0.0; };
    p.alpha_affine = std::nullopt;
    p.alpha_h0 = 2.0;
    p.dist_lower = 0.25;
    p.form = MajorantForm::Linear;
    return p;
}

ClassProfile make_C_STABLE() {
    ClassProfile p;
    p.name = "C_STABLE";
    p.analytic_bound = [](int) { return 1.0; };
    p.coanalytic_bound = [](int) { return 0.0; };
    p.alpha_affine = std::nullopt;
    p.alpha_h0 = 1.0;
    p.dist_lower = 0.5;
    p.form = MajorantForm::Geometric;
    return p;
}

}  // namespace

const ClassProfile& profile_S_STAR() {
    static const ClassProfile p = make_S_STAR();
    return p;
}
const ClassProfile& profile_C_STAR() {
    static const ClassProfile p = make_C_STAR();
    return p;
}
const ClassProfile& profile_S_STABLE() {
    static const ClassProfile p = make_S_STABLE();
    return p;
}
const ClassProfile& profile_C_STABLE() {
    static const ClassProfile p = make_C_STABLE();
    return p;
}

const ClassProfile& profile_by_name(const std::string& name) {
    if (name == "S_STAR") return profile_S_STAR();
    if (name == "C_STAR") return profile_C_STAR();
    if (name == "S_STABLE") return profile_S_STABLE();
    if (name == "C_STABLE") return profile_C_STABLE();
    throw std::invalid_argument("unknown profile '" + name + "'");
}

std::vector<std::string> profile_names() {
    return {"S_STAR", "C_STAR", "S_STABLE", "C_STABLE"};
}

CoeffBoundReport check_coeff_bounds(const HarmonicMap& f, const ClassProfile& p, int upto) {
    CoeffBoundReport rep;
    rep.profile = p.name;
    rep.pass = true;
    rep.min_margin = INFINITY;
    const double tol = 1e-9;
    for (int n = 2; n <= std::min(upto, f.h.order()); ++n) {
        CoeffBoundRow row;
        row.n = n;
        row.a_abs = std::abs(f.h.coeff(n));
        row.a_bound = p.analytic_bound(n);
        row.b_abs = std::abs(f.g.coeff(n));
        row.b_bound = p.coanalytic_bound(n);
        row.margin = std::min(row.a_bound - row.a_abs, row.b_bound - row.b_abs);
        row.pass = row.a_abs <= row.a_bound + tol && row.b_abs <= row.b_bound + tol;
        rep.min_margin = std::min(rep.min_margin, row.margin);
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

CoeffBoundReport check_affine_coeff_bounds(const HarmonicMap& f, AffineFamily which, int upto) {
    CoeffBoundReport rep;
    rep.profile = which == AffineFamily::S ? "A(S)" : "A(C)";
    rep.pass = true;
    rep.min_margin = INFINITY;
    for (int n = 2; n <= std::min(upto, f.h.order()); ++n) {
        const double bound = which == AffineFamily::S ? (2.0 * n * n + 1.0) / 3.0 : double(n);
        CoeffBoundRow row;
        row.n = n;
        row.a_abs = std::abs(f.h.coeff(n));
        row.a_bound = bound;
        row.b_abs = std::abs(f.g.coeff(n));
        row.b_bound = bound;
        row.margin = std::min(bound - row.a_abs, bound - row.b_abs);
        row.pass = row.a_abs < bound && row.b_abs < bound;
        rep.min_margin = std::min(rep.min_margin, row.margin);
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

Interval growth_interval(double alpha, double r) {
    if (alpha < 1.0) throw std::invalid_argument("growth interval needs alpha >= 1");
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("growth interval needs 0 <= r < 1");
    const double lo = (1.0 - std::pow((1.0 - r) / (1.0 + r), alpha)) / (2.0 * alpha);
    const double hi = (std::pow((1.0 + r) / (1.0 - r), alpha) - 1.0) / (2.0 * alpha);
    return {lo, hi};
}

double covering_radius(double alpha) {
    if (alpha < 1.0) throw std::invalid_argument("covering radius needs alpha >= 1");
    return 1.0 / (2.0 * alpha);
}

Interval jacobian_interval(double alpha, double b1_mod, double r) {
    if (b1_mod < 0.0 || b1_mod >= 1.0) throw std::invalid_argument("|b1| must be in [0,1)");
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("jacobian interval needs 0 <= r < 1");
    const double c = 1.0 - b1_mod * b1_mod;
    const double lo = c * std::pow(1.0 - r, 2.0 * alpha - 2.0) / std::pow(1.0 + r, 2.0 * alpha + 2.0);
    const double hi = c * std::pow(1.0 + r, 2.0 * alpha - 2.0) / std::pow(1.0 - r, 2.0 * alpha + 2.0);
    return {lo, hi};
}

DerivativeBoundPair derivative_bounds(double alpha, double b1_mod, double r,
                                      DistortionVariant variant) {
    if (b1_mod < 0.0 || b1_mod >= 1.0) throw std::invalid_argument("|b1| must be in [0,1)");
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("derivative bounds need 0 <= r < 1");
    if (variant == DistortionVariant::OrderEnvelope) {
        const double common =
            std::pow(1.0 + r, alpha - 1.5) / std::pow(1.0 - r, alpha + 1.5);
        return {(1.0 + r * b1_mod) * common, (r + b1_mod) * common};
    }
    const double cap = std::min(1.0, r + b1_mod);
    if (alpha == 2.0) {
        const double base = (1.0 + r) / std::pow(1.0 - r, 3.0);
        return {base, cap * base};
    }
    if (alpha == 1.0) {
        const double base = 1.0 / ((1.0 - r) * (1.0 - r));
        return {base, cap * base};
    }
    throw std::invalid_argument("StableMin bounds are stated only for alpha = 1 and alpha = 2");
}

namespace {

// Tail of Sum_{n>order} bound_n r^n and of the derivative series
// Sum_{n>order} n bound_n r^{n-1}, from the profile's combined majorant.
double value_tail(const ClassProfile& p, double r, int order) { return p.majorant_tail(r, order); }

double derivative_tail(const ClassProfile& p, double r, int order) {
    // Sum n c_n r^{n-1} for the relevant closed forms, minus the stored part.
    double full = 0.0;
    switch (p.form) {
        case MajorantForm::Koebe: {
            // d/dr [(r + r^3/3)/(1-r)^3]
            const double d = 1.0 - r;
            full = (1.0 + r * r) / std::pow(d, 3.0) + 3.0 * (r + r * r * r / 3.0) / std::pow(d, 4.0);
            break;
        }
        case MajorantForm::HalfPlane:
        case MajorantForm::Linear: {
            const double d = 1.0 - r;
            full = (1.0 + r) / (d * d * d);
            break;
        }
        case MajorantForm::Geometric:
            full = 1.0 / ((1.0 - r) * (1.0 - r));
            break;
    }
    double part = 0.0;
    double rn = 1.0;  // r^{n-1}
    for (int n = 1; n <= order; ++n) {
        part += n * p.combined_bound(n) * rn;
        rn *= r;
    }
    return std::max(0.0, full - part);
}

}  // namespace

GrowthReport verify_growth(const HarmonicMap& f, double alpha, const GridSpec& grid,
                           const ClassProfile& tail_profile) {
    GrowthReport rep{true, 0, -INFINITY, {}};
    const auto radii = grid_radii(grid);
    const auto angles = grid_angles(grid);
    for (double r : radii) {
        const Interval bounds = growth_interval(alpha, r);
        const double tail = value_tail(tail_profile, r, f.h.order());
        for (double t : angles) {
            const Complex z = std::polar(r, t);
            const double v = std::abs(eval_map(f, z));
            ++rep.points_checked;
            // tolerance scales with the bound: the envelopes are attained with
            // equality by the extremal maps at magnitudes far above 1
            const double excess =
                std::max((bounds.lower - tail - v) - grid.tol * std::max(1.0, bounds.lower),
                         (v - bounds.upper - tail) - grid.tol * std::max(1.0, bounds.upper));
            rep.max_excess = std::max(rep.max_excess, excess);
            if (excess > 0.0) {
                rep.pass = false;
                rep.violations.push_back({z, v, bounds.lower, bounds.upper, tail});
            }
        }
    }
    return rep;
}

DistortionReport verify_distortion(const HarmonicMap& f, double alpha, Complex b1,
                                   const GridSpec& grid, DistortionVariant variant,
                                   const ClassProfile& tail_profile) {
    DistortionReport rep{true, 0, -INFINITY, {}};
    const double b = std::abs(b1);
    const auto radii = grid_radii(grid);
    const auto angles = grid_angles(grid);
    const PowerSeries dh = derivative(f.h);
    const PowerSeries dg = derivative(f.g);
    for (double r : radii) {
        const Interval jac = jacobian_interval(alpha, b, r);
        const DerivativeBoundPair der = derivative_bounds(alpha, b, r, variant);
        const double dtail = (1.0 + b) * derivative_tail(tail_profile, r, f.h.order());
        for (double t : angles) {
            const Complex z = std::polar(r, t);
            const double habs = std::abs(eval(dh, z));
            const double gabs = std::abs(eval(dg, z));
            const double J = habs * habs - gabs * gabs;
            const double jtail = dtail * (2.0 * habs + dtail) + dtail * (2.0 * gabs + dtail);
            ++rep.points_checked;
            const auto over = [&](double value, double bound, double tail) {
                return (value - bound - tail) - grid.tol * std::max(1.0, std::abs(bound));
            };
            double excess = std::max({over(habs, der.h_bound, dtail), over(gabs, der.g_bound, dtail),
                                      over(J, jac.upper, jtail), over(-J, -jac.lower, jtail)});
            rep.max_excess = std::max(rep.max_excess, excess);
            if (excess > 0.0) {
                rep.pass = false;
                rep.violations.push_back({z, J, jac.lower, jac.upper, jtail});
            }
        }
    }
    return rep;
}

}  // namespace hmap
