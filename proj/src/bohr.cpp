#include "hmap/bohr.hpp"

#include <cmath>
#include <stdexcept>

namespace hmap {

double majorant_sum(const HarmonicMap& f, double r) {
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("majorant sum needs 0 <= r < 1");
    double s = 0.0;
    double rn = 1.0;
    for (int n = 1; n <= f.h.order(); ++n) {
        rn *= r;
        s += (std::abs(f.h.coeff(n)) + std::abs(f.g.coeff(n))) * rn;
    }
    return s;
}

HarmonicMap subordinate(const HarmonicMap& F, const PowerSeries& w) {
    if (w.coeff(0) != Complex{}) throw std::invalid_argument("composition requires omega(0)=0");
    const int samples = 512;
    const double r = 0.999;
    for (int j = 0; j < samples; ++j) {
        const Complex z = std::polar(r, 2.0 * M_PI * j / samples);
        if (std::abs(eval(w, z)) > 1.0 + 1e-6) {
            throw std::invalid_argument("Schwarz function exceeds the unit disk on the sample grid");
        }
    }
    return HarmonicMap{compose(F.h, w), compose(F.g, w), NormalizationClass::Unconstrained};
}

bool check_majorant_domination(const PowerSeries& f, const PowerSeries& F, double r) {
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("majorant comparison needs 0 <= r < 1");
    double lhs = 0.0, rhs = 0.0;
    double rn = 1.0;
    const int m = std::max(f.order(), F.order());
    for (int k = 0; k <= m; ++k) {
        lhs += std::abs(f.coeff(k)) * rn;
        rhs += std::abs(F.coeff(k)) * rn;
        rn *= r;
    }
    return lhs <= rhs + 1e-12;
}

BohrCheck bohr_check(const HarmonicMap& f, const ClassProfile& profile, double r) {
    BohrCheck out;
    out.sum = majorant_sum(f, r);
    out.tail = profile.majorant_tail(r, f.h.order());
    out.threshold = profile.dist_lower;
    const double tol = 1e-12;
    if (out.sum > out.threshold + tol) {
        out.verdict = Verdict::Fail;
    } else if (out.sum + out.tail <= out.threshold + tol) {
        out.verdict = Verdict::Pass;
    } else {
        out.verdict = Verdict::Inconclusive;
    }
    return out;
}

BohrReport bohr_radius(const ClassProfile& profile) {
    BohrReport rep;
    const auto residual = [&](double r) {
        return profile.majorant_closed_form(r) - profile.dist_lower;
    };
    double lo = 1e-9, hi = 1.0 - 1e-9;
    if (residual(lo) > 0.0 || residual(hi) < 0.0) {
        throw std::invalid_argument("majorant does not bracket the covering distance");
    }
    int it = 0;
    while (hi - lo > 1e-12 && it < 200) {
        const double mid = 0.5 * (lo + hi);
        (residual(mid) <= 0.0 ? lo : hi) = mid;
        ++it;
    }
    rep.radius = 0.5 * (lo + hi);
    rep.residual = std::abs(residual(rep.radius));
    rep.iterations = it;
    switch (profile.form) {
        case MajorantForm::Koebe: {
            // unique root of 3r^3 - 3r^2 + 9r - 1 in (0,1)
            double a = 0.0, b = 1.0;
            for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
                const double m = 0.5 * (a + b);
                (bohr_polynomial_residual(m) <= 0.0 ? a : b) = m;
            }
            rep.closed_form_root = 0.5 * (a + b);
            break;
        }
        case MajorantForm::HalfPlane:
        case MajorantForm::Linear:
            rep.closed_form_root = 3.0 - 2.0 * std::sqrt(2.0);
            break;
        case MajorantForm::Geometric:
            rep.closed_form_root = 1.0 / 3.0;
            break;
    }
    return rep;
}

double bohr_polynomial_residual(double r) {
    return ((3.0 * r - 3.0) * r + 9.0) * r - 1.0;
}

}  // namespace hmap
