#include "hmap/invariance.hpp"

#include <cmath>
#include <stdexcept>

namespace hmap {

namespace {

Complex unit(double theta) { return std::polar(1.0, theta); }

void require_inside(Complex a) {
    if (std::abs(a) >= 1.0) throw std::invalid_argument("automorphism parameter |a| must be < 1");
}

}  // namespace

Complex auto_eval(const DiskAutomorphism& phi, Complex z) {
    require_inside(phi.a);
    return unit(phi.theta) * (z + phi.a) / (1.0 + std::conj(phi.a) * z);
}

Complex auto_derivative_at(const DiskAutomorphism& phi, Complex z) {
    require_inside(phi.a);
    const Complex den = 1.0 + std::conj(phi.a) * z;
    return unit(phi.theta) * (1.0 - std::norm(phi.a)) / (den * den);
}

PowerSeries auto_series(const DiskAutomorphism& phi, int order) {
    require_inside(phi.a);
    PowerSeries num = unit(phi.theta) * PowerSeries::polynomial(std::vector<Complex>{phi.a, 1.0}, order);
    PowerSeries den = PowerSeries::polynomial(std::vector<Complex>{1.0, std::conj(phi.a)}, order);
    return div(num, den);
}

HarmonicMap affine_transform(const HarmonicMap& f, Complex c) {
    if (std::abs(c) >= 1.0) throw std::invalid_argument("affine transform requires |c| < 1");
    const Complex d = 1.0 + c * f.g.coeff(1);
    if (std::abs(d) < 1e-12) throw std::invalid_argument("affine transform denominator vanishes");
    PowerSeries H = (1.0 / d) * (f.h + c * f.g);
    PowerSeries G = (1.0 / std::conj(d)) * (f.g + std::conj(c) * f.h);
    return make_map(std::move(H), std::move(G), NormalizationClass::H);
}

HarmonicMap koebe_transform(const HarmonicMap& f, const DiskAutomorphism& phi,
                            double max_mobius_param) {
    if (std::abs(phi.a) > max_mobius_param) {
        throw std::invalid_argument("automorphism parameter exceeds the recentering accuracy cap");
    }
    const Complex z0 = auto_eval(phi, Complex{});
    const Complex dphi0 = auto_derivative_at(phi, Complex{});
    const Complex dh = eval(derivative(f.h), z0);
    if (std::abs(dh) < 1e-10) throw std::invalid_argument("critical point at phi(0)");
    const Complex D = dphi0 * dh;

    const PowerSeries T = auto_series(phi, f.h.order());
    PowerSeries hT = compose_poly(f.h, T);
    PowerSeries gT = compose_poly(f.g, T);
    // subtract the constant terms so that H(0) = G(0) = 0 exactly
    std::vector<Complex> hc(hT.coeffs().begin(), hT.coeffs().end());
    std::vector<Complex> gc(gT.coeffs().begin(), gT.coeffs().end());
    hc[0] = Complex{};
    gc[0] = Complex{};
    PowerSeries H = (1.0 / D) * PowerSeries(std::move(hc));
    PowerSeries G = (1.0 / std::conj(D)) * PowerSeries(std::move(gc));
    // force the normalization exactly: H'(0) = phi'(0) h'(phi(0)) / D = 1 up to rounding
    std::vector<Complex> Hc(H.coeffs().begin(), H.coeffs().end());
    Hc[1] = 1.0;
    return make_map(PowerSeries(std::move(Hc)), std::move(G), NormalizationClass::H);
}

Complex b1_of_transform(const HarmonicMap& f, const DiskAutomorphism& phi) {
    const Complex z0 = auto_eval(phi, Complex{});
    const Complex dphi0 = auto_derivative_at(phi, Complex{});
    const Complex dh = eval(derivative(f.h), z0);
    if (std::abs(dh) < 1e-10) throw std::invalid_argument("critical point at phi(0)");
    return dphi0 * eval(derivative(f.g), z0) / std::conj(dphi0 * dh);
}

Complex rho_of_transform(const HarmonicMap& f, Complex eps, const DiskAutomorphism& phi) {
    const Complex z0 = auto_eval(phi, Complex{});
    const Complex dphi0 = auto_derivative_at(phi, Complex{});
    const Complex dh = eval(derivative(f.h), z0);
    const Complex dg = eval(derivative(f.g), z0);
    const Complex den = dh + eps * dg;
    if (std::abs(den) < 1e-14) throw std::invalid_argument("vanishing denominator in rho");
    return (std::conj(dphi0) / dphi0) * (eps * std::conj(dh) + std::conj(dg)) / den;
}

HarmonicMap shear_decompose(const HarmonicMap& F, Complex b1) {
    const double n = 1.0 - std::norm(b1);
    if (n <= 0.0) throw std::invalid_argument("shear decomposition requires |b1| < 1");
    PowerSeries H0 = (1.0 / n) * (F.h - std::conj(b1) * F.g);
    PowerSeries G0 = (1.0 / n) * (F.g - b1 * F.h);
    return HarmonicMap{std::move(H0), std::move(G0), NormalizationClass::Unconstrained};
}

double order_estimate(std::span<const HarmonicMap> maps) {
    if (maps.empty()) throw std::invalid_argument("order estimate needs a nonempty list");
    double sup = 0.0;
    for (const auto& f : maps) sup = std::max(sup, std::abs(f.h.coeff(2)));
    return sup;
}

}  // namespace hmap
