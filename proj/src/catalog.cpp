#include "hmap/catalog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hmap {

namespace {

// (1 - z)^p as an exact polynomial, padded to the working order.
PowerSeries one_minus_z_pow(int p, int order) {
    PowerSeries r = PowerSeries::polynomial({1.0}, order);
    const PowerSeries base = PowerSeries::polynomial({1.0, -1.0}, order);
    for (int i = 0; i < p; ++i) r = r * base;
    return r;
}

}  // namespace

PowerSeries koebe_k(int order) {
    if (order < 1) throw std::invalid_argument("koebe_k needs order >= 1");
    return div(PowerSeries::identity(order), one_minus_z_pow(2, order));
}

PowerSeries half_plane_l(int order) {
    if (order < 1) throw std::invalid_argument("half_plane_l needs order >= 1");
    return div(PowerSeries::identity(order), one_minus_z_pow(1, order));
}

HarmonicMap harmonic_koebe_K(int order) {
    if (order < 2) throw std::invalid_argument("harmonic_koebe_K needs order >= 2");
    const PowerSeries den = one_minus_z_pow(3, order);
    PowerSeries h = div(PowerSeries::polynomial({0.0, 1.0, -0.5, 1.0 / 6.0}, order), den);
    PowerSeries g = div(PowerSeries::polynomial({0.0, 0.0, 0.5, 1.0 / 6.0}, order), den);
    return make_map(std::move(h), std::move(g), NormalizationClass::H0);
}

HarmonicMap harmonic_half_plane_L(int order) {
    if (order < 2) throw std::invalid_argument("harmonic_half_plane_L needs order >= 2");
    const PowerSeries den = one_minus_z_pow(2, order);
    PowerSeries h = div(PowerSeries::polynomial({0.0, 1.0, -0.5}, order), den);
    PowerSeries g = div(PowerSeries::polynomial({0.0, 0.0, -0.5}, order), den);
    return make_map(std::move(h), std::move(g), NormalizationClass::H0);
}

HarmonicMap mapping_M(int order) {
    if (order < 7) throw std::invalid_argument("mapping_M needs order >= 7");
    // g'(z) = z(-1+z+z^2)(1+z)/(3(1-z)^3) = (-z + 2z^3 + z^4)/(3(1-z)^3);
    // integrate at one order lower so that g matches h's truncation.
    const PowerSeries num =
        PowerSeries::polynomial({0.0, -1.0 / 3.0, 0.0, 2.0 / 3.0, 1.0 / 3.0}, order - 1);
    const PowerSeries gprime = div(num, one_minus_z_pow(3, order - 1));
    return make_map(koebe_k(order), integrate(gprime), NormalizationClass::H0);
}

HarmonicMap v_alpha(int n, Complex alpha, int order) {
    if (n < 3) throw std::invalid_argument("v_alpha requires n >= 3");
    const double cap = 1.0 / double(2 * n - 1);
    const double mod = std::abs(alpha);
    if (mod <= 0.0 || mod > cap + 1e-15) {
        throw std::invalid_argument("v_alpha requires 0 < |alpha| <= 1/(2n-1) = " +
                                    std::to_string(cap));
    }
    if (order < n) throw std::invalid_argument("v_alpha needs order >= n");
    // alpha z^n / (1-z): alpha at every degree >= n.
    std::vector<Complex> zn(n + 1);
    zn[n] = alpha;
    const PowerSeries g = div(PowerSeries::polynomial(std::move(zn), order), one_minus_z_pow(1, order));
    return make_map(half_plane_l(order), g, NormalizationClass::H0);
}

double coeff_A(int n) { return double(coeff_A6(n)) / 6.0; }
double coeff_B(int n) { return double(coeff_B6(n)) / 6.0; }

long long coeff_A6(int n) {
    if (n < 1) throw std::invalid_argument("coeff_A needs n >= 1");
    return static_cast<long long>(n + 1) * (2LL * n + 1);
}

long long coeff_B6(int n) {
    if (n < 1) throw std::invalid_argument("coeff_B needs n >= 1");
    return static_cast<long long>(n - 1) * (2LL * n - 1);
}

Complex phi_K(int n, Complex eps) {
    if (n < 2) throw std::invalid_argument("phi_K needs n >= 2");
    return ((2.0 * n * n + 1.0) * (1.0 + eps) + 3.0 * n * (1.0 - eps)) / 6.0;
}

Complex phi_L(int n, Complex eps) {
    if (n < 2) throw std::invalid_argument("phi_L needs n >= 2");
    return (double(n) * (1.0 - eps) + (1.0 + eps)) / 2.0;
}

}  // namespace hmap
