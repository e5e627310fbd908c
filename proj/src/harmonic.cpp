#include "hmap/harmonic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hmap {

namespace {

void require_zero(Complex value, const char* what) {
    if (std::abs(value) > kNormalizationTol) {
        throw std::invalid_argument(std::string("normalization violated: ") + what + " = (" +
                                    std::to_string(value.real()) + ", " +
                                    std::to_string(value.imag()) + "), expected 0");
    }
}

void require_unimodular_le(Complex eps) {
    if (std::abs(eps) > 1.0 + 1e-12) throw std::invalid_argument("eps outside closed disk");
}

}  // namespace

HarmonicMap make_map(PowerSeries h, PowerSeries g, NormalizationClass cls) {
    if (h.order() != g.order()) {
        throw std::invalid_argument("analytic and co-analytic parts must share one truncation order");
    }
    if (cls != NormalizationClass::Unconstrained) {
        require_zero(h.coeff(0), "h(0)");
        require_zero(h.coeff(1) - 1.0, "h'(0) - 1");
        require_zero(g.coeff(0), "g(0)");
        if (cls == NormalizationClass::H0) require_zero(g.coeff(1), "g'(0)");
    }
    return HarmonicMap{std::move(h), std::move(g), cls};
}

bool is_normalized(const HarmonicMap& f, NormalizationClass cls, double tol) {
    if (cls == NormalizationClass::Unconstrained) return true;
    if (std::abs(f.h.coeff(0)) > tol) return false;
    if (std::abs(f.h.coeff(1) - 1.0) > tol) return false;
    if (std::abs(f.g.coeff(0)) > tol) return false;
    if (cls == NormalizationClass::H0 && std::abs(f.g.coeff(1)) > tol) return false;
    return true;
}

HarmonicMap epsilon_rotate(const HarmonicMap& f, Complex eps) {
    require_unimodular_le(eps);
    return HarmonicMap{f.h, eps * f.g, f.cls};
}

PowerSeries analytic_slice(const HarmonicMap& f, Complex eps) {
    require_unimodular_le(eps);
    return f.h + eps * f.g;
}

PowerSeries dilatation(const HarmonicMap& f) {
    if (f.h.order() < 1 || std::abs(f.h.coeff(1)) == 0.0) {
        throw std::invalid_argument("h' vanishes at origin");
    }
    return div(derivative(f.g), derivative(f.h));
}

double jacobian_at(const HarmonicMap& f, Complex z) {
    const double dh = std::abs(eval(derivative(f.h), z));
    const double dg = std::abs(eval(derivative(f.g), z));
    return dh * dh - dg * dg;
}

Complex eval_map(const HarmonicMap& f, Complex z) {
    return eval(f.h, z) + std::conj(eval(f.g, z));
}

HarmonicMap affine_shear(const HarmonicMap& f, Complex b1) {
    if (std::abs(b1) >= 1.0) throw std::invalid_argument("affine shear requires |b1| < 1");
    if (f.cls != NormalizationClass::H0) {
        throw std::invalid_argument("affine shear requires an H0-normalized map");
    }
    // f + conj(b1 f) = (h + conj(b1) g) + conj(b1 h + g)
    return make_map(f.h + std::conj(b1) * f.g, b1 * f.h + f.g, NormalizationClass::H);
}

}  // namespace hmap
