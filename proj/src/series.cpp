#include "hmap/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hmap {

namespace {

void require_finite(const std::vector<Complex>& coeffs) {
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (!std::isfinite(coeffs[n].real()) || !std::isfinite(coeffs[n].imag())) {
            throw std::invalid_argument("non-finite coefficient at degree " + std::to_string(n));
        }
    }
}

void require_order(int order) {
    if (order < 0 || order > kMaxOrder) {
        throw std::invalid_argument("truncation order " + std::to_string(order) +
                                    " outside [0, " + std::to_string(kMaxOrder) + "]");
    }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
    require_order(static_cast<int>(coeffs_.size()) - 1);
    require_finite(coeffs_);
}

PowerSeries PowerSeries::zero(int order) {
    require_order(order);
    return PowerSeries(std::vector<Complex>(order + 1));
}

PowerSeries PowerSeries::polynomial(std::vector<Complex> coeffs, int order) {
    require_order(order);
    if (static_cast<int>(coeffs.size()) > order + 1) {
        throw std::invalid_argument("polynomial degree exceeds requested order");
    }
    coeffs.resize(order + 1);
    return PowerSeries(std::move(coeffs));
}

PowerSeries PowerSeries::polynomial(std::initializer_list<double> coeffs, int order) {
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (double x : coeffs) c.emplace_back(x, 0.0);
    return polynomial(std::move(c), order);
}

PowerSeries PowerSeries::identity(int order) {
    return polynomial({0.0, 1.0}, order);
}

PowerSeries operator+(const PowerSeries& p, const PowerSeries& q) {
    const int m = std::min(p.order(), q.order());
    std::vector<Complex> c(m + 1);
    for (int n = 0; n <= m; ++n) c[n] = p.coeff(n) + q.coeff(n);
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& p, const PowerSeries& q) {
    return p + (-q);
}

PowerSeries operator-(const PowerSeries& p) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) x = -x;
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& p, const PowerSeries& q) {
    const int m = std::min(p.order(), q.order());
    std::vector<Complex> c(m + 1);
    for (int k = 0; k <= m; ++k) {
        Complex s{};
        for (int i = 0; i <= k; ++i) s += p.coeff(i) * q.coeff(k - i);
        c[k] = s;
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(Complex s, const PowerSeries& p) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) x *= s;
    return PowerSeries(std::move(c));
}

PowerSeries add(const PowerSeries& p, const PowerSeries& q) { return p + q; }
PowerSeries mul(const PowerSeries& p, const PowerSeries& q) { return p * q; }

PowerSeries derivative(const PowerSeries& p) {
    if (p.order() < 1) throw std::invalid_argument("cannot differentiate constant-only truncation");
    std::vector<Complex> c(p.order());
    for (int n = 0; n < p.order(); ++n) c[n] = double(n + 1) * p.coeff(n + 1);
    return PowerSeries(std::move(c));
}

PowerSeries integrate(const PowerSeries& p) {
    std::vector<Complex> c(p.order() + 2);
    c[0] = Complex{};
    for (int n = 0; n <= p.order(); ++n) c[n + 1] = p.coeff(n) / double(n + 1);
    return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& p, const PowerSeries& w) {
    if (w.coeff(0) != Complex{}) throw std::invalid_argument("composition requires omega(0)=0");
    return compose_poly(p, w);
}

PowerSeries compose_poly(const PowerSeries& p, const PowerSeries& t) {
    const int m = std::min(p.order(), t.order());
    const PowerSeries tm = truncated(t, m);
    PowerSeries r = PowerSeries::polynomial(std::vector<Complex>{p.coeff(m)}, m);
    for (int k = m - 1; k >= 0; --k) {
        r = r * tm + PowerSeries::polynomial(std::vector<Complex>{p.coeff(k)}, m);
    }
    return r;
}

PowerSeries div(const PowerSeries& p, const PowerSeries& q) {
    if (q.coeff(0) == Complex{}) {
        throw std::invalid_argument("division by series with zero constant term");
    }
    const int m = std::min(p.order(), q.order());
    std::vector<Complex> r(m + 1);
    for (int k = 0; k <= m; ++k) {
        Complex s = p.coeff(k);
        for (int j = 1; j <= k; ++j) s -= q.coeff(j) * r[k - j];
        r[k] = s / q.coeff(0);
    }
    return PowerSeries(std::move(r));
}

PowerSeries conjugate_coeffs(const PowerSeries& p) {
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) x = std::conj(x);
    return PowerSeries(std::move(c));
}

PowerSeries truncated(const PowerSeries& p, int order) {
    if (order >= p.order()) return p;
    require_order(order);
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().begin() + order + 1);
    return PowerSeries(std::move(c));
}

Complex eval(const PowerSeries& p, Complex z) {
    Complex r{};
    for (int n = p.order(); n >= 0; --n) r = r * z + p.coeff(n);
    return r;
}

EvalResult eval_checked(const PowerSeries& p, Complex z) {
    EvalResult out;
    out.value = eval(p, z);
    out.outside_closed_disk = std::abs(z) > 1.0 + 1e-12;
    return out;
}

}  // namespace hmap
