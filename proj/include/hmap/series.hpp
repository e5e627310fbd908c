#ifndef HMAP_SERIES_HPP
#define HMAP_SERIES_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace hmap {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
inline constexpr int kMaxOrder = 4096;

/// Truncated Taylor series on the unit disk, coefficients indexed by degree
/// 0..order. All coefficients are finite; mixed-order arithmetic truncates
/// to the shorter operand rather than padding.
class PowerSeries {
  public:
    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries zero(int order);
    /// Exact polynomial zero-padded to the requested order.
    static PowerSeries polynomial(std::vector<Complex> coeffs, int order);
    static PowerSeries polynomial(std::initializer_list<double> coeffs, int order);
    /// The monomial z.
    static PowerSeries identity(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^n; zero beyond the truncation order.
    Complex coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : Complex{};
    }
    std::span<const Complex> coeffs() const { return coeffs_; }

  private:
    std::vector<Complex> coeffs_;
};

struct EvalResult {
    Complex value;
    bool outside_closed_disk = false;
};

PowerSeries operator+(const PowerSeries& p, const PowerSeries& q);
PowerSeries operator-(const PowerSeries& p, const PowerSeries& q);
PowerSeries operator*(const PowerSeries& p, const PowerSeries& q);
PowerSeries operator*(Complex s, const PowerSeries& p);
PowerSeries operator-(const PowerSeries& p);

PowerSeries add(const PowerSeries& p, const PowerSeries& q);
PowerSeries mul(const PowerSeries& p, const PowerSeries& q);

/// Termwise derivative; order drops by one. Errors on order-zero input.
PowerSeries derivative(const PowerSeries& p);

/// Antiderivative with constant term zero; order grows by one.
PowerSeries integrate(const PowerSeries& p);

/// p(w(z)) truncated at min(order p, order w); requires w(0) = 0.
PowerSeries compose(const PowerSeries& p, const PowerSeries& w);

/// Horner evaluation of p (as a polynomial) at the series t. No restriction
/// on t(0); truncation error grows with |t(0)|, so callers recentering
/// through a disk automorphism should budget order accordingly.
PowerSeries compose_poly(const PowerSeries& p, const PowerSeries& t);

/// Series quotient by forward substitution; requires q(0) != 0.
PowerSeries div(const PowerSeries& p, const PowerSeries& q);

/// Coefficientwise complex conjugate.
PowerSeries conjugate_coeffs(const PowerSeries& p);

/// Copy truncated to a lower order.
PowerSeries truncated(const PowerSeries& p, int order);

Complex eval(const PowerSeries& p, Complex z);
EvalResult eval_checked(const PowerSeries& p, Complex z);

}  // namespace hmap

#endif
