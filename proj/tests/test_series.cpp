#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hmap/series.hpp"

using hmap::Complex;
using hmap::PowerSeries;

namespace {

// Independent O(N^2) convolution oracle; deliberately avoids hmap::mul.
std::vector<Complex> brute_convolution(const PowerSeries& p, const PowerSeries& q, int upto) {
    std::vector<Complex> out(upto + 1);
    for (int i = 0; i <= p.order(); ++i) {
        for (int j = 0; j <= q.order(); ++j) {
            if (i + j <= upto) out[i + j] += p.coeff(i) * q.coeff(j);
        }
    }
    return out;
}

PowerSeries random_series(std::mt19937& rng, int order, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<Complex> c(order + 1);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    return PowerSeries(std::move(c));
}

PowerSeries geometric_series(int order) {
    // 1/(1-z)
    return hmap::div(PowerSeries::polynomial({1.0}, order),
                     PowerSeries::polynomial({1.0, -1.0}, order));
}

PowerSeries koebe(int order) {
    PowerSeries den = PowerSeries::polynomial({1.0, -1.0}, order);
    return hmap::div(PowerSeries::identity(order), den * den);
}

}  // namespace

TEST_CASE("add truncates to the shorter operand") {
    PowerSeries a = PowerSeries::polynomial({1.0, 1.0}, 1);
    PowerSeries b = PowerSeries::polynomial({1.0, -1.0}, 1);
    PowerSeries s = a + b;
    CHECK(s.order() == 1);
    CHECK(s.coeff(0) == Complex(2.0, 0.0));
    CHECK(s.coeff(1) == Complex(0.0, 0.0));

    PowerSeries p = PowerSeries::polynomial({0.3, -0.7, 0.1}, 5);
    PowerSeries z5 = PowerSeries::zero(5);
    PowerSeries t = p + z5;
    for (int n = 0; n <= 5; ++n) CHECK(t.coeff(n) == p.coeff(n));

    PowerSeries c = PowerSeries::polynomial({0.0, 1.0, 2.0}, 2);
    PowerSeries d = PowerSeries::polynomial({1.0, 1.0}, 1);
    PowerSeries e = c + d;
    CHECK(e.order() == 1);
    CHECK(e.coeff(0) == Complex(1.0, 0.0));
    CHECK(e.coeff(1) == Complex(2.0, 0.0));
}

TEST_CASE("mul basic products") {
    PowerSeries one_plus_z = PowerSeries::polynomial({1.0, 1.0}, 4);
    PowerSeries sq = one_plus_z * one_plus_z;
    CHECK(sq.coeff(0).real() == doctest::Approx(1.0));
    CHECK(sq.coeff(1).real() == doctest::Approx(2.0));
    CHECK(sq.coeff(2).real() == doctest::Approx(1.0));
    CHECK(std::abs(sq.coeff(3)) == doctest::Approx(0.0));

    // 1/(1-z)^2 has coefficients n+1
    PowerSeries g = geometric_series(32);
    PowerSeries g2 = g * g;
    auto oracle = brute_convolution(g, g, 32);
    for (int n = 0; n <= 32; ++n) {
        CHECK(std::abs(g2.coeff(n) - oracle[n]) <= 1e-12 * (1.0 + std::abs(oracle[n])));
        CHECK(g2.coeff(n).real() == doctest::Approx(double(n + 1)));
    }
}

TEST_CASE("majorant product (1+z)/(1-z)^3 * z/(1-z) has coefficients (n-1)n(2n-1)/6") {
    const int N = 40;
    PowerSeries one_minus_z = PowerSeries::polynomial({1.0, -1.0}, N);
    PowerSeries den3 = one_minus_z * one_minus_z * one_minus_z;
    PowerSeries lhs = hmap::div(PowerSeries::polynomial({1.0, 1.0}, N), den3) *
                      hmap::div(PowerSeries::identity(N), one_minus_z);
    for (int n = 2; n <= 30; ++n) {
        const double expect = double(n - 1) * n * (2 * n - 1) / 6.0;
        CHECK(lhs.coeff(n - 1).real() == doctest::Approx(expect).epsilon(1e-9));
        CHECK(std::abs(lhs.coeff(n - 1).imag()) < 1e-12);
    }
}

TEST_CASE("mul matches brute-force convolution on random series") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> ord(1, 64);
    for (int trial = 0; trial < 200; ++trial) {
        PowerSeries p = random_series(rng, ord(rng));
        PowerSeries q = random_series(rng, ord(rng));
        PowerSeries r = p * q;
        auto oracle = brute_convolution(p, q, r.order());
        for (int n = 0; n <= r.order(); ++n) {
            CHECK(std::abs(r.coeff(n) - oracle[n]) <= 1e-12 * (1.0 + std::abs(oracle[n])));
        }
    }
}

TEST_CASE("eval of product agrees with product of evals within the tail bound") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        PowerSeries p = random_series(rng, 24);
        PowerSeries q = random_series(rng, 24);
        PowerSeries pq = p * q;
        auto full = brute_convolution(p, q, p.order() + q.order());
        std::uniform_real_distribution<double> u(-0.5, 0.5);
        Complex z(u(rng), 0.0);
        double tail = 0.0;
        for (int k = pq.order() + 1; k < int(full.size()); ++k) {
            tail += std::abs(full[k]) * std::pow(std::abs(z), k);
        }
        Complex lhs = hmap::eval(pq, z);
        Complex rhs = hmap::eval(p, z) * hmap::eval(q, z);
        CHECK(std::abs(lhs - rhs) <= tail + 1e-12);
    }
}

TEST_CASE("derivative") {
    CHECK(hmap::derivative(PowerSeries::identity(3)).coeff(0) == Complex(1.0, 0.0));

    PowerSeries kp = hmap::derivative(koebe(40));
    for (int n = 1; n <= 40; ++n) {
        CHECK(kp.coeff(n - 1).real() == doctest::Approx(double(n) * n).epsilon(1e-10));
    }

    PowerSeries q = hmap::derivative(PowerSeries::polynomial({1.0, 0.0, 3.0}, 2));
    CHECK(q.order() == 1);
    CHECK(std::abs(q.coeff(0)) == doctest::Approx(0.0));
    CHECK(q.coeff(1).real() == doctest::Approx(6.0));

    CHECK_THROWS_WITH_AS(hmap::derivative(PowerSeries::polynomial({2.0}, 0)),
                         "cannot differentiate constant-only truncation", std::invalid_argument);
}

TEST_CASE("derivative matches central finite differences") {
    std::mt19937 rng(99);
    PowerSeries p = random_series(rng, 40);
    PowerSeries dp = hmap::derivative(p);
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    const double h = 1e-5;
    for (int i = 0; i < 5; ++i) {
        Complex z(u(rng), u(rng));
        Complex fd = (hmap::eval(p, z + h) - hmap::eval(p, z - h)) / (2.0 * h);
        Complex an = hmap::eval(dp, z);
        CHECK(std::abs(fd - an) <= 1e-6 * (1.0 + std::abs(an)));
    }
}

TEST_CASE("integrate") {
    PowerSeries one = PowerSeries::polynomial({1.0}, 0);
    PowerSeries I = hmap::integrate(one);
    CHECK(I.order() == 1);
    CHECK(std::abs(I.coeff(0)) == 0.0);
    CHECK(I.coeff(1) == Complex(1.0, 0.0));

    std::mt19937 rng(5);
    PowerSeries p = random_series(rng, 30);
    // integrate(derivative p) = p - p(0) at matching truncation
    PowerSeries back = hmap::integrate(hmap::derivative(p));
    CHECK(back.order() == p.order());
    CHECK(std::abs(back.coeff(0)) == 0.0);
    for (int n = 1; n <= p.order(); ++n) {
        CHECK(std::abs(back.coeff(n) - p.coeff(n)) <= 1e-15 * (1.0 + std::abs(p.coeff(n))));
    }
    // derivative(integrate p) = p, index bookkeeping both ways
    PowerSeries forth = hmap::derivative(hmap::integrate(p));
    CHECK(forth.order() == p.order());
    for (int n = 0; n <= p.order(); ++n) {
        CHECK(std::abs(forth.coeff(n) - p.coeff(n)) <= 1e-15 * (1.0 + std::abs(p.coeff(n))));
    }
}

TEST_CASE("compose") {
    std::mt19937 rng(17);
    PowerSeries p = random_series(rng, 20);
    PowerSeries idz = PowerSeries::identity(20);
    PowerSeries same = hmap::compose(p, idz);
    for (int n = 0; n <= 20; ++n) {
        CHECK(std::abs(same.coeff(n) - p.coeff(n)) <= 1e-14 * (1.0 + std::abs(p.coeff(n))));
    }

    // 1/(1-z) composed with z^2 -> 1 + z^2 + z^4 + ...
    PowerSeries geo = geometric_series(16);
    PowerSeries z2 = PowerSeries::polynomial({0.0, 0.0, 1.0}, 16);
    PowerSeries even = hmap::compose(geo, z2);
    for (int n = 0; n <= 16; ++n) {
        CHECK(even.coeff(n).real() == doctest::Approx(n % 2 == 0 ? 1.0 : 0.0));
    }

    // k(z/2) evaluated at z = 0.3 equals k(0.15)
    PowerSeries k = koebe(60);
    PowerSeries half = PowerSeries::polynomial({0.0, 0.5}, 60);
    Complex via_series = hmap::eval(hmap::compose(k, half), Complex(0.3, 0.0));
    Complex direct = Complex(0.15, 0.0) / ((1.0 - 0.15) * (1.0 - 0.15));
    CHECK(std::abs(via_series - direct) < 1e-10);

    CHECK_THROWS_WITH_AS(hmap::compose(p, PowerSeries::polynomial({0.1, 1.0}, 20)),
                         "composition requires omega(0)=0", std::invalid_argument);
}

TEST_CASE("compose agrees with pointwise evaluation for bounded Schwarz-like w") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        PowerSeries p = random_series(rng, 48);
        // w(0)=0 and coefficients decaying so that |w| stays well inside the disk
        std::vector<Complex> wc(49);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int j = 1; j <= 48; ++j) wc[j] = 0.5 * Complex(u(rng), u(rng)) * std::pow(0.5, j);
        PowerSeries w(std::move(wc));
        std::uniform_real_distribution<double> zr(-0.4, 0.4);
        Complex z(zr(rng), zr(rng));
        Complex lhs = hmap::eval(hmap::compose(p, w), z);
        Complex rhs = hmap::eval(p, hmap::eval(w, z));
        CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
}

TEST_CASE("div") {
    std::mt19937 rng(31);
    PowerSeries p = random_series(rng, 25);
    PowerSeries one = PowerSeries::polynomial({1.0}, 25);
    PowerSeries same = hmap::div(p, one);
    for (int n = 0; n <= 25; ++n) CHECK(same.coeff(n) == p.coeff(n));

    PowerSeries geo = hmap::div(PowerSeries::identity(20), PowerSeries::polynomial({1.0, -1.0}, 20));
    CHECK(std::abs(geo.coeff(0)) == 0.0);
    for (int n = 1; n <= 20; ++n) CHECK(geo.coeff(n).real() == doctest::Approx(1.0));

    CHECK_THROWS_WITH_AS(hmap::div(p, PowerSeries::identity(25)),
                         "division by series with zero constant term", std::invalid_argument);
}

TEST_CASE("div then mul round-trips") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        PowerSeries p = random_series(rng, 32);
        PowerSeries q = random_series(rng, 32);
        // keep q safely invertible
        std::vector<Complex> qc(q.coeffs().begin(), q.coeffs().end());
        qc[0] = Complex(1.5, 0.0) + 0.1 * qc[0];
        for (int j = 1; j < int(qc.size()); ++j) qc[j] *= 0.5;
        PowerSeries qs(std::move(qc));
        PowerSeries back = hmap::div(p, qs) * qs;
        for (int n = 0; n <= 32; ++n) {
            CHECK(std::abs(back.coeff(n) - p.coeff(n)) <= 1e-10 * (1.0 + std::abs(p.coeff(n))));
        }
    }
}

TEST_CASE("eval") {
    CHECK(hmap::eval(PowerSeries::identity(8), Complex(0.5, 0.0)) == Complex(0.5, 0.0));

    PowerSeries k = koebe(200);
    CHECK(std::abs(hmap::eval(k, Complex(0.5, 0.0)) - Complex(2.0, 0.0)) < 1e-8);

    std::mt19937 rng(3);
    PowerSeries p = random_series(rng, 12);
    CHECK(hmap::eval(p, Complex(0.0, 0.0)) == p.coeff(0));

    CHECK_FALSE(hmap::eval_checked(p, Complex(1.0, 0.0)).outside_closed_disk);
    CHECK_FALSE(hmap::eval_checked(p, Complex(1.0 - 1e-6, 0.0)).outside_closed_disk);
    CHECK(hmap::eval_checked(p, Complex(1.1, 0.0)).outside_closed_disk);
}

TEST_CASE("construction rejects non-finite coefficients and bad orders") {
    std::vector<Complex> bad{Complex(0.0, 0.0), Complex(std::nan(""), 0.0)};
    CHECK_THROWS_AS(PowerSeries(std::move(bad)), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries::zero(hmap::kMaxOrder + 1), std::invalid_argument);
}
