#include "hmap/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "hmap/catalog.hpp"

namespace hmap {

namespace {

constexpr double kJunkTrustFactor = 0.6;
constexpr double kConvexCrossTol = 5e-3;
constexpr double kTurnExcess = 8.0;

using Evaluator = std::function<Complex(Complex)>;

// Contribution of the top stored coefficients at radius r; when it rivals the
// polyline edge length the circle image reflects truncation, not the map.
double junk_estimate(std::span<const double> coeff_mod, double r) {
    const int N = static_cast<int>(coeff_mod.size()) - 1;
    double s = 0.0;
    for (int n = std::max(1, N - 7); n <= N; ++n) s += coeff_mod[n] * std::pow(r, n);
    return s;
}

std::vector<double> coeff_moduli(const PowerSeries& s) {
    std::vector<double> m(s.order() + 1);
    for (int n = 0; n <= s.order(); ++n) m[n] = std::abs(s.coeff(n));
    return m;
}

std::vector<double> coeff_moduli(const HarmonicMap& f) {
    std::vector<double> m(f.h.order() + 1);
    for (int n = 0; n <= f.h.order(); ++n) m[n] = std::abs(f.h.coeff(n)) + std::abs(f.g.coeff(n));
    return m;
}

struct Circle {
    double r;
    std::vector<Complex> pre;  // sample points
    std::vector<Complex> img;  // their images
};

Circle sample_circle(const Evaluator& F, double r, int angles) {
    Circle c;
    c.r = r;
    c.pre.resize(angles);
    c.img.resize(angles);
    for (int j = 0; j < angles; ++j) {
        c.pre[j] = std::polar(r, 2.0 * M_PI * j / angles);
        c.img[j] = F(c.pre[j]);
    }
    return c;
}

// Proper crossing test for segments a1b1, a2b2.
bool segments_cross(Complex a1, Complex b1, Complex a2, Complex b2) {
    const auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
    const Complex d1 = b1 - a1, d2 = b2 - a2;
    const double c1 = cross(d1, a2 - a1), c2 = cross(d1, b2 - a1);
    const double c3 = cross(d2, a1 - a2), c4 = cross(d2, b1 - a2);
    return c1 * c2 < 0.0 && c3 * c4 < 0.0;
}

std::optional<std::pair<int, int>> find_self_crossing(const std::vector<Complex>& P) {
    const int M = static_cast<int>(P.size());
    for (int i = 0; i < M; ++i) {
        const Complex a1 = P[i], b1 = P[(i + 1) % M];
        const double lox = std::min(a1.real(), b1.real()), hix = std::max(a1.real(), b1.real());
        const double loy = std::min(a1.imag(), b1.imag()), hiy = std::max(a1.imag(), b1.imag());
        for (int j = i + 2; j < M; ++j) {
            if (i == 0 && j == M - 1) continue;
            const Complex a2 = P[j], b2 = P[(j + 1) % M];
            if (std::max(a2.real(), b2.real()) < lox || std::min(a2.real(), b2.real()) > hix ||
                std::max(a2.imag(), b2.imag()) < loy || std::min(a2.imag(), b2.imag()) > hiy) {
                continue;
            }
            if (segments_cross(a1, b1, a2, b2)) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

// Total turning of the closed polyline / 2pi and the absolute turning sum.
// Returns false on a degenerate (zero-length) edge.
bool turning(const std::vector<Complex>& P, double& rotation, double& turn_abs) {
    const int M = static_cast<int>(P.size());
    double total = 0.0, tabs = 0.0;
    for (int j = 0; j < M; ++j) {
        const Complex e0 = P[(j + 1) % M] - P[j];
        const Complex e1 = P[(j + 2) % M] - P[(j + 1) % M];
        if (e0 == Complex{} || e1 == Complex{}) return false;
        const double a = std::arg(e1 / e0);
        total += a;
        tabs += std::abs(a);
    }
    rotation = total / (2.0 * M_PI);
    turn_abs = tabs;
    return true;
}

double winding_about(const std::vector<Complex>& P, Complex w0) {
    const int M = static_cast<int>(P.size());
    double total = 0.0;
    for (int j = 0; j < M; ++j) {
        total += std::arg((P[(j + 1) % M] - w0) / (P[j] - w0));
    }
    return total / (2.0 * M_PI);
}

// Collision search over all grid points with a spatial hash (cell 4 tol):
// two points mapping within tol while their preimages are 10 tol apart.
std::optional<Witness> find_collision(const std::vector<Circle>& circles, double tol) {
    struct Entry {
        Complex z, w;
    };
    std::vector<Entry> pts;
    for (const auto& c : circles) {
        for (std::size_t j = 0; j < c.pre.size(); ++j) pts.push_back({c.pre[j], c.img[j]});
    }
    const double cell = 4.0 * tol;
    const auto key = [&](double x, double y) {
        const auto ix = static_cast<unsigned long long>(static_cast<long long>(std::floor(x / cell)));
        const auto iy = static_cast<unsigned long long>(static_cast<long long>(std::floor(y / cell)));
        return (ix << 32) ^ (iy & 0xffffffffULL);
    };
    std::unordered_map<unsigned long long, std::vector<int>> hash;
    hash.reserve(pts.size() * 2);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const Complex w = pts[i].w;
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const auto it = hash.find(key(w.real() + dx * cell, w.imag() + dy * cell));
                if (it == hash.end()) continue;
                for (int other : it->second) {
                    if (std::abs(pts[other].w - w) <= tol &&
                        std::abs(pts[other].z - pts[i].z) > 10.0 * tol) {
                        return Witness{pts[other].z, pts[i].z};
                    }
                }
            }
        }
        hash[key(w.real(), w.imag())].push_back(i);
    }
    return std::nullopt;
}

UnivalenceReport univalence_impl(const Evaluator& F, std::span<const double> coeff_mod,
                                 const GridSpec& grid) {
    UnivalenceReport rep;
    const auto radii = grid_radii(grid);
    std::vector<Circle> circles;
    circles.reserve(radii.size());
    for (double r : radii) circles.push_back(sample_circle(F, r, grid.angles));

    if (auto w = find_collision(circles, grid.tol)) {
        rep.verdict = Verdict::Fail;
        rep.witness = *w;
        rep.reason = "image collision";
        return rep;
    }

    bool any_untrusted = false;
    for (const auto& c : circles) {
        double min_edge = INFINITY;
        const int M = static_cast<int>(c.img.size());
        for (int j = 0; j < M; ++j) min_edge = std::min(min_edge, std::abs(c.img[(j + 1) % M] - c.img[j]));
        if (min_edge == 0.0) {
            rep.verdict = Verdict::Fail;
            rep.witness = Witness{c.pre[0], c.pre[1]};
            rep.reason = "degenerate image edge";
            return rep;
        }
        if (junk_estimate(coeff_mod, c.r) > kJunkTrustFactor * min_edge) {
            any_untrusted = true;  // truncation noise rivals the geometry here
            continue;
        }

        if (auto ij = find_self_crossing(c.img)) {
            rep.verdict = Verdict::Fail;
            rep.witness = Witness{c.pre[ij->first], c.pre[ij->second]};
            rep.reason = "circle image self-crossing";
            return rep;
        }

        double rot = 0.0, tabs = 0.0;
        if (!turning(c.img, rot, tabs)) {
            rep.verdict = Verdict::Fail;
            rep.witness = Witness{c.pre[0], c.pre[1]};
            rep.reason = "degenerate image edge";
            return rep;
        }
        if (std::abs(rot - std::round(rot)) < 0.01 && std::llround(rot) != 1) {
            rep.verdict = Verdict::Fail;
            rep.witness = Witness{c.pre[0], c.pre[0]};
            rep.reason = "tangent winding " + std::to_string(std::llround(rot));
            return rep;
        }
        if (tabs > 2.0 * M_PI + kTurnExcess) {
            any_untrusted = true;
            continue;
        }

        // interior probes: every image point must be covered exactly once
        for (double frac : {0.30, 0.50, 0.65}) {
            const Circle probes = sample_circle(F, frac * c.r, 16);
            for (std::size_t q = 0; q < probes.img.size(); ++q) {
                const Complex w0 = probes.img[q];
                double dmin = INFINITY;
                int jmin = 0;
                for (int j = 0; j < M; ++j) {
                    const double d = std::abs(c.img[j] - w0);
                    if (d < dmin) {
                        dmin = d;
                        jmin = j;
                    }
                }
                const double local_edge =
                    std::max(std::abs(c.img[(jmin + 1) % M] - c.img[jmin]),
                             std::abs(c.img[(jmin + M - 1) % M] - c.img[jmin]));
                if (dmin < 3.0 * local_edge) continue;  // too near the curve to trust
                const double wv = winding_about(c.img, w0);
                if (std::abs(wv - std::round(wv)) > 0.25) continue;
                if (std::llround(wv) != 1) {
                    rep.verdict = Verdict::Fail;
                    rep.witness = Witness{probes.pre[q], c.pre[jmin]};
                    rep.reason = "interior point covered " + std::to_string(std::llround(wv)) +
                                 " times";
                    return rep;
                }
            }
        }
    }

    rep.verdict = any_untrusted ? Verdict::Inconclusive : Verdict::Pass;
    rep.reason = any_untrusted ? "truncation noise beyond trust horizon" : "";
    return rep;
}

ConvexityReport convexity_impl(const Evaluator& F, std::span<const double> coeff_mod, double r,
                               int angles) {
    if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("convexity check needs 0 < r < 1");
    if (angles < 8) throw std::invalid_argument("convexity check needs >= 8 angles");
    ConvexityReport rep;
    rep.re_ratio_min = INFINITY;
    const int rungs = 6;
    double weakest_margin = INFINITY;
    bool any_not_convex = false, any_untrusted = false;
    for (int k = 1; k <= rungs; ++k) {
        const double rho = r * k / rungs;
        const Circle c = sample_circle(F, rho, angles);
        const int M = angles;
        ConvexityRung rung{rho, Verdict::Pass, INFINITY, true};

        double min_edge = INFINITY;
        for (int j = 0; j < M; ++j) min_edge = std::min(min_edge, std::abs(c.img[(j + 1) % M] - c.img[j]));
        if (min_edge == 0.0 || junk_estimate(coeff_mod, rho) > kJunkTrustFactor * min_edge) {
            rung.trusted = false;
            rung.verdict = Verdict::Inconclusive;
            any_untrusted = true;
            rep.ladder.push_back(rung);
            continue;
        }

        double cmin = INFINITY, cmax = -INFINITY;
        for (int j = 0; j < M; ++j) {
            const Complex e0 = c.img[(j + 1) % M] - c.img[j];
            const Complex e1 = c.img[(j + 2) % M] - c.img[(j + 1) % M];
            const double cr = (e0.real() * e1.imag() - e0.imag() * e1.real()) /
                              (std::abs(e0) * std::abs(e1));
            cmin = std::min(cmin, cr);
            cmax = std::max(cmax, cr);
        }
        // accept either traversal orientation
        const double margin = std::max(cmin, -cmax);
        rung.min_cross = margin;
        rung.verdict = margin >= -kConvexCrossTol ? Verdict::Pass : Verdict::Fail;
        if (rung.verdict == Verdict::Fail) any_not_convex = true;
        if (margin < weakest_margin) {
            weakest_margin = margin;
            rep.weakest_r = rho;
        }
        // necessary condition for membership in the convex class
        for (int j = 0; j < M; ++j) {
            rep.re_ratio_min = std::min(rep.re_ratio_min, (c.img[j] / c.pre[j]).real());
        }
        rep.ladder.push_back(rung);
    }
    rep.verdict = any_not_convex ? Verdict::Fail
                                 : (any_untrusted ? Verdict::Inconclusive : Verdict::Pass);
    rep.re_condition_ok = std::isfinite(rep.re_ratio_min) && rep.re_ratio_min > 0.5 - 1e-9;
    return rep;
}

}  // namespace

UnivalenceReport univalence_check(const PowerSeries& s, const GridSpec& grid) {
    const auto mods = coeff_moduli(s);
    return univalence_impl([&](Complex z) { return eval(s, z); }, mods, grid);
}

UnivalenceReport univalence_check(const HarmonicMap& f, const GridSpec& grid) {
    const auto mods = coeff_moduli(f);
    return univalence_impl([&](Complex z) { return eval_map(f, z); }, mods, grid);
}

ConvexityReport convexity_check(const PowerSeries& s, double r, int angles) {
    const auto mods = coeff_moduli(s);
    return convexity_impl([&](Complex z) { return eval(s, z); }, mods, r, angles);
}

ConvexityReport convexity_check(const HarmonicMap& f, double r, int angles) {
    const auto mods = coeff_moduli(f);
    return convexity_impl([&](Complex z) { return eval_map(f, z); }, mods, r, angles);
}

GridSpec scan_univalence_grid() { return GridSpec{16, 0.80, 96, 1e-6}; }

EpsilonVerdictTable stability_scan(const HarmonicMap& f, std::span<const Complex> eps_samples,
                                   const GridSpec& grid, double convex_r) {
    EpsilonVerdictTable table;
    table.rows.reserve(eps_samples.size());
    for (Complex eps : eps_samples) {
        const PowerSeries slice = analytic_slice(f, eps);
        const UnivalenceReport uni = univalence_check(slice, grid);
        const ConvexityReport conv = convexity_check(slice, convex_r, grid.angles);
        table.rows.push_back({eps, uni.verdict, conv.verdict, uni.witness});
    }
    return table;
}

double m_slice_a7(Complex eps) { return std::abs(7.0 + (5.0 / 21.0) * eps); }

MDerivativeTest m_slice_derivative_test(Complex eps, double r, int order) {
    if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("derivative test needs 0 < r < 1");
    MDerivativeTest out;
    const double growth = (1.0 + r) / std::pow(1.0 - r, 3.0);
    out.lhs_closed = std::abs(1.0 - (r * (1.0 - r - r * r) / 3.0) * eps) * growth;
    const HarmonicMap M = mapping_M(order);
    out.lhs_series = std::abs(eval(derivative(analytic_slice(M, eps)), Complex(r, 0.0)));
    out.rhs = growth;
    out.violated = out.lhs_closed > out.rhs;
    return out;
}

VAlphaRatio v_alpha_ratio(int n, Complex alpha, Complex eps, double r, int order) {
    if (eps == Complex{}) throw std::invalid_argument("limit formula requires eps != 0");
    if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("ratio needs 0 < r < 1");
    const HarmonicMap V = v_alpha(n, alpha, order);
    // angle that turns alpha eps z0^{n-1} negative real; among the n-1 choices
    // keep z0 away from the singularity at z = 1
    const double base = (M_PI - std::arg(alpha) - std::arg(eps)) / (n - 1);
    double phi = base;
    double best = -INFINITY;
    for (int k = 0; k < n - 1; ++k) {
        const double cand = base + 2.0 * M_PI * k / (n - 1);
        const double sep = std::abs(1.0 - std::polar(r, cand));
        if (sep > best) {
            best = sep;
            phi = cand;
        }
    }
    const Complex z0 = std::polar(r, phi);
    VAlphaRatio out;
    const double am = std::abs(alpha * eps);
    out.closed_form = (1.0 - am * std::pow(r, n - 1)) * (1.0 - r * std::cos(phi)) /
                      (1.0 + r * r - 2.0 * r * std::cos(phi));
    out.series_value = (eval(analytic_slice(V, eps), z0) / z0).real();
    out.series_tail_bound = (1.0 + am) * std::pow(r, order) / (1.0 - r);
    return out;
}

}  // namespace hmap
