// SPDX-License-Identifier: Apache-2.0
#include "csr/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csr/errors.hpp"
#include "csr/quadrature.hpp"
#include "csr/replicate.hpp"
#include "csr/rng.hpp"

namespace csr {

namespace {

// upper truncation of the exponential-weight integrals; the integrands decay
// like poly(x) e^{-x}, so the tail beyond 64 is far below every tolerance
constexpr double kUpper = 64.0;

void check_nodes(int nodes) {
    if (nodes < 16) throw DomainError("nodes must be >= 16");
}

double rel_tol_for(int nodes) {
    const double exponent = 4.0 + static_cast<double>(nodes) / 16.0;
    return std::clamp(std::pow(10.0, -exponent), 1e-13, 1e-4);
}

enum class Integral { mean, second, weighted, swapped };

// One exponential-weight moment integral, factorized through the inner
// integral h(x) = int_0^inf g(xy) e^{-y} dy:
//   mean:     int e^{-x} h(x) dx          = E g(X1 Y1)
//   second:   int e^{-x} h(x)^2 dx        = E g(X1 Y1) g(X1 Y2)
//   weighted: int x e^{-x} h(x) dx        = E X1 g(X1 Y1)
//   swapped:  int e^{-x} hy(x) dx         = E Y1 g(X1 Y1),
// with hy(x) = int y g(xy) e^{-y} dy.
double raw_integral(const GFunction& g, Integral which, double rel) {
    return with_kernel(g, [&](auto k) {
        quad::Options inner;
        inner.rel_tol = std::max(rel * 1e-2, 1e-13);
        inner.abs_tol = 1e-15;
        quad::Options outer;
        outer.rel_tol = rel;
        outer.abs_tol = 1e-15;

        const bool weight_y = which == Integral::swapped;
        auto h = [&](double x) {
            std::vector<double> bp;
            for (double t : g.breakpoints)
                if (t > 0.0 && x > 0.0) bp.push_back(t / x);
            return quad::integrate(
                [&](double y) {
                    const double v = k(x * y) * std::exp(-y);
                    return weight_y ? y * v : v;
                },
                0.0, kUpper, bp, inner);
        };

        return quad::integrate(
            [&](double x) {
                const double hx = h(x);
                switch (which) {
                    case Integral::second: return hx * hx * std::exp(-x);
                    case Integral::weighted: return x * hx * std::exp(-x);
                    default: return hx * std::exp(-x);
                }
            },
            0.0, kUpper, outer);
    });
}

QuadResult with_doubling(const GFunction& g, int nodes,
                         double (*compute)(const GFunction&, double)) {
    check_nodes(nodes);
    const double fine = compute(g, rel_tol_for(nodes));
    const double coarse = compute(g, rel_tol_for(nodes / 2));
    return QuadResult{fine, std::abs(fine - coarse)};
}

double clamp_sigma2(double sigma2, double noise_scale) {
    if (sigma2 >= 0.0) return sigma2;
    const double slack = std::max(1e-12, noise_scale);
    if (sigma2 > -slack) return 0.0;
    throw NumericalError("sigma^2 = " + std::to_string(sigma2) +
                         " is negative beyond numerical slack");
}

} // namespace

QuadResult mu_quadrature(const GFunction& g, int nodes) {
    return with_doubling(g, nodes, [](const GFunction& gg, double rel) {
        return raw_integral(gg, Integral::mean, rel);
    });
}

QuadResult eta_quadrature(const GFunction& g, int nodes) {
    return with_doubling(g, nodes, [](const GFunction& gg, double rel) {
        const double mu = raw_integral(gg, Integral::mean, rel);
        return raw_integral(gg, Integral::second, rel) - mu * mu;
    });
}

QuadResult c_quadrature(const GFunction& g, int nodes, bool swap_roles) {
    if (swap_roles) {
        return with_doubling(g, nodes, [](const GFunction& gg, double rel) {
            const double mu = raw_integral(gg, Integral::mean, rel);
            return raw_integral(gg, Integral::swapped, rel) - mu;
        });
    }
    return with_doubling(g, nodes, [](const GFunction& gg, double rel) {
        const double mu = raw_integral(gg, Integral::mean, rel);
        return raw_integral(gg, Integral::weighted, rel) - mu;
    });
}

MomentSet quadrature_moments(const GFunction& g, int nodes) {
    const QuadResult mu = mu_quadrature(g, nodes);
    const QuadResult eta = eta_quadrature(g, nodes);
    const QuadResult c = c_quadrature(g, nodes);
    MomentSet m;
    m.mu = mu.value;
    m.eta = eta.value;
    m.c = c.value;
    m.err = std::max({mu.err, eta.err, c.err});
    m.method = MomentMethod::quadrature;
    m.sigma2 = clamp_sigma2(2.0 * (m.eta - m.c * m.c), 10.0 * m.err);
    m.degenerate = m.sigma2 < 1e-12;
    return m;
}

MomentSet compute_moments(const GFunction& g, int nodes) {
    check_nodes(nodes);
    if (g.closed_moments) return *g.closed_moments;
    return quadrature_moments(g, nodes);
}

MomentSet mc_oracle(const GFunction& g, std::int64_t samples, std::uint64_t seed) {
    if (samples < 10000) throw DomainError("mc_oracle needs samples >= 10^4");
    Rng rng(seed);
    CompensatedSum s1, s1_sq, s2, s2_sq, s3, s3_sq;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double x = rng.exponential();
        const double y = rng.exponential();
        const double y2 = rng.exponential();
        const double gxy = evaluate(g, x * y);
        const double gxy2 = evaluate(g, x * y2);
        if (!std::isfinite(gxy) || !std::isfinite(gxy2))
            throw DegenerateSpacingError("kernel hit an invalid argument (RNG fault)");
        s1.add(gxy);
        s1_sq.add(gxy * gxy);
        const double prod = gxy * gxy2;
        s2.add(prod);
        s2_sq.add(prod * prod);
        const double xg = x * gxy;
        s3.add(xg);
        s3_sq.add(xg * xg);
    }
    const double n = static_cast<double>(samples);
    auto mean_se = [n](const CompensatedSum& s, const CompensatedSum& ssq) {
        const double mean = s.result() / n;
        const double var = std::max(ssq.result() / n - mean * mean, 0.0);
        return std::pair<double, double>{mean, std::sqrt(var / n)};
    };
    const auto [m1, se1] = mean_se(s1, s1_sq);
    const auto [m2, se2] = mean_se(s2, s2_sq);
    const auto [m3, se3] = mean_se(s3, s3_sq);

    MomentSet m;
    m.mu = m1;
    m.eta = m2 - m1 * m1;
    m.c = m3 - m1;
    m.err = 3.0 * std::max({se1, se2, se3});
    m.method = MomentMethod::monte_carlo;
    m.sigma2 = clamp_sigma2(2.0 * (m.eta - m.c * m.c), 10.0 * m.err);
    m.degenerate = m.sigma2 < 1e-12;
    return m;
}

} // namespace csr
