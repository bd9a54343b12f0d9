// SPDX-License-Identifier: Apache-2.0
#include "csr/gfun.hpp"

#include <cmath>

#include "csr/errors.hpp"

namespace csr {

std::string_view to_string(MomentMethod method) {
    switch (method) {
        case MomentMethod::closed_form: return "closed_form";
        case MomentMethod::quadrature: return "quadrature";
        case MomentMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kPiSqOver6 = 1.6449340668482264364724151666460252;

double square_fn(double t) { return t * t; }
double absdev_fn(double t) { return std::abs(t - 1.0); }
double neglog_fn(double t) { return -std::log(t); }
double identity_fn(double t) { return t; }

MomentSet closed(double mu, double eta, double c) {
    MomentSet m;
    m.mu = mu;
    m.eta = eta;
    m.c = c;
    m.sigma2 = 2.0 * (eta - c * c);
    m.method = MomentMethod::closed_form;
    m.err = 0.0;
    m.degenerate = m.sigma2 < 1e-12;
    if (m.degenerate) m.sigma2 = std::max(m.sigma2, 0.0);
    return m;
}

} // namespace

GFunction builtin(const std::string& name) {
    if (name == "square") {
        GFunction g;
        g.name = "square";
        g.id = KernelId::square;
        g.fn = square_fn;
        g.closed_moments = closed(4.0, 80.0, 8.0);
        return g;
    }
    if (name == "absdev") {
        GFunction g;
        g.name = "absdev";
        g.id = KernelId::absdev;
        g.fn = absdev_fn;
        g.breakpoints = {1.0};
        return g;
    }
    if (name == "neglog") {
        GFunction g;
        g.name = "neglog";
        g.id = KernelId::neglog;
        g.fn = neglog_fn;
        g.requires_positive = true;
        // continuous on the open half-line only
        g.conditions = {false, true, true, true};
        g.closed_moments = closed(2.0 * kEulerGamma, kPiSqOver6, -1.0);
        return g;
    }
    if (name == "identity") {
        GFunction g;
        g.name = "identity";
        g.id = KernelId::identity;
        g.fn = identity_fn;
        g.closed_moments = closed(1.0, 1.0, 1.0);
        return g;
    }
    throw LookupError("unknown kernel \"" + name +
                      "\"; available: square, absdev, neglog, identity");
}

double evaluate(const GFunction& g, double t) {
    if (t < 0.0) throw DomainError("kernel argument must be nonnegative");
    if (t == 0.0 && g.requires_positive)
        throw DegenerateSpacingError("kernel \"" + g.name +
                                     "\" is undefined at 0 (tied coordinate)");
    return with_kernel(g, [t](auto k) { return k(t); });
}

} // namespace csr
