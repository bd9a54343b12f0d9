// SPDX-License-Identifier: Apache-2.0
#include "csr/stat.hpp"

#include <cmath>
#include <string>

#include "csr/errors.hpp"
#include "csr/replicate.hpp"
#include "csr/rng.hpp"

namespace csr {

namespace {

constexpr Index kSmallSampleThreshold = 50;

// fixed i-major compensated double sum of k(sx[i] * sy[j])
template <class K>
double additive_sum(const Vec& sx, const Vec& sy, K k) {
    CompensatedSum acc;
    const Index n = sx.size();
    for (Index i = 0; i < n; ++i) {
        const double si = sx[i];
        for (Index j = 0; j < n; ++j) acc.add(k(si * sy[j]));
    }
    return acc.result();
}

} // namespace

ExponentialSamplePair make_sample_pair(Vec xs, Vec ys) {
    if (xs.size() != ys.size() || xs.size() < 1)
        throw DomainError("sample pair needs two equal-length nonempty samples");
    if ((xs <= 0.0).any() || (ys <= 0.0).any())
        throw DomainError("sample entries must be strictly positive");
    const double xbar = xs.mean();
    const double ybar = ys.mean();
    return ExponentialSamplePair{std::move(xs), std::move(ys), xbar, ybar};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double v2_statistic(const SpacingsGrid& grid, const GFunction& g) {
    if (g.requires_positive &&
        ((grid.dx <= 0.0).any() || (grid.dy <= 0.0).any()))
        throw DegenerateSpacingError(
            "kernel \"" + g.name +
            "\" is undefined on a zero spacing (tied coordinate)");
    const auto [sx, sy] = scaled_spacings(grid);
    return with_kernel(g, [&sx = sx, &sy = sy](auto k) {
        return additive_sum(sx, sy, k);
    });
}

double gn_statistic(const ExponentialSamplePair& sample, const GFunction& g) {
    const Vec sx = sample.xs / sample.xbar;
    const Vec sy = sample.ys / sample.ybar;
    return with_kernel(g, [&](auto k) { return additive_sum(sx, sy, k); });
}

double standardize(double v, Index n, const MomentSet& moments) {
    if (moments.degenerate)
        throw DegenerateStatisticError(
            "sigma^2 = 0: the kernel admits no standardized test");
    const double dn = static_cast<double>(n);
    return (v - dn * dn * moments.mu) /
           (std::pow(dn, 1.5) * std::sqrt(moments.sigma2));
}

TestResult asymptotic_test(const PointPattern& pattern, const GFunction& g,
                           const MomentSet& moments, Sided sided) {
    const SpacingsGrid grid = compute_grid(
        pattern.window.is_unit() ? pattern : rescale_to_unit(pattern));
    TestResult result;
    result.n = grid.n;
    result.g_name = g.name;
    result.moments = moments;
    result.statistic = v2_statistic(grid, g);
    result.z = standardize(result.statistic, grid.n, moments);
    switch (sided) {
        case Sided::two:
            result.p_asymptotic = 2.0 * (1.0 - normal_cdf(std::abs(result.z)));
            break;
        case Sided::upper:
            result.p_asymptotic = 1.0 - normal_cdf(result.z);
            break;
        case Sided::lower:
            result.p_asymptotic = normal_cdf(result.z);
            break;
    }
    if (pattern.size() < kSmallSampleThreshold)
        result.warnings.push_back("small-sample");
    if (!g.conditions[0])
        result.warnings.push_back("kernel-continuity-at-zero-unverified");
    return result;
}

std::pair<double, double> decompose_sr(const ExponentialSamplePair& sample,
                                       const GFunction& g,
                                       const MomentSet& moments) {
    const double mu = moments.mu;
    const double c = moments.c;
    const double s = with_kernel(g, [&](auto k) {
        CompensatedSum acc;
        const Index n = sample.xs.size();
        for (Index i = 0; i < n; ++i) {
            const double xi = sample.xs[i];
            for (Index j = 0; j < n; ++j) {
                const double yj = sample.ys[j];
                acc.add(k(xi * yj) - mu - c * (xi - 1.0) - c * (yj - 1.0));
            }
        }
        return acc.result();
    });
    const double dn = static_cast<double>(sample.xs.size());
    const double r = gn_statistic(sample, g) - dn * dn * mu - s;
    return {s, r};
}

double lemma1_estimate(const GFunction& g, double t, Index n, Index reps,
                       std::uint64_t seed) {
    if (!(t > 0.0)) throw DomainError("lemma1_estimate needs t > 0");
    if (n < 1 || reps < 1) throw DomainError("n and reps must be positive");
    const auto values = run_replicates(reps, seed, [&](Index, Rng& rng) {
        CompensatedSum sx;
        CompensatedSum sy;
        for (Index i = 0; i < n; ++i) {
            sx.add(rng.exponential());
            sy.add(rng.exponential());
        }
        const double dn = static_cast<double>(n);
        return evaluate(g, t * (sx.result() / dn) * (sy.result() / dn));
    });
    CompensatedSum acc;
    for (double v : values) acc.add(v);
    return acc.result() / static_cast<double>(reps);
}

} // namespace csr
