// SPDX-License-Identifier: Apache-2.0
#include "csr/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "csr/errors.hpp"
#include "csr/replicate.hpp"
#include "csr/stat.hpp"

namespace csr {

namespace {

constexpr std::uint64_t kSsiRejectionLimit = 1000000;

Vec draw_exponentials(Index n, Rng& rng) {
    Vec e(n);
    for (Index i = 0; i < n; ++i) e[i] = rng.exponential();
    return e;
}

ExponentialSamplePair draw_sample_pair(Index n, Rng& rng) {
    Vec xs = draw_exponentials(n, rng);
    Vec ys = draw_exponentials(n, rng);
    return make_sample_pair(std::move(xs), std::move(ys));
}

double null_z(Index n, const GFunction& g, const MomentSet& moments, Rng& rng,
              NullSampler sampler) {
    if (sampler == NullSampler::moran) {
        const SpacingsGrid grid = moran_grid(n, rng);
        return standardize(v2_statistic(grid, g), n, moments);
    }
    const PointPattern pattern = uniform_pattern(n - 1, rng);
    const SpacingsGrid grid = compute_grid(pattern);
    return standardize(v2_statistic(grid, g), n, moments);
}

void validate(const GeneratorSpec& spec) {
    if (spec.m < 1) throw DomainError("generator needs m >= 1");
    switch (spec.kind) {
        case GeneratorKind::uniform:
            break;
        case GeneratorKind::matern_cluster:
            if (spec.parent_count < 1 || spec.offspring_mean <= 0.0 ||
                spec.radius <= 0.0)
                throw DomainError(
                    "matern_cluster needs positive parent_count, offspring_mean "
                    "and radius");
            break;
        case GeneratorKind::ssi:
            if (spec.inhibition_distance < 0.0)
                throw DomainError("ssi needs a nonnegative inhibition_distance");
            break;
        case GeneratorKind::gradient:
            if (spec.beta < 0.0) throw DomainError("gradient needs beta >= 0");
            break;
    }
}

} // namespace

GeneratorKind generator_kind_from(const std::string& name) {
    if (name == "uniform") return GeneratorKind::uniform;
    if (name == "matern_cluster") return GeneratorKind::matern_cluster;
    if (name == "ssi") return GeneratorKind::ssi;
    if (name == "gradient") return GeneratorKind::gradient;
    throw LookupError("unknown generator \"" + name +
                      "\"; available: uniform, matern_cluster, ssi, gradient");
}

std::string_view to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::uniform: return "uniform";
        case GeneratorKind::matern_cluster: return "matern_cluster";
        case GeneratorKind::ssi: return "ssi";
        case GeneratorKind::gradient: return "gradient";
    }
    return "unknown";
}

PointPattern uniform_pattern(Index m, Rng& rng) {
    Vec x(m);
    Vec y(m);
    for (Index i = 0; i < m; ++i) {
        x[i] = rng.uniform();
        y[i] = rng.uniform();
    }
    return PointPattern{Window::unit(), std::move(x), std::move(y)};
}

PointPattern sample_uniform_pattern(Index m, std::uint64_t seed) {
    if (m < 1) throw DomainError("pattern needs m >= 1");
    Rng rng(seed);
    return uniform_pattern(m, rng);
}

SpacingsGrid moran_grid_from(const Vec& ex, const Vec& ey) {
    if (ex.size() != ey.size() || ex.size() < 2)
        throw DomainError("moran grid needs two equal-length vectors, n >= 2");
    if ((ex <= 0.0).any() || (ey <= 0.0).any())
        throw DomainError("moran grid needs strictly positive variates");
    const Index n = ex.size();
    Vec dx = ex / ex.sum();
    Vec dy = ey / ey.sum();
    return SpacingsGrid{n, std::move(dx), std::move(dy)};
}

SpacingsGrid moran_grid(Index n, Rng& rng) {
    const Vec ex = draw_exponentials(n, rng);
    const Vec ey = draw_exponentials(n, rng);
    return moran_grid_from(ex, ey);
}

SpacingsGrid sample_null_spacings_moran(Index n, std::uint64_t seed) {
    if (n < 2) throw DomainError("moran sampler needs n >= 2");
    Rng rng(seed);
    return moran_grid(n, rng);
}

double mc_pvalue(const PointPattern& pattern, const GFunction& g,
                 const MomentSet& moments, Index B, std::uint64_t seed,
                 NullSampler sampler, unsigned threads) {
    if (B < 99) throw DomainError("mc_pvalue needs B >= 99");
    const TestResult obs = asymptotic_test(pattern, g, moments);
    const double z_obs = std::abs(obs.z);
    const Index n = obs.n;
    const auto zs = run_replicates(
        B, seed,
        [&](Index, Rng& rng) { return std::abs(null_z(n, g, moments, rng, sampler)); },
        threads);
    Index exceed = 0;
    for (double z : zs)
        if (z >= z_obs) ++exceed;
    return static_cast<double>(1 + exceed) / static_cast<double>(B + 1);
}

NormalityReport normality_diagnostic(const GFunction& g, const MomentSet& moments,
                                     Index n, Index reps, std::uint64_t seed,
                                     unsigned threads) {
    if (reps < 200) throw DomainError("normality_diagnostic needs reps >= 200");
    if (moments.degenerate)
        throw DegenerateStatisticError("degenerate kernel admits no diagnostic");
    auto zs = run_replicates(
        reps, seed,
        [&](Index, Rng& rng) {
            return null_z(n, g, moments, rng, NullSampler::moran);
        },
        threads);
    CompensatedSum sum;
    for (double z : zs) sum.add(z);
    const double mean = sum.result() / static_cast<double>(reps);
    CompensatedSum sq;
    for (double z : zs) sq.add((z - mean) * (z - mean));
    const double var = sq.result() / static_cast<double>(reps - 1);
    NormalityReport report;
    report.n = n;
    report.reps = reps;
    report.g_name = g.name;
    report.mean_z = mean;
    report.var_z = var;
    report.ks_distance = ks_normal_distance(std::move(zs));
    report.seed = seed;
    return report;
}

std::vector<std::pair<Index, double>> remainder_diagnostic(
    const GFunction& g, const MomentSet& moments, const std::vector<Index>& n_grid,
    Index reps, std::uint64_t seed, unsigned threads) {
    if (reps < 200) throw DomainError("remainder_diagnostic needs reps >= 200");
    if (n_grid.empty() || !std::is_sorted(n_grid.begin(), n_grid.end()))
        throw DomainError("n_grid must be nonempty and ascending");
    std::vector<std::pair<Index, double>> out;
    out.reserve(n_grid.size());
    for (Index n : n_grid) {
        const std::uint64_t seed_n =
            substream_seed(seed, static_cast<std::uint64_t>(n));
        const auto values = run_replicates(
            reps, seed_n,
            [&](Index, Rng& rng) {
                const auto sample = draw_sample_pair(n, rng);
                const auto [s, r] = decompose_sr(sample, g, moments);
                (void)s;
                const double dn = static_cast<double>(n);
                return r * r / (dn * dn * dn);
            },
            threads);
        CompensatedSum acc;
        for (double v : values) acc.add(v);
        out.emplace_back(n, acc.result() / static_cast<double>(reps));
    }
    return out;
}

namespace {

PointPattern generate_matern(const GeneratorSpec& spec, Rng& rng) {
    const Index P = spec.parent_count;
    Vec px(P);
    Vec py(P);
    for (Index i = 0; i < P; ++i) {
        px[i] = rng.uniform();
        py[i] = rng.uniform();
    }
    auto spawn = [&](Index parent, double& ox, double& oy) {
        for (;;) {
            double dx;
            double dy;
            do {
                dx = (2.0 * rng.uniform() - 1.0) * spec.radius;
                dy = (2.0 * rng.uniform() - 1.0) * spec.radius;
            } while (dx * dx + dy * dy > spec.radius * spec.radius);
            ox = px[parent] + dx;
            oy = py[parent] + dy;
            if (ox >= 0.0 && ox <= 1.0 && oy >= 0.0 && oy <= 1.0) return;
        }
    };
    std::vector<double> xs;
    std::vector<double> ys;
    for (Index i = 0; i < P; ++i) {
        const std::uint64_t count = rng.poisson(spec.offspring_mean);
        for (std::uint64_t k = 0; k < count; ++k) {
            double ox;
            double oy;
            spawn(i, ox, oy);
            xs.push_back(ox);
            ys.push_back(oy);
        }
    }
    // condition on the point count: subsample or top up to exactly m
    while (static_cast<Index>(xs.size()) < spec.m) {
        const Index parent = static_cast<Index>(rng.below(static_cast<std::uint64_t>(P)));
        double ox;
        double oy;
        spawn(parent, ox, oy);
        xs.push_back(ox);
        ys.push_back(oy);
    }
    if (static_cast<Index>(xs.size()) > spec.m) {
        // partial Fisher-Yates, keep the first m
        const std::size_t total = xs.size();
        for (std::size_t i = 0; i < static_cast<std::size_t>(spec.m); ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(rng.below(total - i));
            std::swap(xs[i], xs[j]);
            std::swap(ys[i], ys[j]);
        }
        xs.resize(static_cast<std::size_t>(spec.m));
        ys.resize(static_cast<std::size_t>(spec.m));
    }
    return PointPattern{
        Window::unit(),
        Eigen::Map<const Vec>(xs.data(), static_cast<Index>(xs.size())),
        Eigen::Map<const Vec>(ys.data(), static_cast<Index>(ys.size()))};
}

PointPattern generate_ssi(const GeneratorSpec& spec, Rng& rng) {
    const double d2 = spec.inhibition_distance * spec.inhibition_distance;
    Vec x(spec.m);
    Vec y(spec.m);
    Index accepted = 0;
    std::uint64_t consecutive_rejections = 0;
    while (accepted < spec.m) {
        const double cx = rng.uniform();
        const double cy = rng.uniform();
        bool ok = true;
        for (Index i = 0; i < accepted; ++i) {
            const double ddx = cx - x[i];
            const double ddy = cy - y[i];
            if (ddx * ddx + ddy * ddy < d2) {
                ok = false;
                break;
            }
        }
        if (ok) {
            x[accepted] = cx;
            y[accepted] = cy;
            ++accepted;
            consecutive_rejections = 0;
        } else if (++consecutive_rejections >= kSsiRejectionLimit) {
            throw InfeasibleError(
                "ssi saturated: cannot place " + std::to_string(spec.m) +
                " points at inhibition distance " +
                std::to_string(spec.inhibition_distance));
        }
    }
    return PointPattern{Window::unit(), std::move(x), std::move(y)};
}

PointPattern generate_gradient(const GeneratorSpec& spec, Rng& rng) {
    Vec x(spec.m);
    Vec y(spec.m);
    for (Index i = 0; i < spec.m; ++i) {
        // rejection sampling from density proportional to x^beta
        double cx;
        do {
            cx = rng.uniform();
        } while (rng.uniform() > std::pow(cx, spec.beta));
        x[i] = cx;
        y[i] = rng.uniform();
    }
    return PointPattern{Window::unit(), std::move(x), std::move(y)};
}

} // namespace

PointPattern generate(const GeneratorSpec& spec, std::uint64_t seed) {
    validate(spec);
    Rng rng(seed);
    switch (spec.kind) {
        case GeneratorKind::uniform: return uniform_pattern(spec.m, rng);
        case GeneratorKind::matern_cluster: return generate_matern(spec, rng);
        case GeneratorKind::ssi: return generate_ssi(spec, rng);
        case GeneratorKind::gradient: return generate_gradient(spec, rng);
    }
    throw DomainError("unreachable generator kind");
}

double power_estimate(const GeneratorSpec& spec, const GFunction& g,
                      const MomentSet& moments, double level, Index reps, Index B,
                      std::uint64_t seed, unsigned threads) {
    validate(spec);
    if (!(level > 0.0 && level < 1.0)) throw DomainError("level must be in (0, 1)");
    if (reps < 1) throw DomainError("power_estimate needs reps >= 1");
    const auto pvals = run_replicates(
        reps, seed,
        [&](Index k, Rng&) {
            const std::uint64_t base = substream_seed(seed, static_cast<std::uint64_t>(k));
            const PointPattern pattern = generate(spec, substream_seed(base, 0));
            return mc_pvalue(pattern, g, moments, B, substream_seed(base, 1),
                             NullSampler::moran);
        },
        threads);
    Index rejections = 0;
    for (double p : pvals)
        if (p <= level) ++rejections;
    return static_cast<double>(rejections) / static_cast<double>(reps);
}

double ks_normal_distance(std::vector<double> values) {
    if (values.empty()) throw DomainError("ks distance needs a nonempty sample");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double cdf = normal_cdf(values[i]);
        const double lo = cdf - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - cdf;
        d = std::max({d, lo, hi});
    }
    return d;
}

} // namespace csr
