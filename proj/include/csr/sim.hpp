// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csr/gfun.hpp"
#include "csr/moment_set.hpp"
#include "csr/pattern.hpp"
#include "csr/rng.hpp"
#include "csr/spacings.hpp"
#include "csr/types.hpp"

namespace csr {

struct NormalityReport {
    Index n = 0;
    Index reps = 0;
    std::string g_name;
    double mean_z = 0.0;
    double var_z = 0.0;
    double ks_distance = 0.0;
    std::uint64_t seed = 0;
};

enum class GeneratorKind { uniform, matern_cluster, ssi, gradient };

GeneratorKind generator_kind_from(const std::string& name);
std::string_view to_string(GeneratorKind kind);

// Alternative-pattern generator; fields are read per kind. Every generator
// returns exactly m points (tests condition on the observed count).
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::uniform;
    Index m = 1;
    // matern_cluster
    Index parent_count = 10;
    double offspring_mean = 5.0;
    double radius = 0.1;
    // ssi
    double inhibition_distance = 0.05;
    // gradient: density proportional to x^beta
    double beta = 2.0;
};

enum class NullSampler { uniform, moran };

// m iid uniform points on the unit square.
PointPattern sample_uniform_pattern(Index m, std::uint64_t seed);

// Null spacings grid without sorting, from normalized exponential vectors.
SpacingsGrid sample_null_spacings_moran(Index n, std::uint64_t seed);

// Grid from explicitly supplied exponential draws (test hook).
SpacingsGrid moran_grid_from(const Vec& ex, const Vec& ey);

// In-stream variants used by replicate loops.
PointPattern uniform_pattern(Index m, Rng& rng);
SpacingsGrid moran_grid(Index n, Rng& rng);

// Randomization p-value (1 + #{|z_b| >= |z_obs|}) / (B + 1).
double mc_pvalue(const PointPattern& pattern, const GFunction& g,
                 const MomentSet& moments, Index B, std::uint64_t seed,
                 NullSampler sampler = NullSampler::moran, unsigned threads = 1);

// Simulates null statistics, standardizes them, and summarizes agreement
// with the standard normal law.
NormalityReport normality_diagnostic(const GFunction& g, const MomentSet& moments,
                                     Index n, Index reps, std::uint64_t seed,
                                     unsigned threads = 1);

// Mean of r^2 / n^3 per grid entry, where r is the remainder of the s/r
// decomposition.
std::vector<std::pair<Index, double>> remainder_diagnostic(
    const GFunction& g, const MomentSet& moments, const std::vector<Index>& n_grid,
    Index reps, std::uint64_t seed, unsigned threads = 1);

PointPattern generate(const GeneratorSpec& spec, std::uint64_t seed);

// Fraction of generated patterns with mc_pvalue <= level.
double power_estimate(const GeneratorSpec& spec, const GFunction& g,
                      const MomentSet& moments, double level, Index reps, Index B,
                      std::uint64_t seed, unsigned threads = 1);

// Exact one-sample Kolmogorov-Smirnov distance to the standard normal CDF.
double ks_normal_distance(std::vector<double> values);

} // namespace csr
