// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csr/gfun.hpp"
#include "csr/moment_set.hpp"
#include "csr/pattern.hpp"
#include "csr/spacings.hpp"
#include "csr/types.hpp"

namespace csr {

// Two samples of unit exponentials with cached means.
struct ExponentialSamplePair {
    Vec xs;
    Vec ys;
    double xbar = 0.0;
    double ybar = 0.0;
};

// Validates positivity and computes the means.
ExponentialSamplePair make_sample_pair(Vec xs, Vec ys);

enum class Sided { two, upper, lower };

struct TestResult {
    double statistic = 0.0;
    Index n = 0;
    double z = 0.0;
    double p_asymptotic = 1.0;
    std::optional<double> p_monte_carlo;
    std::string g_name;
    MomentSet moments;
    std::vector<std::string> warnings;
};

// Standard normal CDF.
double normal_cdf(double z);

// Sum over the spacings grid of g applied to the scaled cell areas,
// accumulated in fixed i-major order with compensated summation.
double v2_statistic(const SpacingsGrid& grid, const GFunction& g);

// Same additive form on normalized exponential samples; equal in law to
// v2_statistic under the null.
double gn_statistic(const ExponentialSamplePair& sample, const GFunction& g);

// (v - n^2 mu) / (n^{3/2} sigma). Throws DegenerateStatisticError when the
// moment set is degenerate.
double standardize(double v, Index n, const MomentSet& moments);

// Full asymptotic test on a pattern (rescaled internally).
TestResult asymptotic_test(const PointPattern& pattern, const GFunction& g,
                           const MomentSet& moments, Sided sided = Sided::two);

// Splits the centered statistic into the two-sample U-statistic part s and
// the remainder r, with s + r = gn_statistic - n^2 mu by construction.
std::pair<double, double> decompose_sr(const ExponentialSamplePair& sample,
                                       const GFunction& g,
                                       const MomentSet& moments);

// Monte Carlo estimate of E g(t Xbar Ybar) over `reps` replicates of two
// n-sample exponential means.
double lemma1_estimate(const GFunction& g, double t, Index n, Index reps,
                       std::uint64_t seed);

} // namespace csr
