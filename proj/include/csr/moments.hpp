// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "csr/gfun.hpp"
#include "csr/moment_set.hpp"

namespace csr {

struct QuadResult {
    double value = 0.0;
    // |result(nodes) - result(nodes/2)|
    double err = 0.0;
};

// E g(XY) over iid unit exponentials, as the double integral of
// g(xy) e^{-x-y} over the positive quadrant. `nodes` steers the refinement
// target; preconditions require nodes >= 16.
QuadResult mu_quadrature(const GFunction& g, int nodes);

// Cov(g(X1 Y1), g(X1 Y2)) via the factorized inner integral
// h(x) = int g(xy) e^{-y} dy.
QuadResult eta_quadrature(const GFunction& g, int nodes);

// Cov(g(X1 Y1), X1). With swap_roles the covariance is taken against Y1
// instead (equal by symmetry; exposed for the symmetry check).
QuadResult c_quadrature(const GFunction& g, int nodes, bool swap_roles = false);

// Closed-form moments when the kernel carries them, else assembled from the
// quadratures above.
MomentSet compute_moments(const GFunction& g, int nodes);

// Always the quadrature route, regardless of closed forms.
MomentSet quadrature_moments(const GFunction& g, int nodes);

// Independent Monte Carlo estimator of the same moments from iid
// exponential triples (X, Y, Y'). err is 3x the largest standard error.
MomentSet mc_oracle(const GFunction& g, std::int64_t samples, std::uint64_t seed);

} // namespace csr
