// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "csr/pattern.hpp"
#include "csr/types.hpp"

namespace csr {

// Axis spacings of a unit-square pattern. The n^2 cell areas are exposed
// through area(i, j) and never stored, keeping memory O(n).
struct SpacingsGrid {
    Index n = 0;
    Vec dx;
    Vec dy;

    double area(Index i, Index j) const { return dx[i] * dy[j]; }
};

// Differences of the sorted coordinates augmented with 0 and 1.
// Length m + 1; throws DomainError for coordinates outside [0, 1].
Vec axis_spacings(const Vec& coords);

// Spacings grid of a pattern already on the unit window (caller rescales).
SpacingsGrid compute_grid(const PointPattern& pattern);

// (n*dx, n*dy); note n^2 * A_ij = (n*dx[i]) * (n*dy[j]).
std::pair<Vec, Vec> scaled_spacings(const SpacingsGrid& grid);

} // namespace csr
