// SPDX-License-Identifier: Apache-2.0
#include "csr/spacings.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "csr/errors.hpp"

namespace csr {

Vec axis_spacings(const Vec& coords) {
    const Index m = coords.size();
    for (Index i = 0; i < m; ++i) {
        if (!(coords[i] >= 0.0 && coords[i] <= 1.0))
            throw DomainError("coordinate " + std::to_string(i + 1) + " (" +
                              std::to_string(coords[i]) + ") outside [0, 1]");
    }
    std::vector<double> sorted(coords.data(), coords.data() + m);
    std::stable_sort(sorted.begin(), sorted.end());
    Vec d(m + 1);
    double prev = 0.0;
    for (Index i = 0; i < m; ++i) {
        d[i] = sorted[static_cast<std::size_t>(i)] - prev;
        prev = sorted[static_cast<std::size_t>(i)];
    }
    d[m] = 1.0 - prev;
    return d;
}

SpacingsGrid compute_grid(const PointPattern& pattern) {
    if (!pattern.window.is_unit())
        throw ContractError("compute_grid requires a unit-window pattern");
    Vec dx = axis_spacings(pattern.x);
    Vec dy = axis_spacings(pattern.y);
    const Index n = dx.size();
    return SpacingsGrid{n, std::move(dx), std::move(dy)};
}

std::pair<Vec, Vec> scaled_spacings(const SpacingsGrid& grid) {
    const double n = static_cast<double>(grid.n);
    return {n * grid.dx, n * grid.dy};
}

} // namespace csr
