// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <istream>

#include "csr/types.hpp"

namespace csr {

// Axis-aligned rectangular observation window.
struct Window {
    double x0 = 0.0;
    double x1 = 1.0;
    double y0 = 0.0;
    double y1 = 1.0;

    static Window unit() { return {0.0, 1.0, 0.0, 1.0}; }
    bool is_unit() const {
        return x0 == 0.0 && x1 == 1.0 && y0 == 0.0 && y1 == 1.0;
    }
};

// throws DomainError unless x0 < x1 and y0 < y1 strictly
void validate(const Window& w);

// m observed points in a rectangular window; immutable after construction.
struct PointPattern {
    Window window;
    Vec x;
    Vec y;

    Index size() const { return x.size(); }
};

// Validates window, m >= 1, finiteness, and closed-window containment.
PointPattern make_pattern(const Window& window, Vec x, Vec y);

// Parses lines "x,y" (comma-separated decimal reals). A single leading
// header line starting with a non-numeric token is skipped.
PointPattern load_pattern(std::istream& source, const Window& window);

// Affine map of both axes onto [0,1]^2.
PointPattern rescale_to_unit(const PointPattern& pattern);

} // namespace csr
