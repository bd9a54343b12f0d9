// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace csr {

enum class MomentMethod { closed_form, quadrature, monte_carlo };

std::string_view to_string(MomentMethod method);

// Limiting moments of a kernel: mu = E g(XY), eta = Cov(g(X1 Y1), g(X1 Y2)),
// c = Cov(g(X1 Y1), X1), sigma2 = 2 (eta - c^2).
struct MomentSet {
    double mu = 0.0;
    double eta = 0.0;
    double c = 0.0;
    double sigma2 = 0.0;
    MomentMethod method = MomentMethod::closed_form;
    double err = 0.0;
    bool degenerate = false;
};

} // namespace csr
