// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "csr/moment_set.hpp"

namespace csr {

enum class KernelId { square, absdev, neglog, identity, custom };

// A statistic kernel g with its regularity flags. The four `conditions`
// entries record, in order, the continuity, square-integrability and the two
// domination hypotheses of the limit theorem; they are asserted metadata,
// not machine-verified.
struct GFunction {
    std::string name;
    KernelId id = KernelId::custom;
    double (*fn)(double) = nullptr;
    bool requires_positive = false;
    std::array<bool, 4> conditions{true, true, true, true};
    // t-locations where g is finite but not smooth (quadrature refinement hint)
    std::vector<double> breakpoints;
    std::optional<MomentSet> closed_moments;
};

// Lookup of a built-in kernel: square, absdev, neglog, identity.
// Throws LookupError listing the available names.
GFunction builtin(const std::string& name);

// Checked scalar evaluation. Throws DegenerateSpacingError when t == 0 meets
// requires_positive, DomainError when t < 0.
double evaluate(const GFunction& g, double t);

// Dispatches `f` with a statically-typed kernel callable so hot loops inline
// the kernel body.
template <class F>
decltype(auto) with_kernel(const GFunction& g, F&& f) {
    switch (g.id) {
        case KernelId::square:
            return f([](double t) { return t * t; });
        case KernelId::absdev:
            return f([](double t) { return std::abs(t - 1.0); });
        case KernelId::neglog:
            return f([](double t) { return -std::log(t); });
        case KernelId::identity:
            return f([](double t) { return t; });
        case KernelId::custom:
            break;
    }
    return f(g.fn);
}

} // namespace csr
