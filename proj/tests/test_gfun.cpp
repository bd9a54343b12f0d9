// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <string>

#include "csr/errors.hpp"
#include "csr/gfun.hpp"

using namespace csr;

TEST_CASE("builtin kernels evaluate per definition") {
    CHECK(evaluate(builtin("square"), 2.0) == doctest::Approx(4.0));
    CHECK(evaluate(builtin("absdev"), 1.0) == doctest::Approx(0.0));
    CHECK(evaluate(builtin("absdev"), 0.5) == doctest::Approx(0.5));
    CHECK(evaluate(builtin("neglog"), 1.0) == doctest::Approx(0.0));
    CHECK(evaluate(builtin("identity"), 0.3) == doctest::Approx(0.3));
    CHECK(evaluate(builtin("square"), 0.0) == doctest::Approx(0.0));
}

TEST_CASE("unknown kernel name lists the available ones") {
    try {
        builtin("cube");
        FAIL("expected LookupError");
    } catch (const LookupError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("square") != std::string::npos);
        CHECK(msg.find("absdev") != std::string::npos);
        CHECK(msg.find("neglog") != std::string::npos);
        CHECK(msg.find("identity") != std::string::npos);
    }
}

TEST_CASE("evaluate guards the kernel domain") {
    CHECK_THROWS_AS(evaluate(builtin("neglog"), 0.0), DegenerateSpacingError);
    CHECK_THROWS_AS(evaluate(builtin("square"), -1.0), DomainError);
}

TEST_CASE("requires_positive flags") {
    CHECK_FALSE(builtin("square").requires_positive);
    CHECK_FALSE(builtin("absdev").requires_positive);
    CHECK_FALSE(builtin("identity").requires_positive);
    CHECK(builtin("neglog").requires_positive);
}

TEST_CASE("kernels defined at zero are continuous on a sampled grid") {
    const double h = 1e-4;
    for (const char* name : {"square", "absdev", "identity"}) {
        const GFunction g = builtin(name);
        // local Lipschitz bound on [0, 100]: 2t for square, 1 otherwise
        const double lipschitz = g.id == KernelId::square ? 200.0 : 1.0;
        const double bound = std::max(1e-2, 1.05 * (lipschitz * h + h * h));
        double prev = evaluate(g, 0.0);
        double max_jump = 0.0;
        for (double t = h; t <= 100.0 + h / 2; t += h) {
            const double cur = evaluate(g, t);
            max_jump = std::max(max_jump, std::abs(cur - prev));
            prev = cur;
        }
        CAPTURE(name);
        CHECK(max_jump < bound);
    }
}

TEST_CASE("condition metadata") {
    const GFunction neglog = builtin("neglog");
    CHECK_FALSE(neglog.conditions[0]); // continuous on the open half-line only
    for (const char* name : {"square", "absdev", "identity"}) {
        const GFunction g = builtin(name);
        for (bool c : g.conditions) CHECK(c);
    }
}

TEST_CASE("closed moments attached where they exist") {
    CHECK(builtin("square").closed_moments.has_value());
    CHECK(builtin("neglog").closed_moments.has_value());
    CHECK(builtin("identity").closed_moments.has_value());
    CHECK_FALSE(builtin("absdev").closed_moments.has_value());
    CHECK(builtin("identity").closed_moments->degenerate);
}
