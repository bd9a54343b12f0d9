// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "csr/errors.hpp"
#include "csr/rng.hpp"
#include "csr/sim.hpp"
#include "csr/spacings.hpp"

using namespace csr;

TEST_CASE("axis_spacings on small known cases") {
    {
        Vec c(1);
        c << 0.5;
        const Vec d = axis_spacings(c);
        REQUIRE(d.size() == 2);
        CHECK(d[0] == doctest::Approx(0.5));
        CHECK(d[1] == doctest::Approx(0.5));
    }
    {
        Vec c(2);
        c << 0.2, 0.6;
        const Vec d = axis_spacings(c);
        REQUIRE(d.size() == 3);
        CHECK(d[0] == doctest::Approx(0.2));
        CHECK(d[1] == doctest::Approx(0.4));
        CHECK(d[2] == doctest::Approx(0.4));
    }
    {
        // tie yields an exact zero spacing
        Vec c(2);
        c << 0.3, 0.3;
        const Vec d = axis_spacings(c);
        CHECK(d[0] == doctest::Approx(0.3));
        CHECK(d[1] == 0.0);
        CHECK(d[2] == doctest::Approx(0.7));
    }
}

TEST_CASE("axis_spacings rejects out-of-range coordinates") {
    Vec c(1);
    c << 1.5;
    CHECK_THROWS_AS(axis_spacings(c), DomainError);
}

TEST_CASE("compute_grid examples") {
    {
        Vec x(1), y(1);
        x << 0.5;
        y << 0.5;
        const auto g = compute_grid(PointPattern{Window::unit(), x, y});
        CHECK(g.n == 2);
        for (Index i = 0; i < 2; ++i)
            for (Index j = 0; j < 2; ++j)
                CHECK(g.area(i, j) == doctest::Approx(0.25));
    }
    {
        Vec x(1), y(1);
        x << 0.25;
        y << 0.75;
        const auto g = compute_grid(PointPattern{Window::unit(), x, y});
        CHECK(g.area(0, 0) == doctest::Approx(0.1875));
        CHECK(g.area(0, 1) == doctest::Approx(0.0625));
        CHECK(g.area(1, 0) == doctest::Approx(0.5625));
        CHECK(g.area(1, 1) == doctest::Approx(0.1875));
    }
    {
        Vec x(2), y(2);
        x << 0.2, 0.6;
        y << 0.5, 0.9;
        const auto g = compute_grid(PointPattern{Window::unit(), x, y});
        CHECK(g.dx[0] == doctest::Approx(0.2));
        CHECK(g.dy[1] == doctest::Approx(0.4));
        CHECK(g.area(0, 0) == doctest::Approx(0.10));
    }
}

TEST_CASE("compute_grid requires a unit window") {
    Vec x(1), y(1);
    x << 1.0;
    y << 1.0;
    CHECK_THROWS_AS(compute_grid(PointPattern{{0, 2, 0, 2}, x, y}), ContractError);
}

TEST_CASE("scaled_spacings") {
    Vec x(2), y(2);
    x << 0.2, 0.6;
    y << 0.5, 0.9;
    const auto g = compute_grid(PointPattern{Window::unit(), x, y});
    const auto [sx, sy] = scaled_spacings(g);
    CHECK(sx[0] == doctest::Approx(0.6));
    CHECK(sx[1] == doctest::Approx(1.2));
    CHECK(sx[2] == doctest::Approx(1.2));
    // n^2 A_ij = (n dx_i)(n dy_j)
    CHECK(sx[0] * sy[0] ==
          doctest::Approx(9.0 * g.area(0, 0)).epsilon(1e-12));
}

TEST_CASE("grid sums and nonnegativity over random patterns") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const Index m = 1 + static_cast<Index>(rng.below(200));
        Vec x(m), y(m);
        for (Index i = 0; i < m; ++i) {
            x[i] = rng.uniform();
            y[i] = rng.uniform();
        }
        const auto g = compute_grid(PointPattern{Window::unit(), x, y});
        CHECK((g.dx >= 0.0).all());
        CHECK((g.dy >= 0.0).all());
        CHECK(std::abs(g.dx.sum() - 1.0) < 1e-12);
        CHECK(std::abs(g.dy.sum() - 1.0) < 1e-12);
        // sum of areas factorizes as (sum dx)(sum dy)
        CHECK(std::abs(g.dx.sum() * g.dy.sum() - 1.0) < 1e-10);
    }
}

TEST_CASE("grid is invariant under point permutation") {
    Rng rng(11);
    Vec x(20), y(20);
    for (Index i = 0; i < 20; ++i) {
        x[i] = rng.uniform();
        y[i] = rng.uniform();
    }
    const auto g1 = compute_grid(PointPattern{Window::unit(), x, y});
    // reverse the points
    Vec xr = x.reverse();
    Vec yr = y.reverse();
    const auto g2 = compute_grid(PointPattern{Window::unit(), xr, yr});
    CHECK((g1.dx == g2.dx).all());
    CHECK((g1.dy == g2.dy).all());
}

TEST_CASE("null spacings match the one-dimensional law: mean 1/n") {
    const Index n = 8;
    const Index reps = 4000;
    // D_i ~ Beta(1, n-1) on the simplex: var = (n-1) / (n^2 (n+1))
    const double var = static_cast<double>(n - 1) /
                       (static_cast<double>(n) * n * (n + 1));
    const double se = std::sqrt(var / static_cast<double>(reps));
    Vec mean_dx = Vec::Zero(n);
    for (Index rep = 0; rep < reps; ++rep) {
        Rng rng = Rng::substream(123, static_cast<std::uint64_t>(rep));
        const auto p = uniform_pattern(n - 1, rng);
        const auto g = compute_grid(p);
        mean_dx += g.dx;
    }
    mean_dx /= static_cast<double>(reps);
    for (Index i = 0; i < n; ++i)
        CHECK(std::abs(mean_dx[i] - 1.0 / static_cast<double>(n)) < 3.0 * se);
}

TEST_CASE("x- and y-spacings are empirically uncorrelated") {
    const Index n = 8;
    const Index reps = 5000;
    double sxy = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
    for (Index rep = 0; rep < reps; ++rep) {
        Rng rng = Rng::substream(321, static_cast<std::uint64_t>(rep));
        const auto g = compute_grid(uniform_pattern(n - 1, rng));
        const double a = g.dx[0];
        const double b = g.dy[0];
        sx += a;
        sy += b;
        sxx += a * a;
        syy += b * b;
        sxy += a * b;
    }
    const double N = static_cast<double>(reps);
    const double cov = sxy / N - (sx / N) * (sy / N);
    const double corr = cov / std::sqrt((sxx / N - (sx / N) * (sx / N)) *
                                        (syy / N - (sy / N) * (sy / N)));
    CHECK(std::abs(corr) < 3.0 / std::sqrt(N));
}
