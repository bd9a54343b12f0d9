// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>

#include "csr/errors.hpp"
#include "csr/moments.hpp"

using namespace csr;

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kPiSqOver6 = 1.6449340668482264364724151666460252;
} // namespace

TEST_CASE("mu_quadrature hits the closed forms") {
    CHECK(std::abs(mu_quadrature(builtin("square"), 128).value - 4.0) < 1e-6);
    CHECK(std::abs(mu_quadrature(builtin("identity"), 128).value - 1.0) < 1e-9);
    CHECK(std::abs(mu_quadrature(builtin("neglog"), 128).value - 2.0 * kEulerGamma) <
          1e-5);
}

TEST_CASE("eta_quadrature hits the closed forms") {
    CHECK(std::abs(eta_quadrature(builtin("square"), 128).value - 80.0) < 1e-4);
    CHECK(std::abs(eta_quadrature(builtin("identity"), 128).value - 1.0) < 1e-9);
    CHECK(std::abs(eta_quadrature(builtin("neglog"), 128).value - kPiSqOver6) < 1e-5);
}

TEST_CASE("c_quadrature hits the closed forms") {
    CHECK(std::abs(c_quadrature(builtin("square"), 128).value - 8.0) < 1e-5);
    CHECK(std::abs(c_quadrature(builtin("identity"), 128).value - 1.0) < 1e-9);
    CHECK(std::abs(c_quadrature(builtin("neglog"), 128).value - (-1.0)) < 1e-5);
}

TEST_CASE("c is symmetric between the two exponential roles") {
    for (const char* name : {"square", "absdev", "neglog", "identity"}) {
        const GFunction g = builtin(name);
        const double direct = c_quadrature(g, 128).value;
        const double swapped = c_quadrature(g, 128, true).value;
        CAPTURE(name);
        CHECK(std::abs(direct - swapped) < 1e-10);
    }
}

TEST_CASE("doubling nodes from 64 to 128 changes each moment by < 1e-5") {
    for (const char* name : {"square", "absdev", "neglog", "identity"}) {
        const GFunction g = builtin(name);
        CAPTURE(name);
        CHECK(mu_quadrature(g, 128).err < 1e-5);
        CHECK(eta_quadrature(g, 128).err < 1e-5);
        CHECK(c_quadrature(g, 128).err < 1e-5);
    }
}

TEST_CASE("compute_moments assembles the moment set") {
    const MomentSet sq = compute_moments(builtin("square"), 128);
    CHECK(sq.mu == doctest::Approx(4.0));
    CHECK(sq.eta == doctest::Approx(80.0));
    CHECK(sq.c == doctest::Approx(8.0));
    CHECK(sq.sigma2 == doctest::Approx(32.0));
    CHECK(sq.method == MomentMethod::closed_form);
    CHECK_FALSE(sq.degenerate);

    const MomentSet id = compute_moments(builtin("identity"), 128);
    CHECK(id.sigma2 == 0.0);
    CHECK(id.degenerate);

    const MomentSet nl = compute_moments(builtin("neglog"), 128);
    CHECK(nl.sigma2 == doctest::Approx(2.0 * (kPiSqOver6 - 1.0)));

    const MomentSet ab = compute_moments(builtin("absdev"), 128);
    CHECK(ab.method == MomentMethod::quadrature);
    CHECK(std::abs(ab.sigma2 - 2.0 * (ab.eta - ab.c * ab.c)) < 1e-12);
    CHECK(ab.sigma2 >= 0.0);
}

TEST_CASE("quadrature_moments satisfies the sigma2 identity") {
    for (const char* name : {"square", "absdev", "neglog"}) {
        const MomentSet m = quadrature_moments(builtin(name), 64);
        CAPTURE(name);
        CHECK(std::abs(m.sigma2 - 2.0 * (m.eta - m.c * m.c)) < 1e-12);
        CHECK(m.sigma2 >= 0.0);
    }
}

TEST_CASE("nodes precondition") {
    CHECK_THROWS_AS(mu_quadrature(builtin("square"), 8), DomainError);
    CHECK_THROWS_AS(compute_moments(builtin("absdev"), 15), DomainError);
}

TEST_CASE("mc_oracle agrees with closed forms within its 3-SE band") {
    const MomentSet sq = mc_oracle(builtin("square"), 1000000, 2024);
    CHECK(std::abs(sq.mu - 4.0) < sq.err);
    CHECK(std::abs(sq.eta - 80.0) < sq.err);
    CHECK(std::abs(sq.c - 8.0) < sq.err);

    const MomentSet id = mc_oracle(builtin("identity"), 1000000, 99);
    CHECK(std::abs(id.c - 1.0) < id.err);
    CHECK(std::abs(id.mu - 1.0) < id.err);
}

TEST_CASE("mc_oracle is the check for absdev (no closed form)") {
    const MomentSet q = quadrature_moments(builtin("absdev"), 128);
    const MomentSet mc = mc_oracle(builtin("absdev"), 1000000, 7);
    CHECK(std::abs(q.mu - mc.mu) < mc.err);
    CHECK(std::abs(q.eta - mc.eta) < mc.err);
    CHECK(std::abs(q.c - mc.c) < mc.err);
}

TEST_CASE("mc_oracle is bit-identical for a fixed seed and count") {
    const MomentSet a = mc_oracle(builtin("absdev"), 20000, 555);
    const MomentSet b = mc_oracle(builtin("absdev"), 20000, 555);
    CHECK(a.mu == b.mu);
    CHECK(a.eta == b.eta);
    CHECK(a.c == b.c);
    CHECK(a.sigma2 == b.sigma2);
    CHECK(a.err == b.err);
}

TEST_CASE("mc_oracle sample precondition") {
    CHECK_THROWS_AS(mc_oracle(builtin("square"), 9999, 1), DomainError);
}

TEST_CASE("non-finite kernel evaluations name the offending node") {
    GFunction bad;
    bad.name = "bad";
    bad.id = KernelId::custom;
    bad.fn = [](double) { return std::numeric_limits<double>::infinity(); };
    CHECK_THROWS_AS(mu_quadrature(bad, 16), NumericalError);
}
