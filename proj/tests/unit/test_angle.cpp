#include "doctest.h"

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "kazhdan/angle.hpp"

using namespace kz;

TEST_CASE("spectral angles of the catalog") {
    for (const auto& e : vertex_group_catalog()) {
        CAPTURE(e.name);
        auto g = kzt::groups_of(e.a, e.b);
        auto r = epsilon_spectral(g.X, g.A, g.B);
        CHECK(r.route == "spectral");
        CHECK(std::abs(r.epsilon - e.epsilon) < 1e-9);
        CHECK(r.alpha_degrees >= 0);
        CHECK(r.alpha_degrees <= 90);
    }
}

TEST_CASE("oracle agrees with the spectral route") {
    for (const auto& e : vertex_group_catalog()) {
        CAPTURE(e.name);
        auto g = kzt::groups_of(e.a, e.b);
        auto s = epsilon_spectral(g.X, g.A, g.B);
        auto o = epsilon_projection_oracle(g.X, g.A, g.B);
        CHECK(o.route == "oracle");
        CHECK(std::abs(s.epsilon - o.epsilon) <= 1e-8);
    }
}

TEST_CASE("oracle refuses large groups") {
    auto sl9 = matrix_entry("SL2_9");
    auto g = kzt::groups_of(sl9.a, sl9.b);
    try {
        epsilon_projection_oracle(g.X, g.A, g.B);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("angle is symmetric and conjugation invariant") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int id : {14, 24, 40, 54}) {
        CAPTURE(id);
        const auto& e = vertex_group(id);
        auto g = kzt::groups_of(e.a, e.b);
        double base = epsilon_spectral(g.X, g.A, g.B).epsilon;
        CHECK(std::abs(epsilon_spectral(g.X, g.B, g.A).epsilon - base) < 1e-9);
        std::uniform_int_distribution<size_t> d(0, g.X.order() - 1);
        for (int t = 0; t < 3; ++t) {
            GroupElement x = g.X.element(d(rng));
            GroupElement a2 = x.inverse() * e.a * x;
            FiniteGroup A2 = cyclic_subgroup(a2);
            if (closure({a2, e.b}).order() != g.X.order()) continue;
            CHECK(std::abs(epsilon_spectral(g.X, A2, g.B).epsilon - base) < 1e-9);
        }
    }
}

TEST_CASE("spectral preconditions") {
    const auto& e = vertex_group(8);
    auto g = kzt::groups_of(e.a, e.b);
    try {
        epsilon_spectral(g.X, g.A, g.A);
        FAIL("expected NotGenerating");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NotGenerating);
    }
    FiniteGroup V = closure({GroupElement::permutation({1, 0, 3, 2}), GroupElement::permutation({2, 3, 0, 1})});
    FiniteGroup A4 = closure({GroupElement::permutation({1, 2, 0, 3}), GroupElement::permutation({1, 0, 3, 2})});
    FiniteGroup C3 = cyclic_subgroup(GroupElement::permutation({1, 2, 0, 3}));
    try {
        epsilon_spectral(A4, C3, V);
        FAIL("expected UnequalIndices");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::UnequalIndices);
    }
}

TEST_CASE("Gauss periods") {
    auto r73 = gauss_period_epsilon(7, 3);
    CHECK(std::abs(r73.angle.epsilon - std::sqrt(2.0) / 3) < 1e-12);
    CHECK(r73.has_closed_form);
    auto r52 = gauss_period_epsilon(5, 2);
    CHECK(std::abs(r52.angle.epsilon - (std::sqrt(5.0) + 1) / 4) < 1e-12);
    auto r133 = gauss_period_epsilon(13, 3);
    CHECK(std::abs(r133.angle.epsilon - 0.69144) < 1e-5);
    CHECK(std::abs(r133.angle.epsilon - vertex_group(26).epsilon) < 1e-12);
    CHECK_FALSE(r133.has_closed_form);
    CHECK(std::abs(r133.angle.alpha_degrees - 46.26) < 0.01);
    for (auto [p, r] : std::vector<std::pair<long, long>>{{7, 3}, {13, 3}, {13, 4}, {31, 5}, {101, 50}}) {
        auto g = gauss_period_epsilon(p, r);
        CHECK(g.periods.size() == size_t((p - 1) / r));
        CHECK(std::abs(g.period_sum.real() + 1) < 1e-10);
        CHECK(std::abs(g.period_sum.imag()) < 1e-10);
    }
    CHECK_THROWS_AS(gauss_period_epsilon(13, 5), Error);
    CHECK_THROWS_AS(gauss_period_epsilon(15, 2), Error);
}

TEST_CASE("unipotent angles") {
    CHECK(std::abs(epsilon_unipotent(Unipotent::U3, 3).epsilon - std::sqrt(3.0) / 3) < 1e-15);
    CHECK(std::abs(epsilon_unipotent(Unipotent::U4, 3).epsilon - std::sqrt(2.0 / 3)) < 1e-15);
    CHECK(std::abs(epsilon_unipotent(Unipotent::U4, 5).epsilon - 0.632456) < 1e-6);
    CHECK(epsilon_unipotent(Unipotent::U2, 5).epsilon == 0);
    try {
        epsilon_unipotent(Unipotent::U3, 2);
        FAIL("expected BadPrime");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadPrime);
    }
    for (long p : {3, 5, 7}) {
        for (int r : {3, 4}) {
            auto [a, b] = unipotent_pair(r, p);
            auto g = kzt::groups_of(a, b);
            double s = epsilon_spectral(g.X, g.A, g.B).epsilon;
            double c = epsilon_unipotent(r == 3 ? Unipotent::U3 : Unipotent::U4, p).epsilon;
            CHECK(std::abs(s - c) < 1e-9);
        }
    }
}
