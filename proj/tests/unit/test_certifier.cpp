#include "doctest.h"

#include <cmath>
#include <random>

#include "kazhdan/certifier.hpp"

using namespace kz;

TEST_CASE("EJ certificate examples") {
    double r = std::sqrt(2.0) / 3;
    auto c = ej_certify(r, r, r);
    CHECK(c.verdict == Verdict::TCertified);
    CHECK(std::abs(c.S - (2.0 / 3 + 4 * std::sqrt(2.0) / 27)) < 1e-15);
    CHECK(std::abs(c.S - 0.87618) < 1e-5);
    CHECK(ej_certify(0, 0, 0).verdict == Verdict::TCertified);
    double t = std::sqrt(3.0) / 3;
    auto d = ej_certify(t, t, t);
    CHECK(d.verdict == Verdict::Inconclusive);
    CHECK(std::abs(d.S - (1 + 2 * std::sqrt(3.0) / 9)) < 1e-12);
    CHECK(ej_certify(0.5, 0.5, 0.5, 0.1).verdict == Verdict::Inconclusive);
    CHECK(ej_certify(0.5, 0.5, 0.4, 0.01).verdict == Verdict::TCertified);
}

TEST_CASE("EJ certificate errors") {
    for (auto bad : {std::array<double, 3>{-0.1, 0, 0}, {0, 1.2, 0}, {0, 0, NAN}}) {
        try {
            ej_certify(bad[0], bad[1], bad[2]);
            FAIL("expected OutOfRange");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::OutOfRange);
        }
    }
    CHECK_THROWS_AS(ej_certify_from_gaps(1.5, 0, 0), Error);
}

TEST_CASE("certificate from gaps") {
    CHECK(ej_certify_from_gaps(1, 1, 1).verdict == Verdict::TCertified);
    double d = 1 - std::sqrt(2.0) / 3;
    CHECK(std::abs(ej_certify_from_gaps(d, d, d).S - (2.0 / 3 + 4 * std::sqrt(2.0) / 27)) < 1e-14);
    auto c = ej_certify_from_gaps(2.0 / 3, 2.0 / 3, 2.0 / 3);
    CHECK(std::abs(c.S - (1.0 / 3 + 2.0 / 27)) < 1e-12);
    CHECK(c.verdict == Verdict::TCertified);
}

TEST_CASE("S-form and angle-form agree on random triples") {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_real_distribution<double> u(0, 1);
    size_t disagree = 0;
    for (int i = 0; i < 100000; ++i) {
        auto c = ej_certify(u(rng), u(rng), u(rng));
        if (c.verdict != c.angle_verdict && std::abs(c.S - 1) > 1e-12) ++disagree;
    }
    CHECK(disagree == 0);
}

TEST_CASE("S is symmetric and monotone") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng), c = u(rng), h = u(rng) * (1 - a);
        CHECK(ej_quantity(a, b, c) == doctest::Approx(ej_quantity(c, a, b)));
        CHECK(ej_quantity(a, b, c) == doctest::Approx(ej_quantity(b, a, c)));
        CHECK(ej_quantity(a + h, b, c) >= ej_quantity(a, b, c));
    }
}

TEST_CASE("end-to-end hypothesis of the p=5 certificate") {
    double e1 = std::sqrt(2.0 / 5);
    for (double e3 : {0.0, 0.3, 0.6, 0.7, std::sqrt(3.0 / 5) - 1e-9})
        CHECK(ej_certify(0, e1, e3).verdict == Verdict::TCertified);
    CHECK(ej_certify(0, e1, std::sqrt(3.0 / 5) + 1e-9).verdict == Verdict::Inconclusive);
}

TEST_CASE("curvature gate") {
    CHECK(npc_gate(3, 3, 3).cls == Curvature::EuclideanBorderline);
    CHECK(npc_gate(2, 4, 4).cls == Curvature::EuclideanBorderline);
    CHECK(npc_gate(3, 3, 4).cls == Curvature::Hyperbolic);
    CHECK(npc_gate(2, 3, 5).cls == Curvature::ViolatesNPC);
    CHECK_THROWS_AS(npc_gate(1, 3, 3), Error);
}

TEST_CASE("KMS thresholds") {
    CHECK(kms_kazhdan_threshold({3, 3, 3}, 5).certified);
    CHECK_FALSE(kms_kazhdan_threshold({3, 3, 3}, 3).certified);
    CHECK_FALSE(kms_kazhdan_threshold({4, 4, 4}, 7).certified);
    CHECK(kms_kazhdan_threshold({4, 4, 4}, 11).certified);
    CHECK(kms_kazhdan_threshold({3, 3, 4}, 7).certified);
    CHECK_FALSE(kms_kazhdan_threshold({3, 3, 4}, 5).certified);
    CHECK(kms_kazhdan_threshold({4, 4, 2}, 5).certified);
    CHECK_FALSE(kms_kazhdan_threshold({2, 4, 4}, 3).certified);
    try {
        kms_kazhdan_threshold({2, 3, 3}, 5);
        FAIL("expected BadType");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadType);
    }
    CHECK_THROWS_AS(kms_kazhdan_threshold({3, 3, 3}, 9), Error);
}

TEST_CASE("flat witnesses") {
    CHECK(flat_witness_length("abcb′").length == Surd::root(3));
    CHECK(flat_witness_length("acbc'").length == Surd::root(2));
    CHECK(flat_witness_length("abca′b′c′·a″b″c″b‴").length == Surd::root(21));
    CHECK(flat_witness_length("abcb′·a′b″c′b‴").length == Surd::make(2, 1, 3));
    CHECK(flat_witness_length("aca'bc'b'a''c''a'''b''c'''b'''", {4, 2, 4}).length == Surd::integer(4));
    try {
        flat_witness_length("abab");
        FAIL("expected UnknownPattern");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownPattern);
    }
    CHECK_THROWS_AS(flat_witness_length("abcb'", {2, 4, 4}), Error);
}

TEST_CASE("surds") {
    CHECK(Surd::make(1, 1, 12) == Surd::make(2, 1, 3));
    CHECK(Surd::make(2, 4, 3) == Surd::make(1, 2, 3));
    CHECK(Surd::root(21).value() == doctest::Approx(std::sqrt(21.0)));
    CHECK(Surd::make(3, 1, 3).to_string() == "3*sqrt(3)");
}

TEST_CASE("Z^2 exclusion ratio test") {
    auto a = z2_exclusion(Surd::root(3), Surd::root(3));
    CHECK(a.rational);
    CHECK(a.k == 1);
    CHECK(a.l == 1);
    CHECK_FALSE(z2_exclusion(Surd::integer(3), Surd::root(3)).rational);
    auto b = z2_exclusion(Surd::make(2, 1, 3), Surd::root(3));
    CHECK(b.rational);
    CHECK(b.k == 2);
    CHECK(b.l == 1);
    auto c = z2_exclusion(Surd::root(2), Surd::make(2, 1, 2));
    CHECK(c.k == 1);
    CHECK(c.l == 2);
    try {
        z2_exclusion(Surd::root(5), Surd::root(3));
        FAIL("expected UnsupportedAlgebraicForm");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnsupportedAlgebraicForm);
    }
}
