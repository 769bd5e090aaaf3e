#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "kazhdan/spectra.hpp"

using namespace kz;

TEST_CASE("symmetric eigensolver on a small matrix") {
    std::vector<double> a{2, 1, 0, 1, 2, 1, 0, 1, 2};
    auto ev = symmetric_eigen(a, 3);
    CHECK(ev[0] == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-12));
    std::vector<double> vecs;
    symmetric_eigen(a, 3, true, &vecs);
    REQUIRE(vecs.size() == 9);
}

TEST_CASE("second eigenvalues of named graphs") {
    CHECK(std::abs(dense_second_eigenvalue(kzt::catalog_graph(6).graph).eta2) < 1e-10);
    CHECK(std::abs(dense_second_eigenvalue(kzt::catalog_graph(8).graph).eta2 - 1) < 1e-10);
    CHECK(std::abs(dense_second_eigenvalue(kzt::catalog_graph(14).graph).eta2 - std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("dense spectra: bipartite symmetry and traces") {
    for (const auto& e : vertex_group_catalog()) {
        CAPTURE(e.name);
        auto G = kzt::catalog_graph(e.id);
        auto ev = dense_spectrum(G.graph);
        size_t n = ev.size();
        double s1 = 0, s2 = 0;
        for (size_t i = 0; i < n; ++i) {
            CHECK(std::abs(ev[i] + ev[n - 1 - i]) < 1e-9);
            s1 += ev[i];
            s2 += ev[i] * ev[i];
        }
        CHECK(std::abs(s1) < 1e-9);
        CHECK(std::abs(s2 - 2.0 * double(G.graph.edge_count())) < 1e-8);
        CHECK(std::abs(ev[n - 1] - 3) < 1e-10);
    }
}

TEST_CASE("report invariants") {
    auto G = kzt::catalog_graph(40);
    auto r = dense_second_eigenvalue(G.graph);
    CHECK(r.method == "dense");
    CHECK(r.k == 3);
    CHECK(std::abs(r.delta - (1 - r.eta2 / 3)) < 1e-15);
    CHECK(std::abs(r.lambda2 - (r.eta2 + 1)) < 1e-15);
    CHECK(r.eta2 >= 0);
    CHECK(r.eta2 <= 3);
    CHECK(r.ramanujan == RamanujanStatus::Ramanujan);
}

TEST_CASE("iterative solver agrees with the dense one") {
    for (int id : {14, 26, 40, 48, 54}) {
        CAPTURE(id);
        auto G = kzt::catalog_graph(id);
        auto d = dense_second_eigenvalue(G.graph);
        auto it = iterative_second_eigenvalue(G.graph, G.left, 1e-11);
        CHECK(it.method == "iterative");
        CHECK(std::abs(it.eta2 - d.eta2) <= std::max(it.bound, 1e-9));
        CHECK(it.bound <= 1e-9);
    }
    auto sl9 = matrix_entry("SL2_9");
    auto g = kzt::groups_of(sl9.a, sl9.b);
    auto G = build_coset_graph(g.X, g.A, g.B);
    auto d = dense_second_eigenvalue(G.graph);
    auto it = iterative_second_eigenvalue(G.graph, G.left, 1e-10);
    CHECK(std::abs(it.eta2 - d.eta2) <= it.bound + 1e-12);
}

TEST_CASE("Ramanujan classification") {
    CHECK(is_ramanujan(2.0, 1e-6, 3) == RamanujanStatus::Ramanujan);
    CHECK(is_ramanujan(2.9, 1e-6, 3) == RamanujanStatus::NotRamanujan);
    CHECK(is_ramanujan(2 * std::sqrt(2.0), 1e-6, 3) == RamanujanStatus::Undecided);
    for (const auto& e : vertex_group_catalog())
        CHECK(dense_second_eigenvalue(kzt::catalog_graph(e.id).graph).ramanujan == RamanujanStatus::Ramanujan);
}

TEST_CASE("spectral errors") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    try {
        dense_second_eigenvalue(g);
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Disconnected);
    }
    Graph big = Graph::from_edges(kDenseLimit + 1, {{0, 1}});
    try {
        dense_second_eigenvalue(big);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("Cayley graph relation lambda2 = eta2 + k - 2") {
    for (int id : {6, 8, 14, 16, 18, 24, 26, 40, 48, 54}) {
        CAPTURE(id);
        const auto& e = vertex_group(id);
        auto g = kzt::groups_of(e.a, e.b);
        auto G = build_coset_graph(g.X, g.A, g.B);
        auto r = dense_second_eigenvalue(G.graph);
        Graph C = cayley_graph(g.X, {e.a, e.a.inverse(), e.b, e.b.inverse()});
        auto ev = dense_spectrum(C);
        CHECK(std::abs(ev[ev.size() - 2] - r.lambda2) < 1e-8);
        auto lev = dense_spectrum(line_graph(G.graph));
        CHECK(lev.size() == ev.size());
        for (size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] - lev[i]) < 1e-8);
    }
}
