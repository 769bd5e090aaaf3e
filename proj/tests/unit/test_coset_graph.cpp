#include "doctest.h"

#include "helpers.hpp"

using namespace kz;

TEST_CASE("catalog coset graphs: counts and girths") {
    for (const auto& e : vertex_group_catalog()) {
        CAPTURE(e.name);
        auto g = kzt::groups_of(e.a, e.b);
        CosetGraph G = build_coset_graph(g.X, g.A, g.B);
        CHECK(G.vertices() == e.graph_order);
        CHECK(G.left == g.X.order() / g.A.order());
        CHECK(G.right == g.X.order() / g.B.order());
        CHECK(G.edges == g.X.order());
        CHECK(G.graph.edge_count() == G.edges);
        CHECK(G.k() == 3);
        for (size_t v = 0; v < G.vertices(); ++v) CHECK(G.graph.degree(v) == 3);
        for (auto [u, w] : G.graph.edges()) CHECK(((u < G.left) != (w < G.left)));
        CHECK(girth(G).girth == e.girth);
        CHECK(girth_all_sources(G.graph).girth == e.girth);
        CHECK(girth_nonbacktracking(G.graph) == e.girth);
    }
}

TEST_CASE("named graphs") {
    auto k33 = kzt::catalog_graph(6);
    CHECK(k33.vertices() == 6);
    CHECK(k33.graph.edge_count() == 9);
    auto cube = kzt::catalog_graph(8);
    CHECK(diameter(cube) == 3);
    auto heawood = kzt::catalog_graph(14);
    CHECK(girth(heawood).girth == 6);
    CHECK(diameter(heawood) == 3);
    auto pappus = kzt::catalog_graph(18);
    CHECK(pappus.vertices() == 18);
    CHECK(pappus.graph.edge_count() == 27);
}

TEST_CASE("C5 x C5 gives K5,5") {
    auto [u, v] = unipotent_pair(2, 5);
    auto g = kzt::groups_of(u, v);
    CHECK(g.X.order() == 25);
    CosetGraph G = build_coset_graph(g.X, g.A, g.B);
    CHECK(G.vertices() == 10);
    CHECK(G.graph.edge_count() == 25);
    CHECK(girth(G).girth == 4);
}

TEST_CASE("SL2 coset graph girths") {
    auto sl5 = matrix_entry("SL2_5");
    auto g = kzt::groups_of(sl5.a, sl5.b);
    CHECK(girth(build_coset_graph(g.X, g.A, g.B)).girth == 6);
    auto sl9 = matrix_entry("SL2_9");
    auto h = kzt::groups_of(sl9.a, sl9.b);
    CHECK(girth(build_coset_graph(h.X, h.A, h.B)).girth == 8);
}

TEST_CASE("NotSubgroup") {
    const auto& e = vertex_group(8);
    FiniteGroup X = closure({e.a, e.b});
    FiniteGroup Y = cyclic_subgroup(vertex_group(6).a);
    try {
        build_coset_graph(X, Y, cyclic_subgroup(e.b));
        FAIL("expected NotSubgroup");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NotSubgroup);
    }
}

TEST_CASE("disconnected graphs are flagged") {
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4}});
    auto r = girth_all_sources(g);
    CHECK_FALSE(r.connected);
    CHECK(r.girth == 3);
    CHECK(component_count(g) == 2);
    Graph tree = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(girth_all_sources(tree).girth == kInfiniteGirth);
}

TEST_CASE("line graph of K3,3 matches the Cayley graph of C3 x C3") {
    const auto& e = vertex_group(6);
    auto g = kzt::groups_of(e.a, e.b);
    CosetGraph G = build_coset_graph(g.X, g.A, g.B);
    Graph L = line_graph(G.graph);
    Graph C = cayley_graph(g.X, {e.a, e.a.inverse(), e.b, e.b.inverse()});
    CHECK(L.n == 9);
    CHECK(C.n == 9);
    CHECK(L.degree_sequence() == C.degree_sequence());
}

TEST_CASE("Cayley graph of SL2(5)") {
    auto sl5 = matrix_entry("SL2_5");
    auto g = kzt::groups_of(sl5.a, sl5.b);
    std::vector<GroupElement> S;
    for (auto* H : {&g.A, &g.B})
        for (size_t i = 0; i < H->order(); ++i)
            if (!H->element(i).is_identity()) S.push_back(H->element(i));
    Graph C = cayley_graph(g.X, S);
    CHECK(C.n == 120);
    for (size_t v = 0; v < C.n; ++v) CHECK(C.degree(v) == 8);
    try {
        cayley_graph(g.X, {sl5.a});
        FAIL("expected NonSymmetricSet");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NonSymmetricSet);
    }
}

TEST_CASE("line graph of a single edge") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    Graph L = line_graph(g);
    CHECK(L.n == 1);
    CHECK(L.edge_count() == 0);
}

TEST_CASE("exports") {
    auto k33 = kzt::catalog_graph(6);
    std::string dot = to_dot(k33);
    CHECK(dot.find("L0") != std::string::npos);
    CHECK(dot.find("R2") != std::string::npos);
    CHECK(to_dot(k33) == dot);

    auto cube = kzt::catalog_graph(8);
    std::string g6 = to_graph6(cube.graph);
    Graph back = parse_graph6(g6);
    CHECK(back.n == 8);
    CHECK(back.edges() == cube.graph.edges());
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");

    auto pappus = kzt::catalog_graph(18);
    std::string el = to_edge_list(pappus.graph);
    CHECK(std::count(el.begin(), el.end(), '\n') == 27);
}
