#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "kazhdan/catalog.hpp"

using namespace kz;

TEST_CASE("vertex group catalog data") {
    const auto& cat = vertex_group_catalog();
    REQUIRE(cat.size() == 10);
    std::vector<size_t> orders{9, 12, 21, 24, 27, 36, 39, 60, 72, 81};
    std::vector<size_t> graphs{6, 8, 14, 16, 18, 24, 26, 40, 48, 54};
    std::vector<int> girths{4, 4, 6, 6, 6, 6, 6, 8, 8, 8};
    for (size_t i = 0; i < cat.size(); ++i) {
        CAPTURE(cat[i].name);
        CHECK(cat[i].group_order == orders[i]);
        CHECK(cat[i].graph_order == graphs[i]);
        CHECK(cat[i].girth == girths[i]);
        CHECK(closure({cat[i].a, cat[i].b}).order() == orders[i]);
        CHECK(verify_presentation(cat[i].relator_words(), cat[i].model()).all_pass());
        CHECK(cat[i].a.order() == 3);
        CHECK(cat[i].b.order() == 3);
    }
    CHECK(std::abs(vertex_group(26).epsilon - 0.69144) < 1e-5);
    CHECK_THROWS_AS(vertex_group(7), Error);
}

TEST_CASE("automorphism generators fix the relators") {
    for (const auto& e : vertex_group_catalog()) {
        CAPTURE(e.name);
        for (const auto& m : e.aut) {
            std::map<char, Word> phi{{'a', aut_image('a', m)}, {'b', aut_image('b', m)}};
            for (auto& r : e.relator_words())
                CHECK(evaluate_word(r.substitute(phi), e.model()).is_identity());
        }
    }
    CHECK(vertex_group(54).aut.size() == 2);
    CHECK(vertex_group(54).aut[0].cycles == "(a A)");
    CHECK(vertex_group(54).aut[1].cycles == "(b B)");
}

TEST_CASE("listed automorphism (a B)(A b) of X26 is not an automorphism") {
    const auto& e = vertex_group(26);
    std::map<char, Word> phi{{'a', Word::gen('b', -1)}, {'b', Word::gen('a', -1)}};
    bool all = true;
    for (auto& r : e.relator_words()) all = all && evaluate_word(r.substitute(phi), e.model()).is_identity();
    CHECK_FALSE(all);
}

TEST_CASE("matrix generator catalog") {
    const auto& m = matrix_generator_catalog();
    CHECK(m.size() == 6);
    CHECK(matrix_entry("PSL2_41").girth == 10);
    CHECK(matrix_entry("PSL2_41").phi == doctest::Approx(3.82842712474));
    CHECK(matrix_entry("SL2_5").girth == 6);
    CHECK(matrix_entry("SL2_5").phi == doctest::Approx(2.2360679775));
    for (const auto& e : m) {
        CAPTURE(e.name);
        CHECK(e.a.order() == 5);
        CHECK(e.b.order() == 5);
    }
    CHECK_FALSE(matrix_entry("PSL2_109").ramanujan);
    CHECK(matrix_entry("PSL2_131").ramanujan);
}

TEST_CASE("H-group vertex models satisfy their relators") {
    for (const auto& h : h_groups()) {
        CAPTURE(h.name);
        CHECK(verify_presentation(relators_on(h.relators, "ab"), {{'a', h.ab.a}, {'b', h.ab.b}}).all_pass());
        CHECK(verify_presentation(relators_on(h.relators, "bc"), h.bc).all_pass());
        CHECK(verify_presentation(relators_on(h.relators, "ac"), h.ac).all_pass());
    }
    const auto& h31 = h_group("H31");
    auto ac = relators_on(h31.relators, "ac");
    CHECK(std::find(ac.begin(), ac.end(), parse_word("[a,c]")) != ac.end());
    auto g = kzt::groups_of(h31.ac.at('a'), h31.ac.at('c'));
    CHECK(g.X.order() == 25);
    CHECK(h_group("H31").bc_name == "U4(5)");
    CHECK(h_group("H109").bc_name == "U3(5)");
}
