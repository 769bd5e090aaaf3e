#include "doctest.h"

#include "kazhdan/catalog.hpp"
#include "kazhdan/group.hpp"
#include "kazhdan/word.hpp"

using namespace kz;

TEST_CASE("field arithmetic") {
    const Field* F5 = Field::prime(5);
    CHECK(F5->mul(3, 4) == 2);
    CHECK(F5->inv(2) == 3);
    CHECK(Field::prime(5) == F5);
    const Field* F9 = Field::f9();
    CHECK(F9->q == 9);
    int g = F9->generator();
    CHECK(F9->pow(g, 8) == 1);
    CHECK(F9->pow(g, 4) != 1);
    for (int a = 1; a < 9; ++a) CHECK(F9->mul(a, F9->inv(a)) == 1);
}

TEST_CASE("closure of small groups") {
    GroupElement id = GroupElement::permutation({0, 1, 2});
    CHECK(closure({id}).order() == 1);
    const auto& x8 = vertex_group(8);
    CHECK(closure({x8.a, x8.b}).order() == 12);
    const auto& sl = matrix_entry("SL2_5");
    CHECK(closure({sl.a, sl.b}).order() == 120);
    CHECK(cyclic_subgroup(sl.a).order() == 5);
    CHECK(cyclic_subgroup(matrix_entry("PSL2_109").a).order() == 5);
    CHECK(closure({matrix_entry("SL2_9").a, matrix_entry("SL2_9").b}).order() == 720);
}

TEST_CASE("closure errors") {
    const auto& sl = matrix_entry("SL2_5");
    CHECK_THROWS_AS(closure({sl.a, sl.b}, 100), Error);
    try {
        closure({sl.a, vertex_group(8).a});
        FAIL("expected MixedVariant");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MixedVariant);
    }
}

TEST_CASE("closure is idempotent") {
    const auto& e = vertex_group(24);
    FiniteGroup G = closure({e.a, e.b});
    std::vector<GroupElement> gens = G.generators();
    gens.push_back(G.element(G.order() / 2));
    CHECK(closure(gens).order() == G.order());
}

TEST_CASE("projective normalisation is multiplicative") {
    const Field* F = Field::prime(7);
    GroupElement x = GroupElement::matrix(F, {{3, 1}, {2, 5}}, true);
    GroupElement y = GroupElement::matrix(F, {{0, 4}, {6, 2}}, true);
    GroupElement xs = GroupElement::matrix(F, {{6, 2}, {4, 10}}, true);
    CHECK(x == xs);
    CHECK(x * y == xs * y);
    CHECK(GroupElement::matrix(F, {{3, 0}, {0, 3}}, true).is_identity());
}

TEST_CASE("word parsing and normal forms") {
    Word w = parse_word("abBa");
    CHECK(w.to_string() == parse_word("a^2").to_string());
    CHECK(parse_word("[a,b]") == parse_word("ABab"));
    CHECK(parse_word("[a,b,a]") == commutator({Word::gen('a'), Word::gen('b'), Word::gen('a')}));
    CHECK(parse_word("(ab)^3") == parse_word("ababab"));
    CHECK(parse_word("a^-2") == parse_word("AA"));
    CHECK(parse_word("bab").canonical_relator() == parse_word("abb").canonical_relator());
    CHECK(parse_word("ab").canonical_relator() == parse_word("BA").canonical_relator());
    CHECK_THROWS_AS(parse_word("a^"), Error);
    CHECK_THROWS_AS(parse_word("[a"), Error);
}

TEST_CASE("word evaluation") {
    GroupElement e = GroupElement::permutation({0, 1, 2, 3});
    CHECK(evaluate_word(Word(), {{'a', e}}).is_identity());
    auto [a, b] = unipotent_pair(3, 3);
    CHECK(evaluate_word(parse_word("[a,b,a]"), {{'a', a}, {'b', b}}).is_identity());
    const auto& x24 = vertex_group(24);
    CHECK(evaluate_word(parse_word("(ab)^3"), x24.model()).is_identity());
    try {
        evaluate_word(parse_word("ac"), {{'a', a}});
        FAIL("expected UnassignedSymbol");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::UnassignedSymbol);
    }
}

TEST_CASE("presentation checks") {
    auto [a, b] = unipotent_pair(3, 5);
    auto rels = unipotent_relators(3, 'a', 'b', 5);
    CHECK(verify_presentation(rels, {{'a', a}, {'b', b}}).all_pass());

    const auto& h = h_group("H109");
    auto ab = relators_on(h.relators, "ab");
    CHECK(ab.size() == 9);
    CHECK(verify_presentation(ab, {{'a', h.ab.a}, {'b', h.ab.b}}).all_pass());

    auto bad = verify_presentation({parse_word("a^3")}, {{'a', matrix_entry("SL2_5").a}});
    CHECK_FALSE(bad.all_pass());
    CHECK(bad.failures() == 1);
}

TEST_CASE("root-group model orders") {
    for (long p : {3, 5, 7}) {
        auto [a3, b3] = unipotent_pair(3, p);
        CHECK(closure({a3, b3}).order() == size_t(p * p * p));
        auto [a4, b4] = unipotent_pair(4, p);
        CHECK(closure({a4, b4}).order() == size_t(p * p * p * p));
        CHECK(verify_presentation(unipotent_relators(4, 'a', 'b', p), {{'a', a4}, {'b', b4}}).all_pass());
    }
}
