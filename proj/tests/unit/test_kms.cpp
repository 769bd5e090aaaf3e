#include "doctest.h"

#include "kazhdan/certifier.hpp"
#include "kazhdan/kms.hpp"

using namespace kz;

TEST_CASE("KMS presentations") {
    CHECK(kms_tags().size() == 10);
    auto K = kms_presentation("HC2_1", 7);
    CHECK(K.relators.size() == 10);
    CHECK(K.relators[0] == parse_word("a^7"));
    CHECK(std::find(K.relators.begin(), K.relators.end(), parse_word("[a,b,a]")) != K.relators.end());
    CHECK(std::find(K.relators.begin(), K.relators.end(), parse_word("[a,c,c,a]")) != K.relators.end());
    CHECK((K.half_girth_type() == std::array<int, 3>{3, 3, 4}));
    CHECK(kms_presentation("A2t", 3).relators.size() == 9);
    try {
        kms_presentation("D4", 3);
        FAIL("expected BadTag");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadTag);
    }
}

TEST_CASE("KMS half-girth types are never NPC-violating and follow the thresholds") {
    for (const auto& t : kms_tags()) {
        auto K = kms_presentation(t.tag, 5);
        auto h = K.half_girth_type();
        CHECK(npc_gate(h[0], h[1], h[2]).cls != Curvature::ViolatesNPC);
        CHECK(kms_kazhdan_threshold(h, 11).certified);
    }
}

TEST_CASE("tilde extensions") {
    auto t = kms_tilde_extension("A2t", 5);
    std::vector<Word> expect{parse_word("t^3"), parse_word("a^5"), parse_word("tat^-1b^-1"), parse_word("[a,b,a]"),
                             parse_word("[a,b,b]")};
    CHECK(t == expect);
    CHECK(kms_tilde_extension("HBC2_3", 3).size() == 6);
    CHECK_THROWS_AS(kms_tilde_extension("B2t", 3), Error);
}

TEST_CASE("epimorphism checks") {
    auto e = kms_epimorphism_check("HB2_3", "HB2_2", 5);
    CHECK(e.pass);
    CHECK(e.map == "cab");
    CHECK(kms_epimorphism_check("HC2_1", "A2t", 3).pass);
    try {
        kms_epimorphism_check("A2t", "HB2_3", 5);
        FAIL("expected NotAnEdge");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NotAnEdge);
    }
    std::map<std::pair<std::string, std::string>, std::string> first = {
        {{"HC2_1", "A2t"}, "abc"},    {{"HB2_3", "HB2_2"}, "cab"},  {{"HB2_3", "HC2_2"}, "abc"},
        {{"HB2_3", "HBC2_2"}, "bca"}, {{"HB2_2", "HC2_1"}, "bca"},  {{"HB2_2", "B2t"}, "abc"},
        {{"HC2_2", "C2t"}, "abc"},    {{"HC2_2", "HC2_1"}, "abc"},  {{"HBC2_3", "HBC2_2"}, "abc"},
        {{"HBC2_2", "HC2_1"}, "bac"}, {{"HBC2_2", "BC2t"}, "abc"},
    };
    for (long p : {3, 5, 7})
        for (auto& [s, t] : kms_epimorphism_edges()) {
            CAPTURE(s);
            CAPTURE(t);
            auto r = kms_epimorphism_check(s, t, p);
            CHECK(r.pass);
            CHECK(r.map == first.at({s, t}));
        }
}

TEST_CASE("identifications over F3") {
    for (const auto& k : kms_identifications_p3()) {
        CAPTURE(k.tag);
        CHECK(kms_identify(k.tag, k.triple, k.ell, 3).found);
    }
    CHECK_FALSE(kms_identify("A2t", {6, 54, 54}, 0, 3).found);
}
