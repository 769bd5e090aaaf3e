#include "doctest.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "kazhdan/certifier.hpp"
#include "kazhdan/triangle.hpp"

using namespace kz;

namespace {

struct RefEntry {
    Triple t;
    int ell;
    std::vector<Word> relators;
};

std::vector<RefEntry> reference() {
    std::ifstream in(std::string(KZ_TEST_DATA) + "/triangle_presentations.txt");
    std::vector<RefEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        RefEntry e;
        std::string colon, w;
        is >> e.t[0] >> e.t[1] >> e.t[2] >> e.ell >> colon;
        while (is >> w) e.relators.push_back(parse_word(w).canonical_relator());
        std::sort(e.relators.begin(), e.relators.end());
        e.relators.erase(std::unique(e.relators.begin(), e.relators.end()), e.relators.end());
        out.push_back(e);
    }
    return out;
}

std::vector<int> ells(const Triple& t) {
    std::vector<int> v;
    for (auto& p : enumerate_trivalent(t)) v.push_back(p.ell);
    return v;
}

} // namespace

TEST_CASE("gluing index encoding") {
    CHECK(ell_of(Gluing{0, 0, 0, 0, 0, 0}) == 42);
    CHECK(gluing_of(42) == Gluing{0, 0, 0, 0, 0, 0});
    for (int l = 0; l < 64; ++l) CHECK(ell_of(gluing_of(l)) == l);
}

TEST_CASE("orbit partition of F2^6") {
    for (const Triple& t : all_triples(false)) {
        auto orbits = gluing_orbits(t);
        size_t total = 0;
        std::set<int> seen;
        for (auto& o : orbits) {
            total += o.members.size();
            CHECK(o.ell == *std::min_element(o.members.begin(), o.members.end()));
            for (int m : o.members) CHECK(seen.insert(m).second);
        }
        CHECK(total == 64);
    }
}

TEST_CASE("index sets") {
    CHECK(ells({14, 14, 14}) == std::vector<int>{0, 1, 2, 6});
    CHECK(ells({14, 14, 16}) == std::vector<int>{0, 1, 4, 5});
    CHECK(ells({26, 26, 26}) == std::vector<int>{0, 1, 5, 21});
    CHECK(ells({6, 40, 40}) == std::vector<int>{0});
    CHECK(ells({54, 54, 54}) == std::vector<int>{0, 2});
    CHECK(all_triples(false).size() == 220);
    CHECK(enumerate_all().size() == 252);
}

TEST_CASE("enumeration against the reference presentations") {
    auto ref = reference();
    REQUIRE(ref.size() == 252);
    auto all = enumerate_all();
    REQUIRE(all.size() == ref.size());
    // triples whose representative labels differ from the reference ones
    const std::set<Triple> relabelled{{14, 14, 26}, {14, 16, 26}, {14, 18, 26}, {14, 24, 26},
                                      {14, 26, 26}, {16, 26, 26}, {24, 26, 26}};
    std::map<Triple, size_t> ours, theirs;
    for (auto& P : all) ++ours[P.triple];
    for (auto& e : ref) ++theirs[e.t];
    CHECK(ours == theirs);
    size_t matched = 0;
    for (auto& e : ref) {
        bool hit = false;
        for (auto& P : all)
            if (P.triple == e.t && P.ell == e.ell && P.relators == e.relators) hit = true;
        if (hit) ++matched;
        else CHECK_MESSAGE(relabelled.count(e.t) == 1, "unexpected mismatch ", e.t[0], ",", e.t[1], ",", e.t[2], " ", e.ell);
    }
    CHECK(matched == 241);
}

TEST_CASE("assembled presentations are consistent with their vertex models") {
    for (const auto& P : enumerate_all()) {
        CAPTURE(P.name());
        for (int i = 0; i < 3; ++i) {
            CHECK(verify_presentation(P.vertex_relators[size_t(i)], P.vertex_model(i)).all_pass());
            CHECK(P.half_girths[size_t(i)] == vertex_group(P.triple[size_t(i)]).half_girth());
        }
        CHECK(npc_gate(P.half_girths[0], P.half_girths[1], P.half_girths[2]).cls != Curvature::ViolatesNPC);
    }
}

TEST_CASE("identity gluing on X18") {
    auto P = assemble_presentation({18, 18, 18}, 0);
    std::vector<Word> expect;
    for (auto s : {"a^3", "b^3", "c^3", "(ba)^3", "(bA)^3", "(cb)^3", "(cB)^3", "(ac)^3", "(aC)^3"})
        expect.push_back(parse_word(s).canonical_relator());
    std::sort(expect.begin(), expect.end());
    CHECK(P.relators == expect);
}

TEST_CASE("presentation lengths") {
    struct Row {
        Triple t;
        std::vector<int> ell;
        size_t len;
    };
    std::vector<Row> rows = {
        {{6, 40, 40}, {0}, 45},       {{6, 40, 48}, {0}, 37},       {{6, 40, 54}, {0, 2}, 49},
        {{6, 48, 48}, {0}, 29},       {{6, 48, 54}, {0, 2}, 41},    {{6, 54, 54}, {0, 2, 8}, 53},
        {{8, 40, 40}, {0}, 45},       {{8, 40, 48}, {0}, 37},       {{8, 40, 54}, {0, 2}, 49},
        {{8, 48, 48}, {0, 1}, 29},    {{8, 48, 54}, {0, 2}, 41},    {{8, 54, 54}, {0, 2, 8}, 53},
        {{40, 40, 40}, {0}, 57},      {{40, 40, 48}, {0}, 49},      {{40, 40, 54}, {0}, 61},
        {{40, 48, 48}, {0}, 41},      {{40, 48, 54}, {0, 2}, 53},   {{40, 54, 54}, {0, 2, 8}, 65},
        {{48, 48, 48}, {0, 1}, 33},   {{48, 48, 54}, {0}, 45},      {{48, 54, 54}, {0, 2, 8}, 57},
        {{54, 54, 54}, {0, 2}, 69},
    };
    size_t n244 = 0, n444 = 0;
    for (auto& r : rows) {
        CAPTURE(r.t[0]);
        CAPTURE(r.t[1]);
        CAPTURE(r.t[2]);
        auto got = enumerate_trivalent(r.t);
        REQUIRE(got.size() == r.ell.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].ell == r.ell[i]);
            CHECK(presentation_length(got[i]) == r.len);
        }
        (r.t[0] < 40 ? n244 : n444) += got.size();
    }
    CHECK(n244 == 21);
    CHECK(n444 == 17);
    CHECK(presentation_length(std::vector<Word>{}) == 0);
}

TEST_CASE("tilde relators") {
    auto r = tilde_triangle_relators(18);
    CHECK(std::find(r.begin(), r.end(), parse_word("t^3")) != r.end());
    CHECK_THROWS_AS(tilde_triangle_relators(6), Error);
}
