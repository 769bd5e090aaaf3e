#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "triangle.hpp"
#include "word.hpp"

namespace kz {

/// One vertex of a KMS diagram: root-group model of half-girth r on (x, y).
struct KMSVertex {
    char x;
    char y;
    int r;
};

struct KMSSpec {
    std::string tag;
    std::string display;
    long p = 0;
    std::array<KMSVertex, 3> vertices{};
    std::vector<Word> relators; // a^p, b^p, c^p, then each vertex's commutators
    std::array<int, 3> half_girth_type() const {
        std::array<int, 3> t{vertices[0].r, vertices[1].r, vertices[2].r};
        std::sort(t.begin(), t.end());
        return t;
    }
    std::string text() const { return presentation_text("abc", relators); }
};

struct KMSTagInfo {
    std::string tag;
    std::string display;
    std::array<KMSVertex, 3> vertices;
};

inline const std::vector<KMSTagInfo>& kms_tags() {
    static const std::vector<KMSTagInfo> t = {
        {"B2t", "~B2", {{{'a', 'b', 2}, {'c', 'b', 4}, {'c', 'a', 4}}}},
        {"C2t", "~C2", {{{'a', 'b', 2}, {'b', 'c', 4}, {'a', 'c', 4}}}},
        {"BC2t", "~BC2", {{{'a', 'b', 2}, {'b', 'c', 4}, {'c', 'a', 4}}}},
        {"A2t", "~A2", {{{'a', 'b', 3}, {'b', 'c', 3}, {'a', 'c', 3}}}},
        {"HC2_1", "HC2(1)", {{{'a', 'b', 3}, {'b', 'c', 3}, {'a', 'c', 4}}}},
        {"HB2_2", "HB2(2)", {{{'a', 'b', 3}, {'c', 'b', 4}, {'c', 'a', 4}}}},
        {"HC2_2", "HC2(2)", {{{'a', 'b', 3}, {'b', 'c', 4}, {'a', 'c', 4}}}},
        {"HBC2_2", "HBC2(2)", {{{'a', 'b', 3}, {'b', 'c', 4}, {'c', 'a', 4}}}},
        {"HB2_3", "HB2(3)", {{{'a', 'b', 4}, {'b', 'c', 4}, {'a', 'c', 4}}}},
        {"HBC2_3", "HBC2(3)", {{{'a', 'b', 4}, {'b', 'c', 4}, {'c', 'a', 4}}}},
    };
    return t;
}

inline const KMSTagInfo& kms_tag(const std::string& tag) {
    for (auto& t : kms_tags())
        if (t.tag == tag) return t;
    throw Error(Errc::BadTag, "unknown KMS tag " + tag);
}

inline KMSSpec kms_presentation(const std::string& tag, long p) {
    const auto& info = kms_tag(tag);
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadPrime, "p must be an odd prime");
    KMSSpec s;
    s.tag = info.tag;
    s.display = info.display;
    s.p = p;
    s.vertices = info.vertices;
    for (char g : {'a', 'b', 'c'}) s.relators.push_back(Word::gen(g).pow(int(p)));
    for (auto& v : info.vertices)
        for (auto& w : unipotent_relators(v.r, v.x, v.y, p, false)) s.relators.push_back(w);
    return s;
}

/// <t,a,b | t^3, a^p, t a t^-1 b^-1, vertex relators on (a,b)>, defined for A2t and HBC2_3.
inline std::vector<Word> kms_tilde_extension(const std::string& tag, long p) {
    if (tag != "A2t" && tag != "HBC2_3") throw Error(Errc::BadTag, "no cyclic extension for " + tag);
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadPrime, "p must be an odd prime");
    std::vector<Word> out{parse_word("t^3"), Word::gen('a').pow(int(p)), parse_word("tat^-1b^-1")};
    for (auto& w : unipotent_relators(tag == "A2t" ? 3 : 4, 'a', 'b', p, false)) out.push_back(w);
    return out;
}

inline const std::vector<std::pair<std::string, std::string>>& kms_epimorphism_edges() {
    static const std::vector<std::pair<std::string, std::string>> e = {
        {"HC2_1", "A2t"},   {"HB2_3", "HB2_2"},  {"HB2_3", "HC2_2"},  {"HB2_3", "HBC2_2"},
        {"HB2_2", "HC2_1"}, {"HB2_2", "B2t"},    {"HC2_2", "C2t"},    {"HC2_2", "HC2_1"},
        {"HBC2_3", "HBC2_2"}, {"HBC2_2", "HC2_1"}, {"HBC2_2", "BC2t"},
    };
    return e;
}

struct EpimorphismCheck {
    std::string source, target;
    long p = 0;
    std::string map; // images of a,b,c, e.g. "bca"
    std::vector<RelatorCheck> relators;
    bool pass = false;
};

namespace detail {

inline std::vector<RelatorCheck> check_kms_map(const KMSSpec& src, const KMSSpec& tgt, const std::string& img) {
    std::vector<RelatorCheck> out;
    auto im = [&](char g) { return img[size_t(g - 'a')]; };
    for (auto& v : src.vertices) {
        char X = im(v.x), Y = im(v.y);
        const KMSVertex* tv = nullptr;
        for (auto& w : tgt.vertices)
            if ((w.x == X && w.y == Y) || (w.x == Y && w.y == X)) tv = &w;
        auto [A, B] = unipotent_pair(tv->r, tgt.p);
        Assignment model{{tv->x, A}, {tv->y, B}};
        std::map<char, Word> sub{{v.x, Word::gen(X)}, {v.y, Word::gen(Y)}};
        for (auto& r : unipotent_relators(v.r, v.x, v.y, src.p, true)) {
            Word w = r.substitute(sub);
            out.push_back({r, evaluate_word(w, model).is_identity()});
        }
    }
    return out;
}

} // namespace detail

/// Finds the first generator permutation (lexicographic) under which every
/// source vertex relator holds in the matching target vertex model.
inline EpimorphismCheck kms_epimorphism_check(const std::string& source, const std::string& target, long p) {
    const auto& edges = kms_epimorphism_edges();
    if (std::find(edges.begin(), edges.end(), std::make_pair(source, target)) == edges.end())
        throw Error(Errc::NotAnEdge, source + " -> " + target + " is not an epimorphism edge");
    KMSSpec src = kms_presentation(source, p), tgt = kms_presentation(target, p);
    EpimorphismCheck res;
    res.source = source;
    res.target = target;
    res.p = p;
    std::string img = "abc";
    std::vector<RelatorCheck> first;
    do {
        auto checks = detail::check_kms_map(src, tgt, img);
        bool ok = std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.holds; });
        if (first.empty()) first = checks;
        if (ok) {
            res.map = img;
            res.relators = checks;
            res.pass = true;
            return res;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    res.relators = first;
    return res;
}

struct IdentificationResult {
    std::string tag;
    Triple triple{};
    int ell = 0;
    std::string map; // images of a,b,c in the triangle group, capitals for inverses
    bool found = false;
};

/// Searches the 48 signed generator maps a,b,c -> (a,b,c permuted)^(+-1) under
/// which each KMS vertex matches a triangle vertex: the KMS relators hold in
/// the catalog model, the triangle relators hold in the root-group model, and
/// the two vertex groups have equal order.
inline IdentificationResult kms_identify(const std::string& tag, const Triple& t, int ell, long p = 3) {
    KMSSpec K = kms_presentation(tag, p);
    TrianglePresentation P = assemble_presentation(t, ell);
    IdentificationResult res;
    res.tag = tag;
    res.triple = t;
    res.ell = ell;
    std::string perm = "abc";
    do {
        for (int signs = 0; signs < 8; ++signs) {
            std::map<char, Word> phi, phi_inv;
            std::string label;
            for (int g = 0; g < 3; ++g) {
                int s = (signs >> g) & 1 ? -1 : 1;
                phi[char('a' + g)] = Word::gen(perm[size_t(g)], s);
                phi_inv[perm[size_t(g)]] = Word::gen(char('a' + g), s);
                label.push_back(s > 0 ? perm[size_t(g)] : char(std::toupper(perm[size_t(g)])));
            }
            bool ok = true;
            for (auto& v : K.vertices) {
                char X = perm[size_t(v.x - 'a')], Y = perm[size_t(v.y - 'a')];
                int vi = -1;
                for (int i = 0; i < 3; ++i) {
                    char u = P.vertex_generators[i][0].letters()[0].sym, w = P.vertex_generators[i][1].letters()[0].sym;
                    if ((u == X && w == Y) || (u == Y && w == X)) vi = i;
                }
                const auto& entry = vertex_group(P.triple[size_t(vi)]);
                auto [A, B] = unipotent_pair(v.r, p);
                size_t uorder = 1; // |U_r(p)| = p^r
                for (int q = 0; q < v.r; ++q) uorder *= size_t(p);
                if (entry.group_order != uorder) {
                    ok = false;
                    break;
                }
                Assignment cat = P.vertex_model(vi);
                for (auto& r : unipotent_relators(v.r, v.x, v.y, p, true))
                    if (!evaluate_word(r.substitute(phi), cat).is_identity()) ok = false;
                Assignment uni{{v.x, A}, {v.y, B}};
                for (auto& r : P.vertex_relators[size_t(vi)])
                    if (!evaluate_word(r.substitute(phi_inv), uni).is_identity()) ok = false;
                if (!ok) break;
            }
            if (ok) {
                res.map = label;
                res.found = true;
                return res;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

/// The identifications of KMS groups over F_3 with trivalent triangle groups.
struct KnownIdentification {
    std::string tag;
    Triple triple;
    int ell;
};

inline const std::vector<KnownIdentification>& kms_identifications_p3() {
    static const std::vector<KnownIdentification> v = {
        {"B2t", {6, 54, 54}, 2},     {"C2t", {6, 54, 54}, 8},       {"BC2t", {6, 54, 54}, 0},
        {"A2t", {18, 18, 18}, 0},    {"HC2_1", {18, 18, 54}, 0},    {"HB2_2", {18, 54, 54}, 2},
        {"HC2_2", {18, 54, 54}, 8},  {"HBC2_2", {18, 54, 54}, 0},   {"HB2_3", {54, 54, 54}, 2},
        {"HBC2_3", {54, 54, 54}, 0},
    };
    return v;
}

} // namespace kz
