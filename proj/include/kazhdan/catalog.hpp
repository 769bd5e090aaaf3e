#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "field.hpp"
#include "word.hpp"

namespace kz {

/// Automorphism of a vertex group given by the images of a and b among
/// {a, A, b, B} (capitals are inverses).
struct AutMap {
    char a_img;
    char b_img;
    std::string cycles; // display form, e.g. "(a b)(A B)"
};

inline Word aut_image(char letter, const AutMap& m) {
    char img = letter == 'a' ? m.a_img : m.b_img;
    return parse_word(std::string(1, img));
}

struct VertexGroupEntry {
    int id = 0;
    std::string name;                // "X14"
    std::vector<std::string> relators; // compact form on {a,b}
    GroupElement a, b;               // permutation model
    size_t group_order = 0;
    size_t graph_order = 0;
    int girth = 0;
    double epsilon = 0;
    std::string epsilon_text;
    std::vector<AutMap> aut;
    std::string description;

    int half_girth() const { return girth / 2; }
    std::vector<Word> relator_words() const {
        std::vector<Word> out;
        for (auto& r : relators) out.push_back(parse_word(r));
        return out;
    }
    Assignment model() const { return {{'a', a}, {'b', b}}; }
};

inline double frobenius39_epsilon() {
    const double t = 2 * M_PI / 13;
    std::complex<double> s = std::polar(1.0, 2 * t) + std::polar(1.0, 5 * t) + std::polar(1.0, 6 * t);
    return std::abs(s) / 3;
}

inline const std::vector<VertexGroupEntry>& vertex_group_catalog() {
    static const std::vector<VertexGroupEntry> cat = [] {
        const AutMap swap{'b', 'a', "(a b)(A B)"};
        const AutMap inv_a{'A', 'b', "(a A)"};
        const AutMap inv_b{'a', 'B', "(b B)"};
        const AutMap inv_ab{'A', 'B', "(a A)(b B)"};
        const AutMap cross{'B', 'A', "(a B)(A b)"};
        auto P = [](std::vector<int> v) { return GroupElement::permutation(v); };
        std::vector<VertexGroupEntry> c;
        auto add = [&](int id, std::vector<std::string> rel, std::vector<int> a, std::vector<int> b, size_t order,
                       int girth, double eps, std::string eps_text, std::vector<AutMap> aut, std::string desc) {
            VertexGroupEntry e;
            e.id = id;
            e.name = "X" + std::to_string(id);
            e.relators = {"aaa", "bbb"};
            e.relators.insert(e.relators.end(), rel.begin(), rel.end());
            e.a = P(a);
            e.b = P(b);
            e.group_order = order;
            e.graph_order = size_t(id);
            e.girth = girth;
            e.epsilon = eps;
            e.epsilon_text = eps_text;
            e.aut = aut;
            e.description = desc;
            c.push_back(e);
        };
        add(6, {"abAB"}, {0, 1, 2, 4, 5, 3}, {1, 2, 0, 3, 4, 5}, 9, 4, 0.0, "0", {swap, inv_a}, "C3 x C3, graph K3,3");
        add(8, {"abab"}, {0, 2, 3, 1}, {1, 2, 0, 3}, 12, 4, 1.0 / 3, "1/3", {swap, inv_ab}, "Alt(4), graph of the cube");
        add(14, {"abABab"}, {0, 2, 4, 6, 1, 3, 5}, {1, 5, 2, 6, 3, 0, 4}, 21, 6, std::sqrt(2.0) / 3, "sqrt(2)/3",
            {cross}, "Frobenius group of order 21, Heawood graph");
        add(16, {"abaBAB"}, {0, 1, 3, 4, 2, 7, 5, 6}, {5, 2, 6, 3, 0, 4, 1, 7}, 24, 6, std::sqrt(3.0) / 3,
            "sqrt(3)/3", {swap, inv_ab}, "SL2(3), Moebius-Kantor graph");
        add(18, {"ababab", "aBaBaB"},
            {0, 1, 2, 12, 13, 14, 24, 25, 26, 9, 10, 11, 21, 22, 23, 6, 7, 8, 18, 19, 20, 3, 4, 5, 15, 16, 17},
            {0, 4, 8, 3, 7, 2, 6, 1, 5, 9, 13, 17, 12, 16, 11, 15, 10, 14, 18, 22, 26, 21, 25, 20, 24, 19, 23}, 27, 6,
            std::sqrt(3.0) / 3, "sqrt(3)/3", {swap, inv_a}, "Heisenberg group of order 27, Pappus graph");
        add(24, {"ababab", "abAbABaB"}, {0, 2, 3, 1, 4, 5, 6}, {1, 3, 2, 0, 5, 6, 4}, 36, 6, 2.0 / 3, "2/3",
            {swap, inv_ab}, "Alt(4) x C3, Nauru graph");
        add(26, {"ababab", "abAbAbAB"}, {0, 3, 6, 9, 12, 2, 5, 8, 11, 1, 4, 7, 10},
            {1, 4, 7, 10, 0, 3, 6, 9, 12, 2, 5, 8, 11}, 39, 6, frobenius39_epsilon(), "|z^2+z^5+z^6|/3, z=exp(2 pi i/13)",
            {swap}, "Frobenius group of order 39");
        add(40, {"aBabaBab", "ABaBABaB"}, {0, 1, 3, 4, 2}, {1, 2, 0, 3, 4}, 60, 8, std::sqrt(5.0) / 3, "sqrt(5)/3",
            {swap, inv_a}, "Alt(5)");
        add(48, {"ababABAB"}, {0, 1, 3, 4, 2, 7, 5, 6, 8, 9, 10}, {2, 5, 7, 1, 4, 3, 6, 0, 9, 10, 8}, 72, 8,
            std::sqrt(2.0 / 3), "sqrt(2/3)", {swap, inv_ab}, "SL2(3) x C3");
        add(54, {"abABAbaB", "abAbabAbabAb"}, {0, 1, 2, 3, 4, 5, 7, 8, 6}, {3, 4, 5, 6, 7, 8, 0, 1, 2}, 81, 8,
            std::sqrt(2.0 / 3), "sqrt(2/3)", {inv_a, inv_b}, "C3 wr C3, Gray graph");
        return c;
    }();
    return cat;
}

inline const VertexGroupEntry& vertex_group(int id) {
    for (auto& e : vertex_group_catalog())
        if (e.id == id) return e;
    throw Error(Errc::UnknownVertexGroup, "no vertex group X" + std::to_string(id));
}

/// A generating pair of matrices with the data attached to it.
struct MatrixEntry {
    std::string name;
    int p = 0;
    const Field* field = nullptr;
    bool projective = false;
    GroupElement a, b;
    size_t group_order = 0;
    int girth = 0;
    double phi = 0; // expected 5 * epsilon
    bool ramanujan = true;
};

/// Vertex models of a 5-fold triangle group on a, b, c.
struct HGroupData {
    std::string name;
    std::vector<std::string> relators;
    MatrixEntry ab;     // <a,b>
    Assignment bc;      // model of <b,c>
    Assignment ac;      // model of <a,c>
    std::string bc_name;
    std::vector<int> girths; // links of <a,b>, <b,c>, <a,c>
};

/// Unitriangular generators of the root-group models over F_p.
/// U2: commuting I+E13, I+E23; U3: I+E12, I+E23; U4: x1(1), x4(-1) on the affine 4x4 model.
inline GroupElement root_x(int i, long t, long p) {
    const Field* F = Field::prime(int(p));
    std::vector<std::vector<long>> m(4, std::vector<long>(4, 0));
    for (int d = 0; d < 4; ++d) m[d][d] = 1;
    if (i >= 1 && i <= 3) {
        m[i - 1][3] = t;
    } else if (i == 4) {
        m[1][0] = t;
        m[2][0] = t * t;
        m[2][1] = 2 * t;
    } else {
        throw Error(Errc::BadParameters, "root index must be 1..4");
    }
    return GroupElement::matrix(F, m);
}

inline std::pair<GroupElement, GroupElement> unipotent_pair(int r, long p) {
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadPrime, "p must be an odd prime");
    const Field* F = Field::prime(int(p));
    if (r == 2) return {GroupElement::matrix(F, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                        GroupElement::matrix(F, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})};
    if (r == 3) return {GroupElement::matrix(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                        GroupElement::matrix(F, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})};
    if (r == 4) return {root_x(1, 1, p), root_x(4, -1, p)};
    throw Error(Errc::BadType, "vertex half-girth must be 2, 3 or 4");
}

/// Relators of the root-group vertex of half-girth r on the ordered pair (x, y).
inline std::vector<Word> unipotent_relators(int r, char x, char y, long p, bool with_powers = true) {
    Word X = Word::gen(x), Y = Word::gen(y);
    std::vector<Word> out;
    if (with_powers) {
        out.push_back(X.pow(int(p)));
        out.push_back(Y.pow(int(p)));
    }
    if (r == 2) out.push_back(commutator(X, Y));
    else if (r == 3) {
        out.push_back(commutator({X, Y, X}));
        out.push_back(commutator({X, Y, Y}));
    } else if (r == 4) {
        out.push_back(commutator({X, Y, X}));
        out.push_back(commutator({X, Y, Y, X}));
        out.push_back(commutator({X, Y, Y, Y}));
    } else {
        throw Error(Errc::BadType, "vertex half-girth must be 2, 3 or 4");
    }
    return out;
}

inline const std::vector<MatrixEntry>& matrix_generator_catalog() {
    static const std::vector<MatrixEntry> cat = [] {
        std::vector<MatrixEntry> c;
        auto prime_entry = [&](std::string name, int p, bool proj, std::vector<std::vector<long>> a,
                               std::vector<std::vector<long>> b, size_t order, int g, double phi, bool ram) {
            MatrixEntry e;
            e.name = name;
            e.p = p;
            e.field = Field::prime(p);
            e.projective = proj;
            e.a = GroupElement::matrix(e.field, a, proj);
            e.b = GroupElement::matrix(e.field, b, proj);
            e.group_order = order;
            e.girth = g;
            e.phi = phi;
            e.ramanujan = ram;
            c.push_back(e);
        };
        prime_entry("SL2_5", 5, false, {{4, 2}, {3, 3}}, {{1, 2}, {0, 1}}, 120, 6, 2.2360679775, true);
        {
            MatrixEntry e;
            e.name = "SL2_9";
            e.p = 9;
            e.field = Field::f9();
            const Field* F = e.field;
            auto z = [&](int n) { return long(F->pow(F->generator(), n)); };
            e.a = GroupElement::matrix(F, {{z(5), z(1)}, {2, z(6)}});
            e.b = GroupElement::matrix(F, {{z(3), z(6)}, {z(5), z(3)}});
            e.group_order = 720;
            e.girth = 8;
            e.phi = 3.16227766017;
            c.push_back(e);
        }
        prime_entry("PSL2_31", 31, true, {{8, 14}, {4, 11}}, {{23, 0}, {14, 27}}, 14880, 10, 3.85410196624, true);
        prime_entry("PSL2_41", 41, true, {{0, 28}, {19, 35}}, {{38, 27}, {2, 9}}, 34440, 10, 3.82842712474, true);
        prime_entry("PSL2_109", 109, true, {{0, 1}, {-1, 11}}, {{57, 2}, {52, 42}}, 647460, 14, 4.02260136849, false);
        prime_entry("PSL2_131", 131, true, {{-58, -24}, {-58, 46}}, {{0, -3}, {44, -12}}, 1123980, 14, 3.98383854575,
                    true);
        return c;
    }();
    return cat;
}

inline const MatrixEntry& matrix_entry(const std::string& name) {
    for (auto& e : matrix_generator_catalog())
        if (e.name == name) return e;
    throw Error(Errc::UnknownVertexGroup, "no matrix entry " + name);
}

inline const std::vector<HGroupData>& h_groups() {
    static const std::vector<HGroupData> hs = [] {
        std::vector<HGroupData> out;
        {
            HGroupData h;
            h.name = "H31";
            h.relators = {"a^5", "b^5", "c^5", "[a,c]", "[b,c,b]", "[b,c,c,b]", "[b,c,c,c]",
                          "aba^2ba^2bab^-1ab^-1", "b^2aba^-1ba^-1bab^2a", "(bab^-1aba^-1)^2"};
            h.ab = matrix_entry("PSL2_31");
            auto [x1, x4] = unipotent_pair(4, 5);
            h.bc = {{'b', x1}, {'c', x4}};
            auto [u, v] = unipotent_pair(2, 5);
            h.ac = {{'a', u}, {'c', v}};
            h.bc_name = "U4(5)";
            h.girths = {10, 8, 4};
            out.push_back(h);
        }
        {
            HGroupData h;
            h.name = "H109";
            h.relators = {"a^5", "b^5", "c^5", "[a,c]", "[b,c,b]", "[b,c,c]",
                          "abab^-1a^-1baba^-1b^-1a^-1bab^-1a^-1b^-1",
                          "babab^2a^-1ba^2b^-2a^-1ba^-1b^-1a^2",
                          "ba^-1bab^-1ab^2a^-1bab^-1aba^-1b^-1a^2",
                          "bab^-1aba^-1ba^-2b^-1a^-1ba^-1b^-1ab^-1a^2",
                          "ba^-1ba^-1b^-2ab^-1a^-1b^-1a^-1ba^-2b^-2a^2",
                          "aba^-2b^-1a^-1b^-1a^-1b^-2ab^-1a^-2b^2ab^-1",
                          "a^-2b^-1a^-2bab^-1ab^-1a^2b^-1aba^-2b^2"};
            h.ab = matrix_entry("PSL2_109");
            auto [x, y] = unipotent_pair(3, 5);
            h.bc = {{'b', x}, {'c', y}};
            auto [u, v] = unipotent_pair(2, 5);
            h.ac = {{'a', u}, {'c', v}};
            h.bc_name = "U3(5)";
            h.girths = {14, 6, 4};
            out.push_back(h);
        }
        return out;
    }();
    return hs;
}

inline const HGroupData& h_group(const std::string& name) {
    for (auto& h : h_groups())
        if (h.name == name) return h;
    throw Error(Errc::UnknownVertexGroup, "no group " + name);
}

/// Relators of an H-group restricted to the symbols in `syms`.
inline std::vector<Word> relators_on(const std::vector<std::string>& rels, const std::string& syms) {
    std::vector<Word> out;
    for (auto& r : rels) {
        Word w = parse_word(r);
        bool inside = true;
        for (auto& l : w.letters()) inside = inside && syms.find(l.sym) != std::string::npos;
        if (inside) out.push_back(w);
    }
    return out;
}

} // namespace kz
