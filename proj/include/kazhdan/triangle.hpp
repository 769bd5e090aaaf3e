#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "certifier.hpp"
#include "error.hpp"
#include "word.hpp"

namespace kz {

using Gluing = std::array<int, 6>; // v in F2^6
using Triple = std::array<int, 3>; // vertex group ids

inline int ell_of(const Gluing& v) {
    return 32 * (1 - v[0]) + 16 * v[1] + 8 * (1 - v[2]) + 4 * v[3] + 2 * (1 - v[4]) + v[5];
}

inline Gluing gluing_of(int ell) {
    if (ell < 0 || ell > 63) throw Error(Errc::OutOfRange, "index must lie in 0..63");
    return {1 - ((ell >> 5) & 1), (ell >> 4) & 1, 1 - ((ell >> 3) & 1), (ell >> 2) & 1, 1 - ((ell >> 1) & 1), ell & 1};
}

namespace detail {

struct Signed {
    int edge; // 0,1,2 for the edge generators a,b,c
    int sign; // +1 or -1
};

/// The generators (a_i, b_i) of vertex i as signed edge generators.
using Frame = std::array<std::array<Signed, 2>, 3>;

/// Vertex i carries edges i and i+1. With s = (-1)^v(2i+1), x = g_i^s and
/// y = g_(i+1); (a_i, b_i) = (x, y) if v(2i) = 0, else (y, x).
inline Frame frame_of(const Gluing& v) {
    Frame f;
    for (int i = 0; i < 3; ++i) {
        Signed x{i, v[2 * i + 1] ? -1 : 1}, y{(i + 1) % 3, 1};
        f[i] = v[2 * i] == 0 ? std::array<Signed, 2>{x, y} : std::array<Signed, 2>{y, x};
    }
    return f;
}

inline int sign_at(const Frame& f, int vertex, int edge) {
    for (auto& s : f[vertex])
        if (s.edge == edge) return s.sign;
    throw Error(Errc::BadParameters, "edge not incident to vertex");
}

/// Normal form: only the relative sign of each edge generator between its two
/// vertices matters, and the edge generator order at each vertex.
inline Gluing gluing_of_frame(const Frame& f) {
    Gluing v{};
    for (int i = 0; i < 3; ++i) {
        v[2 * i] = f[i][0].edge == i ? 0 : 1;
        v[2 * i + 1] = sign_at(f, i, i) * sign_at(f, (i + 2) % 3, i) < 0 ? 1 : 0;
    }
    return v;
}

inline Frame apply_aut(Frame f, int i, const AutMap& m) {
    auto img = [&](char c) {
        switch (c) {
        case 'a': return f[i][0];
        case 'b': return f[i][1];
        case 'A': return Signed{f[i][0].edge, -f[i][0].sign};
        case 'B': return Signed{f[i][1].edge, -f[i][1].sign};
        }
        throw Error(Errc::BadParameters, "bad automorphism image");
    };
    f[i] = {img(m.a_img), img(m.b_img)};
    return f;
}

/// Relabel vertices by sigma; edge g_j (shared by vertices j-1 and j) goes to
/// the edge shared by sigma(j-1) and sigma(j).
inline Frame apply_symmetry(const Frame& f, const std::array<int, 3>& sigma) {
    auto edge_between = [](int u, int w) {
        for (int j = 0; j < 3; ++j)
            if ((((j + 2) % 3 == u) && j == w) || (((j + 2) % 3 == w) && j == u)) return j;
        throw Error(Errc::BadParameters, "vertices are not distinct");
    };
    std::array<int, 3> tau{};
    for (int j = 0; j < 3; ++j) tau[j] = edge_between(sigma[(j + 2) % 3], sigma[j]);
    Frame out;
    for (int i = 0; i < 3; ++i)
        out[sigma[i]] = {Signed{tau[f[i][0].edge], f[i][0].sign}, Signed{tau[f[i][1].edge], f[i][1].sign}};
    return out;
}

} // namespace detail

/// The equivalence moves on F2^6 for a triple: vertex automorphisms and the
/// symmetries of the triangle that preserve the vertex groups.
inline std::vector<Gluing> gluing_neighbours(const Triple& t, const Gluing& v) {
    std::vector<Gluing> out;
    detail::Frame f = detail::frame_of(v);
    for (int i = 0; i < 3; ++i)
        for (auto& m : vertex_group(t[i]).aut) out.push_back(detail::gluing_of_frame(detail::apply_aut(f, i, m)));
    std::array<int, 3> sigma{0, 1, 2};
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        bool ok = true;
        for (int i = 0; i < 3; ++i) ok = ok && t[sigma[i]] == t[i];
        if (ok) out.push_back(detail::gluing_of_frame(detail::apply_symmetry(f, sigma)));
    }
    return out;
}

struct GluingOrbit {
    int ell = 0; // least index in the orbit
    std::vector<int> members;
};

inline std::vector<GluingOrbit> gluing_orbits(const Triple& t) {
    for (int id : t) (void)vertex_group(id);
    std::vector<int> orbit_of(64, -1);
    std::vector<GluingOrbit> out;
    for (int start = 0; start < 64; ++start) {
        int s = start;
        if (orbit_of[s] >= 0) continue;
        GluingOrbit o;
        std::vector<int> stack{s};
        orbit_of[s] = int(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            o.members.push_back(u);
            for (auto& w : gluing_neighbours(t, gluing_of(u))) {
                int e = ell_of(w);
                if (orbit_of[e] < 0) {
                    orbit_of[e] = int(out.size());
                    stack.push_back(e);
                }
            }
        }
        std::sort(o.members.begin(), o.members.end());
        o.ell = o.members.front();
        out.push_back(o);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.ell < y.ell; });
    return out;
}

struct TrianglePresentation {
    Triple triple{};
    Gluing v{};
    int ell = 0;
    std::array<std::array<Word, 2>, 3> vertex_generators; // (a_i, b_i) as words in a,b,c
    std::array<std::vector<Word>, 3> vertex_relators;
    std::vector<Word> relators; // distinct canonical relators, sorted
    std::array<int, 3> half_girths{};

    std::string name() const {
        return "G^{" + std::to_string(triple[0]) + "," + std::to_string(triple[1]) + "," + std::to_string(triple[2]) +
               "}_" + std::to_string(ell);
    }
    std::string text() const { return presentation_text("abc", relators); }
    /// Assignment of the two edge generators of vertex i to the catalog model.
    Assignment vertex_model(int i) const {
        const auto& e = vertex_group(triple[i]);
        Assignment as;
        for (int j = 0; j < 2; ++j) {
            const Letter& l = vertex_generators[i][j].letters().front();
            const GroupElement& g = j == 0 ? e.a : e.b;
            as[l.sym] = l.exp > 0 ? g : g.inverse();
        }
        return as;
    }
};

inline TrianglePresentation assemble_presentation(const Triple& t, const Gluing& v) {
    TrianglePresentation P;
    P.triple = t;
    P.v = v;
    P.ell = ell_of(v);
    const char G[3] = {'a', 'b', 'c'};
    detail::Frame f = detail::frame_of(v);
    std::set<Word> all;
    for (int i = 0; i < 3; ++i) {
        const auto& e = vertex_group(t[i]);
        P.half_girths[i] = e.half_girth();
        std::map<char, Word> sub;
        for (int j = 0; j < 2; ++j) {
            Word w = Word::gen(G[f[i][j].edge], f[i][j].sign);
            P.vertex_generators[i][j] = w;
            sub[j == 0 ? 'a' : 'b'] = w;
        }
        for (auto& r : e.relator_words()) {
            Word w = r.substitute(sub).canonical_relator();
            P.vertex_relators[i].push_back(w);
            all.insert(w);
        }
    }
    P.relators.assign(all.begin(), all.end());
    return P;
}

inline TrianglePresentation assemble_presentation(const Triple& t, int ell) {
    return assemble_presentation(t, gluing_of(ell));
}

/// Total relator length.
inline size_t presentation_length(const std::vector<Word>& relators) {
    size_t n = 0;
    for (auto& r : relators) n += r.length();
    return n;
}

inline size_t presentation_length(const TrianglePresentation& P) { return presentation_length(P.relators); }

/// Orbit representatives (least index per orbit) with presentations.
inline std::vector<TrianglePresentation> enumerate_trivalent(const Triple& t) {
    std::vector<TrianglePresentation> out;
    for (auto& o : gluing_orbits(t)) out.push_back(assemble_presentation(t, o.ell));
    return out;
}

/// All unordered triples (ids non-decreasing) of catalog vertex groups.
inline std::vector<Triple> all_triples(bool npc_only) {
    std::vector<int> ids;
    for (auto& e : vertex_group_catalog()) ids.push_back(e.id);
    std::vector<Triple> out;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i; j < ids.size(); ++j)
            for (size_t k = j; k < ids.size(); ++k) {
                Triple t{ids[i], ids[j], ids[k]};
                if (npc_only) {
                    auto c = npc_gate(vertex_group(t[0]).half_girth(), vertex_group(t[1]).half_girth(),
                                      vertex_group(t[2]).half_girth());
                    if (c.cls == Curvature::ViolatesNPC) continue;
                }
                out.push_back(t);
            }
    return out;
}

/// Representatives over every triple satisfying the curvature condition.
inline std::vector<TrianglePresentation> enumerate_all() {
    std::vector<TrianglePresentation> out;
    for (auto& t : all_triples(true))
        for (auto& P : enumerate_trivalent(t)) out.push_back(P);
    return out;
}

/// <t,a,b | R, t^3, t a t^-1 b^-1> for R the {a,b}-relators of G_0^{k,k,k}.
inline std::vector<Word> tilde_triangle_relators(int k) {
    static const std::set<int> allowed{14, 16, 18, 24, 26, 40, 48, 54};
    if (!allowed.count(k)) throw Error(Errc::BadTag, "no cyclic extension for X" + std::to_string(k));
    auto P = assemble_presentation(Triple{k, k, k}, 0);
    std::vector<Word> out;
    for (auto& r : P.relators) {
        bool ab = true;
        for (auto& l : r.letters()) ab = ab && (l.sym == 'a' || l.sym == 'b');
        if (ab) out.push_back(r);
    }
    out.push_back(parse_word("t^3"));
    out.push_back(parse_word("tat^-1b^-1"));
    return out;
}

} // namespace kz
