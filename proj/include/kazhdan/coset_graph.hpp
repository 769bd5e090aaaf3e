#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace kz {

inline unsigned default_threads() {
    unsigned t = std::thread::hardware_concurrency();
    return t ? t : 1;
}

/// Run f(i) for i in [0,n) over up to `threads` workers.
template <class F>
void parallel_for(size_t n, unsigned threads, F&& f) {
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<size_t>(n, 1))));
    if (threads == 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

/// Simple undirected graph in compressed sparse row form.
struct Graph {
    size_t n = 0;
    std::vector<size_t> offset{0};
    std::vector<uint32_t> adj;

    static Graph from_edges(size_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) {
        for (auto& e : edges) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first >= n || e.second >= n) throw Error(Errc::OutOfRange, "edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges.erase(std::remove_if(edges.begin(), edges.end(), [](auto& e) { return e.first == e.second; }),
                    edges.end());
        Graph g;
        g.n = n;
        std::vector<size_t> deg(n, 0);
        for (auto& e : edges) {
            ++deg[e.first];
            ++deg[e.second];
        }
        g.offset.assign(n + 1, 0);
        for (size_t i = 0; i < n; ++i) g.offset[i + 1] = g.offset[i] + deg[i];
        g.adj.resize(g.offset[n]);
        std::vector<size_t> pos(g.offset.begin(), g.offset.end() - 1);
        for (auto& e : edges) {
            g.adj[pos[e.first]++] = e.second;
            g.adj[pos[e.second]++] = e.first;
        }
        for (size_t i = 0; i < n; ++i) std::sort(g.adj.begin() + long(g.offset[i]), g.adj.begin() + long(g.offset[i + 1]));
        return g;
    }

    size_t degree(size_t v) const { return offset[v + 1] - offset[v]; }
    size_t edge_count() const { return adj.size() / 2; }
    const uint32_t* begin(size_t v) const { return adj.data() + offset[v]; }
    const uint32_t* end(size_t v) const { return adj.data() + offset[v + 1]; }

    std::vector<std::pair<uint32_t, uint32_t>> edges() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (size_t u = 0; u < n; ++u)
            for (auto* w = begin(u); w != end(u); ++w)
                if (u < *w) out.push_back({uint32_t(u), *w});
        return out;
    }

    std::vector<size_t> degree_sequence() const {
        std::vector<size_t> d(n);
        for (size_t i = 0; i < n; ++i) d[i] = degree(i);
        std::sort(d.begin(), d.end());
        return d;
    }
};

inline constexpr long kInfiniteGirth = -1;

inline std::vector<long> bfs_distances(const Graph& g, size_t src) {
    std::vector<long> d(g.n, -1);
    std::vector<uint32_t> q{uint32_t(src)};
    d[src] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
        uint32_t u = q[h];
        for (auto* w = g.begin(u); w != g.end(u); ++w)
            if (d[*w] < 0) {
                d[*w] = d[u] + 1;
                q.push_back(*w);
            }
    }
    return d;
}

inline size_t component_count(const Graph& g) {
    std::vector<long> seen(g.n, 0);
    size_t c = 0;
    for (size_t s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        ++c;
        auto d = bfs_distances(g, s);
        for (size_t v = 0; v < g.n; ++v)
            if (d[v] >= 0) seen[v] = 1;
    }
    return c;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](long x) { return x >= 0; });
}

/// Length of the shortest cycle found by BFS from src; every cycle through src
/// is detected, so the minimum over all sources is the girth.
inline long shortest_cycle_from(const Graph& g, size_t src, long stop_at = std::numeric_limits<long>::max()) {
    std::vector<int32_t> d(g.n, -1);
    std::vector<uint32_t> parent(g.n, 0), q{uint32_t(src)};
    d[src] = 0;
    long best = stop_at;
    for (size_t h = 0; h < q.size(); ++h) {
        uint32_t u = q[h];
        if (2 * long(d[u]) + 1 >= best) break;
        for (auto* w = g.begin(u); w != g.end(u); ++w) {
            if (d[*w] < 0) {
                d[*w] = d[u] + 1;
                parent[*w] = u;
                q.push_back(*w);
            } else if (u != src && parent[u] != *w) {
                best = std::min(best, long(d[u]) + d[*w] + 1);
            }
        }
    }
    return best;
}

struct GirthResult {
    long girth = kInfiniteGirth; // kInfiniteGirth for forests
    bool connected = true;
};

/// Girth by BFS from every vertex, in parallel.
inline GirthResult girth_all_sources(const Graph& g, unsigned threads = default_threads()) {
    GirthResult r;
    r.connected = is_connected(g);
    std::atomic<long> best{std::numeric_limits<long>::max()};
    parallel_for(g.n, threads, [&](size_t v) {
        long c = shortest_cycle_from(g, v, best.load());
        long cur = best.load();
        while (c < cur && !best.compare_exchange_weak(cur, c)) {
        }
    });
    long b = best.load();
    r.girth = b == std::numeric_limits<long>::max() ? kInfiniteGirth : b;
    return r;
}

/// Girth as the least m with tr(B^m) > 0, B the non-backtracking operator on
/// directed edges (the directed line graph). Independent of the BFS route.
inline long girth_nonbacktracking(const Graph& g, long max_len = 0) {
    size_t m = g.adj.size();
    if (max_len <= 0) max_len = long(g.n) + 1;
    std::vector<uint32_t> head(m);
    std::vector<size_t> back(m);
    for (size_t u = 0; u < g.n; ++u)
        for (size_t k = g.offset[u]; k < g.offset[u + 1]; ++k) {
            uint32_t w = g.adj[k];
            head[k] = w;
            back[k] = size_t(std::lower_bound(g.begin(w), g.end(w), uint32_t(u)) - g.adj.data());
        }
    // reach[s*m+e]: some non-backtracking walk of the current length goes from edge s to edge e
    std::vector<char> reach(m * m, 0), next(m * m, 0);
    for (size_t s = 0; s < m; ++s) reach[s * m + s] = 1;
    for (long len = 1; len <= max_len; ++len) {
        std::fill(next.begin(), next.end(), 0);
        bool closed = false;
        for (size_t s = 0; s < m; ++s) {
            for (size_t e = 0; e < m; ++e) {
                if (!reach[s * m + e]) continue;
                uint32_t v = head[e];
                for (size_t f = g.offset[v]; f < g.offset[v + 1]; ++f)
                    if (f != back[e]) next[s * m + f] = 1;
            }
            closed = closed || next[s * m + s];
        }
        if (closed) return len;
        reach.swap(next);
    }
    return kInfiniteGirth;
}

inline long eccentricity(const Graph& g, size_t v) {
    auto d = bfs_distances(g, v);
    long e = 0;
    for (long x : d) {
        if (x < 0) throw Error(Errc::Disconnected, "graph is disconnected");
        e = std::max(e, x);
    }
    return e;
}

inline long diameter(const Graph& g) {
    long best = 0;
    for (size_t v = 0; v < g.n; ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

/// Bipartite coset graph: left vertices X/A, right vertices X/B, edges X/(A∩B).
struct CosetGraph {
    Graph graph;
    size_t left = 0;
    size_t right = 0;
    size_t edges = 0;
    size_t k_left = 0;  // [A : A∩B], degree of left vertices
    size_t k_right = 0; // [B : A∩B], degree of right vertices
    size_t group_order = 0;

    size_t vertices() const { return left + right; }
    bool regular() const { return k_left == k_right; }
    size_t k() const {
        if (!regular()) throw Error(Errc::UnequalIndices, "coset graph is not regular");
        return k_left;
    }
};

namespace detail {

/// coset[x] = id of the coset x*H for every element index x; ids follow the
/// order of the minimal member under the byte encoding.
inline std::vector<uint32_t> left_cosets(const FiniteGroup& X, const std::vector<long>& H, size_t& count) {
    const size_t N = X.order();
    constexpr uint32_t none = 0xffffffffu;
    std::vector<uint32_t> id(N, none);
    std::vector<uint32_t> rep;
    const int w = X.space().width();
    std::vector<uint16_t> tmp(w);
    uint32_t next = 0;
    for (size_t x = 0; x < N; ++x) {
        if (id[x] != none) continue;
        uint32_t best = uint32_t(x);
        for (long h : H) {
            X.space().mul(X.raw(x), X.raw(size_t(h)), tmp.data());
            long y = X.find(tmp.data());
            if (y < 0) throw Error(Errc::NotSubgroup, "coset product left the group");
            id[size_t(y)] = next;
            if (std::lexicographical_compare(X.raw(size_t(y)), X.raw(size_t(y)) + w, X.raw(best), X.raw(best) + w))
                best = uint32_t(y);
        }
        rep.push_back(best);
        ++next;
    }
    count = next;
    std::vector<uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return std::lexicographical_compare(X.raw(rep[a]), X.raw(rep[a]) + w, X.raw(rep[b]), X.raw(rep[b]) + w);
    });
    std::vector<uint32_t> remap(count);
    for (uint32_t i = 0; i < count; ++i) remap[order[i]] = i;
    for (auto& v : id) v = remap[v];
    return id;
}

inline std::vector<long> subgroup_indices(const FiniteGroup& X, const FiniteGroup& H) {
    std::vector<long> idx(H.order());
    for (size_t i = 0; i < H.order(); ++i) {
        long j = X.find(H.raw(i));
        if (!(H.space() == X.space()) || j < 0) throw Error(Errc::NotSubgroup, "subgroup element not in X");
        idx[i] = j;
    }
    return idx;
}

} // namespace detail

inline CosetGraph build_coset_graph(const FiniteGroup& X, const FiniteGroup& A, const FiniteGroup& B) {
    if (!(A.space() == X.space()) || !(B.space() == X.space()))
        throw Error(Errc::NotSubgroup, "subgroups live in a different space");
    auto ia = detail::subgroup_indices(X, A);
    auto ib = detail::subgroup_indices(X, B);
    std::vector<long> ic;
    {
        std::vector<long> sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(ic));
    }
    CosetGraph cg;
    cg.group_order = X.order();
    cg.k_left = A.order() / ic.size();
    cg.k_right = B.order() / ic.size();
    size_t nl = 0, nr = 0, ne = 0;
    auto la = detail::left_cosets(X, ia, nl);
    auto rb = detail::left_cosets(X, ib, nr);
    cg.left = nl;
    cg.right = nr;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    if (ic.size() == 1) {
        ne = X.order();
        edges.reserve(ne);
        for (size_t x = 0; x < X.order(); ++x) edges.push_back({la[x], uint32_t(nl + rb[x])});
    } else {
        auto ec = detail::left_cosets(X, ic, ne);
        std::vector<char> seen(ne, 0);
        edges.reserve(ne);
        for (size_t x = 0; x < X.order(); ++x)
            if (!seen[ec[x]]) {
                seen[ec[x]] = 1;
                edges.push_back({la[x], uint32_t(nl + rb[x])});
            }
    }
    cg.edges = ne;
    cg.graph = Graph::from_edges(nl + nr, std::move(edges));
    return cg;
}

/// X acts transitively on each side, so BFS from one vertex per side suffices.
inline GirthResult girth(const CosetGraph& G) {
    GirthResult r;
    r.connected = is_connected(G.graph);
    long best = std::numeric_limits<long>::max();
    if (G.left) best = std::min(best, shortest_cycle_from(G.graph, 0, best));
    if (G.right) best = std::min(best, shortest_cycle_from(G.graph, G.left, best));
    r.girth = best == std::numeric_limits<long>::max() ? kInfiniteGirth : best;
    return r;
}

inline long diameter(const CosetGraph& G) {
    long d = 0;
    if (G.left) d = std::max(d, eccentricity(G.graph, 0));
    if (G.right) d = std::max(d, eccentricity(G.graph, G.left));
    return d;
}

/// Cayley graph on X with edges x ~ xs for s in S; S must be inverse-closed without identity.
inline Graph cayley_graph(const FiniteGroup& X, const std::vector<GroupElement>& S) {
    std::vector<long> idx;
    for (auto& s : S) {
        long i = X.index_of(s);
        if (i < 0) throw Error(Errc::NotSubgroup, "connection set element not in X");
        if (s.is_identity()) throw Error(Errc::NonSymmetricSet, "connection set contains the identity");
        bool has_inv = false;
        GroupElement si = s.inverse();
        for (auto& t : S) has_inv = has_inv || t == si;
        if (!has_inv) throw Error(Errc::NonSymmetricSet, "connection set not closed under inverses");
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t x = 0; x < X.order(); ++x)
        for (long s : idx) edges.push_back({uint32_t(x), uint32_t(X.mul_index(x, size_t(s)))});
    return Graph::from_edges(X.order(), std::move(edges));
}

/// Vertices are the edges of g (in Graph::edges order); adjacent when they share an endpoint.
inline Graph line_graph(const Graph& g) {
    auto es = g.edges();
    std::vector<std::vector<uint32_t>> inc(g.n);
    for (size_t i = 0; i < es.size(); ++i) {
        inc[es[i].first].push_back(uint32_t(i));
        inc[es[i].second].push_back(uint32_t(i));
    }
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (auto& l : inc)
        for (size_t i = 0; i < l.size(); ++i)
            for (size_t j = i + 1; j < l.size(); ++j) out.push_back({l[i], l[j]});
    return Graph::from_edges(es.size(), std::move(out));
}

inline std::string to_dot(const Graph& g, size_t left = 0) {
    std::ostringstream os;
    auto name = [&](size_t v) {
        if (left == 0) return "v" + std::to_string(v);
        return v < left ? "L" + std::to_string(v) : "R" + std::to_string(v - left);
    };
    os << "graph G {\n";
    for (size_t v = 0; v < g.n; ++v) os << "  " << name(v) << ";\n";
    for (auto& e : g.edges()) os << "  " << name(e.first) << " -- " << name(e.second) << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const CosetGraph& G) { return to_dot(G.graph, G.left); }

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (auto& e : g.edges()) os << e.first << ' ' << e.second << '\n';
    return os.str();
}

inline std::string to_graph6(const Graph& g) {
    std::string s;
    size_t n = g.n;
    if (n < 63) {
        s.push_back(char(63 + n));
    } else if (n < 258048) {
        s.push_back(char(126));
        for (int sh : {12, 6, 0}) s.push_back(char(63 + ((n >> sh) & 63)));
    } else {
        s.push_back(char(126));
        s.push_back(char(126));
        for (int sh : {30, 24, 18, 12, 6, 0}) s.push_back(char(63 + ((n >> sh) & 63)));
    }
    std::vector<char> adjset;
    int acc = 0, bits = 0;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < j; ++i) {
            bool e = std::binary_search(g.begin(j), g.end(j), uint32_t(i));
            acc = (acc << 1) | (e ? 1 : 0);
            if (++bits == 6) {
                s.push_back(char(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits) s.push_back(char(63 + (acc << (6 - bits))));
    return s;
}

inline Graph parse_graph6(const std::string& s) {
    size_t pos = 0, n = 0;
    auto at = [&](size_t i) {
        if (i >= s.size()) throw Error(Errc::ParseError, "truncated graph6");
        return size_t((unsigned char)s[i]) - 63;
    };
    if (s.empty()) throw Error(Errc::ParseError, "empty graph6");
    if (s[0] != '~') {
        n = at(0);
        pos = 1;
    } else if (s.size() > 1 && s[1] != '~') {
        n = (at(1) << 12) | (at(2) << 6) | at(3);
        pos = 4;
    } else {
        for (size_t i = 2; i < 8; ++i) n = (n << 6) | at(i);
        pos = 8;
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    size_t bit = 0;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < j; ++i, ++bit) {
            size_t byte = at(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({uint32_t(i), uint32_t(j)});
        }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace kz
