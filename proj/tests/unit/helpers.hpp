#pragma once

#include "kazhdan/catalog.hpp"
#include "kazhdan/coset_graph.hpp"

namespace kzt {

struct Triple3 {
    kz::FiniteGroup X, A, B;
};

inline Triple3 groups_of(const kz::GroupElement& a, const kz::GroupElement& b) {
    return {kz::closure({a, b}), kz::cyclic_subgroup(a), kz::cyclic_subgroup(b)};
}

inline kz::CosetGraph catalog_graph(int id) {
    const auto& e = kz::vertex_group(id);
    auto g = groups_of(e.a, e.b);
    return kz::build_coset_graph(g.X, g.A, g.B);
}

} // namespace kzt
