#pragma once

#include <vector>

#include "pfu/graph.hpp"

namespace pfu {

struct Matching {
    std::vector<EdgeRef> edges;

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet covered() const;
};

/// Maximum-cardinality matching of g[alive] (Edmonds' blossom method).
Matching maximum_matching(const Graph& g, VertexSet alive);
Matching maximum_matching(const Graph& g);

/// The empty vertex set counts as perfectly matched.
bool has_perfect_matching(const Graph& g, VertexSet alive);
bool has_perfect_matching(const Graph& g);

/// g[alive] - x has a perfect matching for every x in alive. K1 qualifies.
bool is_factor_critical(const Graph& g, VertexSet alive);
bool is_factor_critical(const Graph& g);

/// Edges pairwise disjoint and all present in g.
bool is_valid_matching(const Graph& g, const Matching& m);

}  // namespace pfu
