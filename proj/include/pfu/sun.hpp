#pragma once

#include <utility>
#include <vector>

#include "pfu/graph.hpp"

namespace pfu {

enum class SunKind { K1, K2, BigSun, NotSun };

const char* to_string(SunKind kind);

/// A sun is K1, K2, or a factor-critical core H with one pendant vertex
/// attached to every core vertex. Big suns have at least six vertices.
struct SunVerdict {
    SunKind kind = SunKind::NotSun;
    /// The factor-critical core; empty unless kind == BigSun.
    VertexSet core;
    /// (core vertex, pendant vertex) pairs; empty unless kind == BigSun.
    std::vector<std::pair<int, int>> pendants;

    bool is_sun() const { return kind != SunKind::NotSun; }
};

/// Classifies the connected graph g. Throws GraphError when g is disconnected.
SunVerdict is_sun(const Graph& g);

/// Classifies g[component]; the caller guarantees the set is connected.
SunVerdict classify_component(const Graph& g, VertexSet component);
/// Cheaper variant of classify_component that skips the witness.
bool component_is_sun(const Graph& g, VertexSet component);

struct SunCount {
    int count = 0;
    std::vector<VertexSet> suns;
};

/// Number of components of g[alive] that are suns.
int sun_count(const Graph& g, VertexSet alive);
SunCount sun_components(const Graph& g, VertexSet alive);
SunCount sun_components(const Graph& g);

/// 2 if x spans an edge; else 1 if x is nonempty and g - x has a non-sun
/// component; else 0.
int epsilon(const Graph& g, VertexSet x);

}  // namespace pfu
