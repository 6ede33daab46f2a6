#include "pfu/sun.hpp"

#include <algorithm>

#include "pfu/matching.hpp"

namespace pfu {

const char* to_string(SunKind kind)
{
    switch (kind) {
    case SunKind::K1: return "K1";
    case SunKind::K2: return "K2";
    case SunKind::BigSun: return "BigSun";
    case SunKind::NotSun: return "NotSun";
    }
    return "?";
}

namespace {

// In a big sun the core has minimum degree >= 2 inside the sun, so the
// degree-1 vertices are exactly the pendants and must map bijectively onto
// the remaining vertices.
bool pendant_structure(const Graph& g, VertexSet comp, VertexSet& core, std::vector<std::pair<int, int>>* pairs)
{
    const int m = comp.size();
    if (m < 6 || m % 2 != 0) return false;
    VertexSet leaves;
    for (int v : comp)
        if ((g.neighbors(v) & comp).size() == 1) leaves.insert(v);
    if (leaves.size() != m / 2) return false;
    core = comp - leaves;
    VertexSet hit;
    for (int p : leaves) {
        int c = (g.neighbors(p) & comp).first();
        if (!core.contains(c) || hit.contains(c)) return false;
        hit.insert(c);
        if (pairs) pairs->emplace_back(c, p);
    }
    return hit == core;
}

}  // namespace

SunVerdict classify_component(const Graph& g, VertexSet component)
{
    SunVerdict out;
    const int m = component.size();
    if (m == 1) {
        out.kind = SunKind::K1;
        return out;
    }
    if (m == 2) {
        // Connected by contract, so the pair is an edge.
        out.kind = SunKind::K2;
        return out;
    }
    VertexSet core;
    std::vector<std::pair<int, int>> pairs;
    if (pendant_structure(g, component, core, &pairs) && is_factor_critical(g, core)) {
        out.kind = SunKind::BigSun;
        out.core = core;
        std::sort(pairs.begin(), pairs.end());
        out.pendants = std::move(pairs);
    }
    return out;
}

bool component_is_sun(const Graph& g, VertexSet component)
{
    const int m = component.size();
    if (m <= 2) return m >= 1;
    VertexSet core;
    return pendant_structure(g, component, core, nullptr) && is_factor_critical(g, core);
}

SunVerdict is_sun(const Graph& g)
{
    if (!is_connected(g)) throw GraphError("is_sun expects a connected graph");
    return classify_component(g, g.vertices());
}

int sun_count(const Graph& g, VertexSet alive)
{
    int count = 0;
    while (!alive.empty()) {
        VertexSet c = reach(g, alive, alive.first());
        alive -= c;
        if (component_is_sun(g, c)) ++count;
    }
    return count;
}

SunCount sun_components(const Graph& g, VertexSet alive)
{
    SunCount out;
    for (VertexSet c : components(g, alive)) {
        if (component_is_sun(g, c)) {
            ++out.count;
            out.suns.push_back(c);
        }
    }
    return out;
}

SunCount sun_components(const Graph& g)
{
    return sun_components(g, g.vertices());
}

int epsilon(const Graph& g, VertexSet x)
{
    if (!x.subset_of(g.vertices())) throw GraphError("vertex set " + x.to_string() + " not contained in V(G)");
    if (!g.is_independent(x)) return 2;
    if (x.empty()) return 0;
    VertexSet alive = g.vertices() - x;
    while (!alive.empty()) {
        VertexSet c = reach(g, alive, alive.first());
        alive -= c;
        if (!component_is_sun(g, c)) return 1;
    }
    return 0;
}

}  // namespace pfu
