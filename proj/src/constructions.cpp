#include "pfu/constructions.hpp"

#include <string>
#include <vector>

namespace pfu {

namespace {

void require_positive(int value, const char* what)
{
    if (value < 1) throw GraphError(std::string(what) + " must be positive, got " + std::to_string(value));
}

int combined_order(long long a, long long b)
{
    if (a + b > max_order)
        throw GraphError("combined order " + std::to_string(a + b) + " exceeds cap " + std::to_string(max_order));
    return static_cast<int>(a + b);
}

void append_shifted(std::vector<EdgeRef>& out, const Graph& g, int shift)
{
    for (auto e : g.edges()) out.emplace_back(e.u + shift, e.v + shift);
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order();
    const int n = combined_order(n1, g2.order());
    std::vector<EdgeRef> edges;
    append_shifted(edges, g1, 0);
    append_shifted(edges, g2, n1);
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const int n = combined_order(g1.order(), g2.order());
    std::vector<EdgeRef> edges;
    append_shifted(edges, g1, 0);
    append_shifted(edges, g2, g1.order());
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n)
{
    require_positive(n, "complete graph order");
    std::vector<EdgeRef> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    require_positive(a, "complete bipartite part size");
    require_positive(b, "complete bipartite part size");
    return join(Graph::empty(a), Graph::empty(b));
}

Graph path_graph(int n)
{
    require_positive(n, "path order");
    std::vector<EdgeRef> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3) throw GraphError("cycle order must be at least 3, got " + std::to_string(n));
    std::vector<EdgeRef> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph copies(int m, const Graph& g)
{
    require_positive(m, "copy count");
    const long long n = static_cast<long long>(m) * g.order();
    if (n > max_order) throw GraphError("combined order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    std::vector<EdgeRef> edges;
    for (int i = 0; i < m; ++i) append_shifted(edges, g, i * g.order());
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph remark1_graph(int t)
{
    if (t < 0) throw GraphError("remark1 parameter t must be nonnegative, got " + std::to_string(t));
    if (11 + 5LL * t > max_order) throw GraphError("remark1_graph(" + std::to_string(t) + ") exceeds cap");
    return join(complete_graph(3 + t), copies(4 + 2 * t, complete_graph(2)));
}

Graph remark2_graph(int k)
{
    require_positive(k, "remark2 parameter k");
    if (5LL * k + 3 > max_order) throw GraphError("remark2_graph(" + std::to_string(k) + ") exceeds cap");
    return join(complete_graph(k + 1), copies(2 * k + 1, complete_graph(2)));
}

}  // namespace pfu
