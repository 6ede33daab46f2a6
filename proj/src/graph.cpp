#include "pfu/graph.hpp"

#include <sstream>

namespace pfu {

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_item = true;
    for (int v : *this) {
        if (!first_item) os << ',';
        os << v;
        first_item = false;
    }
    os << '}';
    return os.str();
}

EdgeRef::EdgeRef(int a, int b) : u(a < b ? a : b), v(a < b ? b : a)
{
    if (a == b) throw GraphError("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

std::string EdgeRef::to_string() const
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_order(int n)
{
    if (n < 1 || n > max_order)
        throw GraphError("graph order " + std::to_string(n) + " outside 1.." + std::to_string(max_order));
}

Graph::Graph(int n) : n_(n) {}

void Graph::link(int u, int v)
{
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::unlink(int u, int v)
{
    adj_[u].erase(v);
    adj_[v].erase(u);
}

Graph Graph::empty(int n)
{
    check_order(n);
    return Graph(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    check_order(n);
    Graph g(n);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has endpoint outside 0.." +
                             std::to_string(n - 1));
        if (a == b) throw GraphError("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
        g.link(a, b);
    }
    return g;
}

Graph Graph::from_edges(int n, const std::vector<EdgeRef>& edges)
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (auto e : edges) pairs.emplace_back(e.u, e.v);
    return from_edges(n, pairs);
}

int Graph::size() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
}

std::vector<EdgeRef> Graph::edges() const
{
    std::vector<EdgeRef> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_independent(VertexSet s) const
{
    for (int v : s)
        if (adj_[v].intersects(s)) return false;
    return true;
}

bool Graph::operator==(const Graph& o) const
{
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    std::array<int, max_order> relabel{};
    int next = 0;
    for (int v : s) relabel[v] = next++;
    Graph h(next);
    for (int u : s)
        for (int v : g.neighbors(u) & s)
            if (u < v) h.link(relabel[u], relabel[v]);
    return h;
}

Graph delete_vertices(const Graph& g, VertexSet x)
{
    if (!x.subset_of(g.vertices())) throw GraphError("vertex set " + x.to_string() + " not contained in V(G)");
    if (x == g.vertices() && g.order() > 0) throw GraphError("cannot delete every vertex");
    return induced_subgraph(g, g.vertices() - x);
}

Graph delete_edge(const Graph& g, EdgeRef e)
{
    if (!g.has_edge(e)) throw GraphError("edge " + e.to_string() + " not in graph");
    Graph h = g;
    h.unlink(e.u, e.v);
    return h;
}

Graph add_edge(const Graph& g, EdgeRef e)
{
    if (e.v >= g.order()) throw GraphError("edge " + e.to_string() + " outside vertex range");
    Graph h = g;
    h.link(e.u, e.v);
    return h;
}

Graph labeled_graph(int n, std::uint64_t mask)
{
    if (n < 1 || n > 11) throw GraphError("labeled_graph supports 1 <= n <= 11");
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1u) g.link(i, j);
    return g;
}

VertexSet reach(const Graph& g, VertexSet alive, int start)
{
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & alive) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet alive)
{
    std::vector<VertexSet> out;
    while (!alive.empty()) {
        VertexSet c = reach(g, alive, alive.first());
        out.push_back(c);
        alive -= c;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g)
{
    return components(g, g.vertices());
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0) return false;
    return reach(g, g.vertices(), 0) == g.vertices();
}

int isolated_count(const Graph& g)
{
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty()) ++count;
    return count;
}

}  // namespace pfu
