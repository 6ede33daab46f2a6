#include "pfu/parameters.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace pfu {

int min_degree(const Graph& g)
{
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return g.order() == 0 ? 0 : best;
}

namespace {

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const std::array<VertexSet, max_order>& adj) : adj_(adj) {}

    void expand(VertexSet clique, VertexSet cand)
    {
        if (cand.empty()) {
            if (clique.size() > best_.size()) best_ = clique;
            return;
        }
        // Greedy colouring: vertices of one colour class are pairwise
        // non-adjacent, so at most one of each class joins the clique.
        std::array<int, max_order> order{};
        std::array<int, max_order> bound{};
        int count = 0;
        int colour = 0;
        VertexSet uncoloured = cand;
        while (!uncoloured.empty()) {
            ++colour;
            VertexSet q = uncoloured;
            while (!q.empty()) {
                int v = q.first();
                q.erase(v);
                q -= adj_[v];
                uncoloured.erase(v);
                order[count] = v;
                bound[count] = colour;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (clique.size() + bound[i] <= best_.size()) return;
            int v = order[i];
            VertexSet grown = clique;
            grown.insert(v);
            expand(grown, cand & adj_[v]);
            cand.erase(v);
        }
    }

    VertexSet best() const { return best_; }

private:
    const std::array<VertexSet, max_order>& adj_;
    VertexSet best_;
};

/// Dense residual network for unit-capacity max-flow.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : nodes_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0) {}

    void add(int u, int v, int c) { cap_[idx(u, v)] += c; }

    /// Augments along shortest paths until `limit` units flow or none remain.
    int max_flow(int s, int t, int limit)
    {
        int flow = 0;
        std::vector<int> parent(nodes_);
        std::vector<int> queue(nodes_);
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = s;
            int head = 0;
            int tail = 0;
            queue[tail++] = s;
            while (head < tail && parent[t] == -1) {
                int u = queue[head++];
                for (int v = 0; v < nodes_; ++v) {
                    if (parent[v] == -1 && cap_[idx(u, v)] > 0) {
                        parent[v] = u;
                        queue[tail++] = v;
                    }
                }
            }
            if (parent[t] == -1) break;
            for (int v = t; v != s; v = parent[v]) {
                cap_[idx(parent[v], v)] -= 1;
                cap_[idx(v, parent[v])] += 1;
            }
            ++flow;
        }
        return flow;
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * nodes_ + v; }

    int nodes_;
    std::vector<int> cap_;
};

/// Internally vertex-disjoint s-t paths, capped at limit (s, t non-adjacent).
int local_vertex_connectivity(const Graph& g, int s, int t, int limit)
{
    const int n = g.order();
    const int inf = n;
    // v_in = v, v_out = v + n.
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v) net.add(v, v + n, (v == s || v == t) ? inf : 1);
    for (auto e : g.edges()) {
        net.add(e.u + n, e.v, inf);
        net.add(e.v + n, e.u, inf);
    }
    return net.max_flow(s + n, t, limit);
}

void independent_dfs(const Graph& g, VertexSet chosen, VertexSet cand, int need, const std::function<bool(VertexSet)>& visit,
                     bool& stop)
{
    if (need == 0) {
        stop = visit(chosen);
        return;
    }
    while (!stop && cand.size() >= need) {
        int v = cand.first();
        cand.erase(v);
        VertexSet next = chosen;
        next.insert(v);
        independent_dfs(g, next, cand - g.neighbors(v), need - 1, visit, stop);
    }
}

std::string bool_text(bool b)
{
    return b ? "true" : "false";
}

}  // namespace

IndependenceResult independence_number(const Graph& g)
{
    std::array<VertexSet, max_order> complement{};
    for (int v = 0; v < g.order(); ++v) complement[v] = g.vertices() - g.neighbors(v) - VertexSet::single(v);
    MaxCliqueSearch search(complement);
    search.expand(VertexSet{}, g.vertices());
    return {search.best().size(), search.best()};
}

VertexSet neighborhood(const Graph& g, VertexSet a)
{
    VertexSet out;
    for (int v : a) out |= g.neighbors(v);
    return out;
}

bool edge_connectivity_at_least(const Graph& g, int k)
{
    if (k < 1) throw std::invalid_argument("edge connectivity threshold must be at least 1");
    if (!is_connected(g)) return false;
    const int n = g.order();
    for (int t = 1; t < n; ++t) {
        FlowNetwork net(n);
        for (auto e : g.edges()) {
            net.add(e.u, e.v, 1);
            net.add(e.v, e.u, 1);
        }
        if (net.max_flow(0, t, k) < k) return false;
    }
    return true;
}

int vertex_connectivity(const Graph& g)
{
    const int n = g.order();
    if (n < 2) throw GraphError("vertex connectivity needs at least two vertices");
    if (!is_connected(g)) return 0;
    int best = n - 1;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            best = std::min(best, local_vertex_connectivity(g, s, t, best));
        }
    }
    return best;
}

void for_each_independent_set(const Graph& g, int size, const std::function<bool(VertexSet)>& visit)
{
    if (size < 0 || size > g.order()) throw std::invalid_argument("independent set size out of range");
    bool stop = false;
    independent_dfs(g, VertexSet{}, g.vertices(), size, visit, stop);
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int size)
{
    std::vector<VertexSet> out;
    for_each_independent_set(g, size, [&](VertexSet a) {
        out.push_back(a);
        return false;
    });
    return out;
}

HypothesisReport check_thm13_hypothesis(const Graph& g)
{
    HypothesisReport report;
    const bool two_edge = edge_connectivity_at_least(g, 2);
    report.checks.push_back({"two_edge_connected", "true", bool_text(two_edge), two_edge});

    const int delta = min_degree(g);
    const auto ind = independence_number(g);
    const bool degree_ok = 2 * delta > ind.alpha + 4;
    report.checks.push_back({"min_degree_vs_independence", "2*delta > alpha + 4",
                             "2*" + std::to_string(delta) + " = " + std::to_string(2 * delta) + " vs " +
                                 std::to_string(ind.alpha) + " + 4 = " + std::to_string(ind.alpha + 4),
                             degree_ok});
    if (!degree_ok) report.witness = ind.witness;
    report.satisfied = two_edge && degree_ok;
    return report;
}

bool thm13_hypothesis_holds(const Graph& g)
{
    const int delta = min_degree(g);
    // alpha >= 1, so 2 delta must exceed 5 before alpha is worth computing.
    if (2 * delta <= 5) return false;
    if (2 * delta <= independence_number(g).alpha + 4) return false;
    return edge_connectivity_at_least(g, 2);
}

void Thm14Params::validate() const
{
    if (k < 1) throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
    if (gamma < Rational(1, 3) || gamma > Rational(1))
        throw std::invalid_argument("gamma must lie in [1/3, 1], got " + gamma.to_string());
}

int Thm14Params::b() const
{
    return static_cast<int>(gamma.floor_times(2 * k + 1));
}

namespace {

Rational order_bound(const Thm14Params& p)
{
    // 5k + 3 - 3 / (5 gamma - 1); 5 gamma - 1 >= 2/3 on the valid range.
    return Rational(5 * p.k + 3) - Rational(3) / (Rational(5) * p.gamma - Rational(1));
}

Rational neighborhood_threshold(const Thm14Params& p, int n)
{
    return p.gamma * Rational(n - 3 * p.k - 2) + Rational(p.k + 2);
}

}  // namespace

HypothesisReport check_thm14_hypothesis(const Graph& g, const Thm14Params& p)
{
    p.validate();
    HypothesisReport report;
    const int n = g.order();

    const int kappa = n >= 2 ? vertex_connectivity(g) : 0;
    const bool conn_ok = kappa >= p.k + 2;
    report.checks.push_back({"vertex_connectivity", ">= " + std::to_string(p.k + 2), std::to_string(kappa), conn_ok});

    const Rational bound = order_bound(p);
    const bool order_ok = Rational(n) >= bound;
    report.checks.push_back({"order", ">= " + bound.to_string(), std::to_string(n), order_ok});

    const int b = p.b();
    const Rational threshold = neighborhood_threshold(p, n);
    int sets = 0;
    int smallest = std::numeric_limits<int>::max();
    std::optional<VertexSet> violator;
    if (b <= n) {
        for_each_independent_set(g, b, [&](VertexSet a) {
            ++sets;
            int size = neighborhood(g, a).size();
            smallest = std::min(smallest, size);
            if (!violator && !(Rational(size) > threshold)) violator = a;
            return false;
        });
    }
    const bool nbhd_ok = !violator.has_value();
    report.vacuous = sets == 0;
    std::string actual = sets == 0 ? "no independent set of size " + std::to_string(b)
                                   : "min |N(A)| = " + std::to_string(smallest) + " over " + std::to_string(sets) +
                                         " sets of size " + std::to_string(b);
    report.checks.push_back({"neighborhood", "|N(A)| > " + threshold.to_string(), actual, nbhd_ok});
    report.witness = violator;
    report.satisfied = conn_ok && order_ok && nbhd_ok;
    return report;
}

bool thm14_hypothesis_holds(const Graph& g, const Thm14Params& p)
{
    p.validate();
    const int n = g.order();
    if (Rational(n) < order_bound(p)) return false;
    const int b = p.b();
    const Rational threshold = neighborhood_threshold(p, n);
    bool violated = false;
    if (b <= n) {
        for_each_independent_set(g, b, [&](VertexSet a) {
            violated = !(Rational(neighborhood(g, a).size()) > threshold);
            return violated;
        });
    }
    if (violated) return false;
    return n >= 2 && vertex_connectivity(g) >= p.k + 2;
}

}  // namespace pfu
