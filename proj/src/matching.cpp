#include "pfu/matching.hpp"

#include <array>

namespace pfu {

namespace {

/// Edmonds' algorithm with explicit blossom bases; arrays are indexed by the
/// host graph's labels and only alive vertices take part.
class BlossomMatcher {
public:
    BlossomMatcher(const Graph& g, VertexSet alive) : g_(g), alive_(alive)
    {
        mate_.fill(-1);
    }

    void run()
    {
        // Greedy start keeps the number of augmenting searches small.
        for (int v : alive_) {
            if (mate_[v] != -1) continue;
            for (int w : g_.neighbors(v) & alive_) {
                if (mate_[w] == -1) {
                    mate_[v] = w;
                    mate_[w] = v;
                    break;
                }
            }
        }
        for (int v : alive_) {
            if (mate_[v] != -1) continue;
            int end = find_augmenting_path(v);
            while (end != -1) {
                int prev = parent_[end];
                int next = mate_[prev];
                mate_[end] = prev;
                mate_[prev] = end;
                end = next;
            }
        }
    }

    Matching result() const
    {
        Matching m;
        for (int v : alive_)
            if (mate_[v] > v) m.edges.emplace_back(v, mate_[v]);
        return m;
    }

private:
    int lowest_common_ancestor(int a, int b)
    {
        VertexSet seen;
        for (;;) {
            a = base_[a];
            seen.insert(a);
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen.contains(b)) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            in_blossom_.insert(base_[v]);
            in_blossom_.insert(base_[mate_[v]]);
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root)
    {
        VertexSet used = VertexSet::single(root);
        parent_.fill(-1);
        for (int v : alive_) base_[v] = v;

        std::array<int, max_order> queue{};
        int head = 0;
        int tail = 0;
        queue[tail++] = root;

        while (head < tail) {
            int v = queue[head++];
            for (int to : g_.neighbors(v) & alive_) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int b = lowest_common_ancestor(v, to);
                    in_blossom_ = VertexSet{};
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i : alive_) {
                        if (in_blossom_.contains(base_[i])) {
                            base_[i] = b;
                            if (!used.contains(i)) {
                                used.insert(i);
                                queue[tail++] = i;
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    int m = mate_[to];
                    used.insert(m);
                    queue[tail++] = m;
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    VertexSet alive_;
    std::array<int, max_order> mate_{};
    std::array<int, max_order> parent_{};
    std::array<int, max_order> base_{};
    VertexSet in_blossom_;
};

}  // namespace

VertexSet Matching::covered() const
{
    VertexSet s;
    for (auto e : edges) {
        s.insert(e.u);
        s.insert(e.v);
    }
    return s;
}

Matching maximum_matching(const Graph& g, VertexSet alive)
{
    BlossomMatcher matcher(g, alive & g.vertices());
    matcher.run();
    return matcher.result();
}

Matching maximum_matching(const Graph& g)
{
    return maximum_matching(g, g.vertices());
}

bool has_perfect_matching(const Graph& g, VertexSet alive)
{
    if (alive.size() % 2 != 0) return false;
    return 2 * maximum_matching(g, alive).size() == alive.size();
}

bool has_perfect_matching(const Graph& g)
{
    return has_perfect_matching(g, g.vertices());
}

bool is_factor_critical(const Graph& g, VertexSet alive)
{
    if (alive.empty() || alive.size() % 2 == 0) return false;
    if (reach(g, alive, alive.first()) != alive) return false;
    for (int x : alive) {
        VertexSet rest = alive;
        rest.erase(x);
        if (!has_perfect_matching(g, rest)) return false;
    }
    return true;
}

bool is_factor_critical(const Graph& g)
{
    return is_factor_critical(g, g.vertices());
}

bool is_valid_matching(const Graph& g, const Matching& m)
{
    VertexSet used;
    for (auto e : m.edges) {
        if (!g.has_edge(e)) return false;
        if (used.contains(e.u) || used.contains(e.v)) return false;
        used.insert(e.u);
        used.insert(e.v);
    }
    return true;
}

}  // namespace pfu
