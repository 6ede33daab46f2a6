#include "pfu/path_factor.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace pfu {

namespace {

class FactorSearch {
public:
    FactorSearch(const Graph& g, const FactorQuery& q) : n_(g.order()), budget_(q.node_budget)
    {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
        if (q.forbid) {
            adj_[q.forbid->u].erase(q.forbid->v);
            adj_[q.forbid->v].erase(q.forbid->u);
        }
        max_order_ = q.max_path_order <= 0 ? n_ : q.max_path_order;
        seeded_max_order_ = q.max_path_order <= 0 ? n_ : q.max_path_order + 1;
    }

    bool run(std::optional<EdgeRef> require)
    {
        VertexSet all = VertexSet::range(n_);
        if (!require) return solve(all);

        // Seed: a path oriented so that require.u precedes require.v; the left
        // arm grows from u, the right arm from v. Each path through the edge
        // has exactly one such orientation.
        const int a = require->u;
        const int b = require->v;
        std::array<int, max_order> right{};
        right[0] = a;
        right[1] = b;
        VertexSet used = VertexSet::of({a, b});
        bool found = false;
        grow_right(right, 2, used, all, a, seeded_max_order_, [&](VertexSet covered, auto&& build) {
            if (solve(all - covered)) {
                chosen_.push_back(build());
                found = true;
                return true;
            }
            return false;
        });
        return found;
    }

    PathFactor factor() const
    {
        PathFactor f;
        f.paths.assign(chosen_.rbegin(), chosen_.rend());
        return f;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Right arm holds pivot at index 0 (or the seed pair); extend at its tail,
    // then hand over to the left arm, which grows from the pivot. The
    // completed path is reverse(left) followed by right.
    template <typename Emit>
    bool grow_right(std::array<int, max_order>& right, int rlen, VertexSet used, VertexSet free, int pivot, int limit,
                    Emit&& emit)
    {
        std::array<int, max_order> left{};
        if (grow_left(right, rlen, left, 0, used, free, pivot, limit, emit)) return true;
        if (rlen >= limit) return false;
        const int tail = right[rlen - 1];
        for (int w : (adj_[tail] & free) - used) {
            right[rlen] = w;
            if (grow_right(right, rlen + 1, used | VertexSet::single(w), free, pivot, limit, emit)) return true;
        }
        return false;
    }

    template <typename Emit>
    bool grow_left(const std::array<int, max_order>& right, int rlen, std::array<int, max_order>& left, int llen,
                   VertexSet used, VertexSet free, int pivot, int limit, Emit&& emit)
    {
        if (rlen + llen >= 3) {
            auto build = [&] {
                std::vector<int> path;
                path.reserve(rlen + llen);
                for (int i = llen - 1; i >= 0; --i) path.push_back(left[i]);
                for (int i = 0; i < rlen; ++i) path.push_back(right[i]);
                return path;
            };
            if (emit(used, build)) return true;
        }
        if (rlen + llen >= limit) return false;
        const int tail = llen == 0 ? pivot : left[llen - 1];
        VertexSet options = (adj_[tail] & free) - used;
        if (llen == 0 && !seeded_) {
            // Orientation rule for an unseeded path through the pivot: a
            // nonempty left arm needs a right arm whose first vertex is
            // larger than the left arm's first vertex.
            if (rlen < 2) return false;
            options &= VertexSet::range(right[1]);
        }
        for (int w : options) {
            left[llen] = w;
            if (grow_left(right, rlen, left, llen + 1, used | VertexSet::single(w), free, pivot, limit, emit))
                return true;
        }
        return false;
    }

    bool solve(VertexSet free)
    {
        if (free.empty()) return true;
        if (++nodes_ > budget_ && budget_ != 0) throw BudgetExhausted("path-factor search exceeded node budget");
        if (failed_.contains(free.bits())) return false;

        for (int v : free) {
            if (!adj_[v].intersects(free)) {
                failed_.insert(free.bits());
                return false;
            }
        }

        const bool was_seeded = seeded_;
        seeded_ = false;
        const int pivot = free.first();
        std::array<int, max_order> right{};
        right[0] = pivot;
        bool found = grow_right(right, 1, VertexSet::single(pivot), free, pivot, max_order_,
                                [&](VertexSet covered, auto&& build) {
                                    if (solve(free - covered)) {
                                        chosen_.push_back(build());
                                        return true;
                                    }
                                    return false;
                                });
        seeded_ = was_seeded;
        if (!found) failed_.insert(free.bits());
        return found;
    }

    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int max_order_ = 5;
    int seeded_max_order_ = 6;
    // True while enumerating the seed path (no orientation rule applies).
    bool seeded_ = true;
    std::array<VertexSet, max_order> adj_{};
    std::unordered_set<std::uint64_t> failed_;
    std::vector<std::vector<int>> chosen_;
};

void check_edge(const Graph& g, EdgeRef e, const char* role)
{
    if (!g.has_edge(e)) throw GraphError(std::string(role) + " edge " + e.to_string() + " is not an edge of the graph");
}

}  // namespace

std::optional<PathFactor> find_p3_factor(const Graph& g, const FactorQuery& query, SearchStats* stats)
{
    if (query.require) check_edge(g, *query.require, "required");
    if (query.forbid) check_edge(g, *query.forbid, "forbidden");
    if (query.require && query.forbid && *query.require == *query.forbid)
        throw GraphError("required and forbidden edge coincide");

    FactorSearch search(g, query);
    bool found = false;
    try {
        found = search.run(query.require);
    } catch (const BudgetExhausted&) {
        if (stats) stats->nodes += search.nodes();
        throw;
    }
    if (stats) stats->nodes += search.nodes();
    if (!found) return std::nullopt;
    return search.factor();
}

std::vector<EdgeRef> covers_edge_set(const PathFactor& f)
{
    std::vector<EdgeRef> out;
    for (const auto& p : f.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_factor(const Graph& g, const PathFactor& f, std::optional<EdgeRef> require, std::optional<EdgeRef> forbid)
{
    VertexSet seen;
    for (const auto& p : f.paths) {
        if (p.size() < 3) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= g.order() || seen.contains(v)) return false;
            seen.insert(v);
            if (i > 0 && !g.adjacent(p[i - 1], v)) return false;
        }
    }
    if (seen != g.vertices()) return false;
    auto edges = covers_edge_set(f);
    auto has = [&](EdgeRef e) { return std::binary_search(edges.begin(), edges.end(), e); };
    if (require && !has(*require)) return false;
    if (forbid && has(*forbid)) return false;
    return true;
}

}  // namespace pfu
