#include "pfu/criteria.hpp"

#include <algorithm>

#include "pfu/subsets.hpp"
#include "pfu/sun.hpp"

namespace pfu {

namespace {

struct SunTally {
    int suns = 0;
    int others = 0;
};

SunTally tally(const Graph& g, VertexSet alive)
{
    SunTally t;
    while (!alive.empty()) {
        VertexSet c = reach(g, alive, alive.first());
        alive -= c;
        if (component_is_sun(g, c))
            ++t.suns;
        else
            ++t.others;
    }
    return t;
}

int epsilon_from(const Graph& g, VertexSet x, const SunTally& t)
{
    if (!g.is_independent(x)) return 2;
    if (!x.empty() && t.others > 0) return 1;
    return 0;
}

template <typename Bound>
CriterionVerdict enumerate_criterion(const Graph& g, CriterionOptions opts, int slack, Bound&& bound_at)
{
    const int n = g.order();
    CriterionVerdict verdict;
    for (int size = 0; size <= n; ++size) {
        // sun(G - X) <= n - |X|; once the bound (at least 2|X| - slack)
        // reaches that, no larger X can violate it either.
        if (opts.prune && 2 * size - slack >= n - size) break;
        bool stopped = for_each_subset_of_size(g.vertices(), size, [&](VertexSet x) {
            SunTally t = tally(g, g.vertices() - x);
            auto [bound, eps] = bound_at(x, t);
            if (t.suns > bound) {
                verdict.holds = false;
                verdict.witness_x = x;
                verdict.sun_count = t.suns;
                verdict.bound = bound;
                verdict.epsilon = eps;
                return true;
            }
            return false;
        });
        if (stopped) break;
    }
    return verdict;
}

class EdgeIndex {
public:
    explicit EdgeIndex(const Graph& g) : n_(g.order()), edges_(g.edges()), index_(n_ * n_, -1)
    {
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            index_[edges_[i].u * n_ + edges_[i].v] = i;
            index_[edges_[i].v * n_ + edges_[i].u] = i;
        }
    }

    int size() const { return static_cast<int>(edges_.size()); }
    EdgeRef edge(int i) const { return edges_[i]; }
    int of(int u, int v) const { return index_[u * n_ + v]; }

private:
    int n_;
    std::vector<EdgeRef> edges_;
    std::vector<int> index_;
};

class EdgeBits {
public:
    explicit EdgeBits(int m) : words_((m + 63) / 64, 0) {}
    void set(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    EdgeBits& operator|=(const EdgeBits& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

private:
    std::vector<std::uint64_t> words_;
};

EdgeBits factor_edges(const EdgeIndex& index, const PathFactor& f)
{
    EdgeBits bits(index.size());
    for (const auto& p : f.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) bits.set(index.of(p[i], p[i + 1]));
    return bits;
}

}  // namespace

CriterionVerdict kaneko_check(const Graph& g, CriterionOptions opts)
{
    return enumerate_criterion(g, opts, 0, [](VertexSet x, const SunTally&) {
        return std::pair{2 * x.size(), 0};
    });
}

CriterionVerdict covered_check_criterion(const Graph& g, CriterionOptions opts)
{
    if (!is_connected(g)) throw GraphError("covered_check_criterion expects a connected graph");
    return enumerate_criterion(g, opts, 2, [&g](VertexSet x, const SunTally& t) {
        int eps = epsilon_from(g, x, t);
        return std::pair{2 * x.size() - eps, eps};
    });
}

bool witness_is_sound(const Graph& g, const CriterionVerdict& v, bool with_epsilon)
{
    if (v.holds) return !v.witness_x.has_value();
    if (!v.witness_x) return false;
    const VertexSet x = *v.witness_x;
    const int suns = sun_count(g, g.vertices() - x);
    const int eps = with_epsilon ? epsilon(g, x) : 0;
    const int bound = 2 * x.size() - eps;
    return suns == v.sun_count && eps == v.epsilon && bound == v.bound && suns > bound;
}

CoveredResult covered_check_bruteforce(const Graph& g, std::uint64_t node_budget, SearchStats* stats)
{
    CoveredResult out;
    const EdgeIndex index(g);
    if (index.size() == 0) {
        out.edgeless = true;
        return out;
    }
    // A factor found for one edge also covers every other edge it uses.
    EdgeBits covered(index.size());
    for (int i = 0; i < index.size(); ++i) {
        if (covered.test(i)) continue;
        FactorQuery q;
        q.require = index.edge(i);
        q.node_budget = node_budget;
        auto f = find_p3_factor(g, q, stats);
        if (!f) {
            out.uncovered_edge = index.edge(i);
            return out;
        }
        covered |= factor_edges(index, *f);
    }
    out.covered = true;
    return out;
}

UniformVerdict is_uniform(const Graph& g, std::uint64_t node_budget, SearchStats* stats)
{
    const EdgeIndex index(g);
    const int m = index.size();
    if (m == 0) throw GraphError("is_uniform expects a graph with at least one edge");

    UniformVerdict out;
    if (m == 1) {
        out.witness_edge = index.edge(0);
        out.inner.edgeless = true;
        return out;
    }

    // certified[d] marks edges already known to lie on a factor avoiding
    // edge d; every factor found certifies its edges for every edge it omits.
    std::vector<EdgeBits> certified(m, EdgeBits(m));
    EdgeBits covered_in_g(m);
    for (int d = 0; d < m; ++d) {
        for (int c = 0; c < m; ++c) {
            if (c == d || certified[d].test(c)) continue;
            FactorQuery q;
            q.require = index.edge(c);
            q.forbid = index.edge(d);
            q.node_budget = node_budget;
            auto f = find_p3_factor(g, q, stats);
            if (!f) {
                out.witness_edge = index.edge(d);
                out.inner.uncovered_edge = index.edge(c);
                return out;
            }
            EdgeBits used = factor_edges(index, *f);
            covered_in_g |= used;
            for (int e = 0; e < m; ++e)
                if (!used.test(e)) certified[e] |= used;
        }
    }
    for (int e = 0; e < m; ++e)
        if (!covered_in_g.test(e))
            throw InconsistencyError("uniform graph with uncovered edge " + index.edge(e).to_string());
    out.uniform = true;
    out.inner.covered = true;
    return out;
}

bool is_uniform_pairwise(const Graph& g, std::uint64_t node_budget)
{
    const auto edges = g.edges();
    for (auto e1 : edges) {
        for (auto e2 : edges) {
            if (e1 == e2) continue;
            FactorQuery q;
            q.require = e1;
            q.forbid = e2;
            q.node_budget = node_budget;
            if (!find_p3_factor(g, q)) return false;
        }
    }
    return true;
}

CrossValidation cross_validate(const Graph& g, std::uint64_t node_budget, SearchStats* stats)
{
    CrossValidation out;
    FactorQuery q;
    q.node_budget = node_budget;
    out.has_factor = find_p3_factor(g, q, stats).has_value();
    out.kaneko_holds = kaneko_check(g).holds;
    if (out.has_factor != out.kaneko_holds)
        out.disagreements.push_back(std::string("factor search says ") + (out.has_factor ? "yes" : "no") +
                                    ", sun criterion says " + (out.kaneko_holds ? "yes" : "no"));
    if (is_connected(g)) {
        out.covered_bruteforce = covered_check_bruteforce(g, node_budget, stats).covered;
        out.covered_criterion = covered_check_criterion(g).holds;
        if (*out.covered_bruteforce != *out.covered_criterion)
            out.disagreements.push_back(std::string("covered by search: ") + (*out.covered_bruteforce ? "yes" : "no") +
                                        ", covered by criterion: " + (*out.covered_criterion ? "yes" : "no"));
    }
    return out;
}

}  // namespace pfu
