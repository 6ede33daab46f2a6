#include "pfu/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>

#include "pfu/constructions.hpp"
#include "pfu/criteria.hpp"
#include "pfu/io.hpp"
#include "pfu/path_factor.hpp"
#include "pfu/sun.hpp"

namespace pfu {

using nlohmann::json;

GraphEnumerator::GraphEnumerator(int n, EnumerationMode mode) : n_(n), mode_(mode)
{
    if (n < 1 || n > max_exhaustive_order)
        throw GraphError("exhaustive enumeration supports 1 <= n <= " + std::to_string(max_exhaustive_order));
    end_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> GraphEnumerator::next()
{
    while (mask_ < end_) {
        Graph g = labeled_graph(n_, mask_++);
        if (mode_ == EnumerationMode::all || is_connected(g)) return g;
    }
    return std::nullopt;
}

Graph random_graph(int n, Rational p, std::mt19937_64& rng)
{
    if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    check_order(n);
    const auto num = static_cast<std::uint64_t>(p.num());
    const auto den = static_cast<std::uint64_t>(p.den());
    std::vector<EdgeRef> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng() % den < num) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

RandomGraphStream::RandomGraphStream(int n, int count, Rational p, std::uint64_t seed, bool connected_only)
    : n_(n), remaining_(count), p_(p), connected_only_(connected_only), rng_(seed)
{
    check_order(n);
    if (connected_only && n > 1 && p == Rational(0))
        throw std::invalid_argument("connected sampling needs a positive edge probability");
}

std::optional<Graph> RandomGraphStream::next()
{
    if (remaining_ <= 0) return std::nullopt;
    for (;;) {
        Graph g = random_graph(n_, p_, rng_);
        if (!connected_only_ || is_connected(g)) {
            --remaining_;
            return g;
        }
    }
}

const char* to_string(Theorem t)
{
    switch (t) {
    case Theorem::thm11: return "thm11";
    case Theorem::thm12: return "thm12";
    case Theorem::thm13: return "thm13";
    case Theorem::thm14: return "thm14";
    }
    return "?";
}

json ValidationReport::to_json() const
{
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "validation";
    j["theorem"] = theorem;
    j["graphs_examined"] = graphs_examined;
    j["hypothesis_hits"] = hypothesis_hits;
    j["counterexamples"] = counterexamples;
    j["disagreements"] = json::array();
    for (const auto& d : disagreements) j["disagreements"].push_back({{"graph6", d.graph6}, {"detail", d.detail}});
    j["budget_exhausted"] = budget_exhausted;
    j["search_nodes"] = search_nodes;
    j["wall_seconds"] = wall_seconds;
    j["notes"] = notes;
    j["passed"] = passed();
    return j;
}

namespace {

class Validator {
public:
    Validator(Theorem theorem, const ValidationScope& scope) : theorem_(theorem), scope_(scope)
    {
        report_.theorem = to_string(theorem);
        if (theorem == Theorem::thm14) {
            if (!scope.thm14) throw std::invalid_argument("thm14 validation needs k and gamma");
            scope.thm14->validate();
        }
    }

    void run()
    {
        const auto start = std::chrono::steady_clock::now();
        const int lo = std::max(1, scope_.exhaustive_min_order);
        for (int n = lo; n <= scope_.exhaustive_max_order; ++n) exhaustive(n);
        for (std::size_t i = 0; i < scope_.random.orders.size(); ++i) {
            const int n = scope_.random.orders[i];
            // Each order gets its own stream so adding orders never perturbs
            // the graphs drawn for the others.
            RandomGraphStream stream(n, scope_.random.count_per_order, scope_.random.edge_prob,
                                     scope_.random.seed + 1000003ULL * static_cast<std::uint64_t>(n),
                                     theorem_ == Theorem::thm12);
            while (auto g = stream.next()) examine(*g);
        }
        std::sort(report_.counterexamples.begin(), report_.counterexamples.end());
        std::sort(report_.disagreements.begin(), report_.disagreements.end(),
                  [](const Disagreement& a, const Disagreement& b) { return a.graph6 < b.graph6; });
        std::sort(report_.budget_exhausted.begin(), report_.budget_exhausted.end());
        if ((theorem_ == Theorem::thm13 || theorem_ == Theorem::thm14) && report_.hypothesis_hits == 0)
            report_.notes.push_back("no hypothesis hits in scope");
        if (theorem_ == Theorem::thm14 && vacuous_hits_ > 0)
            report_.notes.push_back(std::to_string(vacuous_hits_) +
                                    " hits satisfied the neighborhood condition vacuously (no independent set of size b)");
        report_.search_nodes = stats_.nodes;
        report_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    ValidationReport take() { return std::move(report_); }

private:
    void exhaustive(int n)
    {
        if (n > max_exhaustive_order)
            throw GraphError("exhaustive enumeration supports n <= " + std::to_string(max_exhaustive_order));
        const int pairs = n * (n - 1) / 2;
        const std::uint64_t end = std::uint64_t{1} << pairs;

        // Bits of the edge mask touching each vertex, for a degree prefilter.
        std::array<std::uint64_t, max_order> incident{};
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                incident[i] |= std::uint64_t{1} << bit;
                incident[j] |= std::uint64_t{1} << bit;
            }
        // Minimum degree each hypothesis forces: 2 delta > alpha + 4 >= 5,
        // and (k+2)-connectivity needs delta >= k + 2.
        int needed_degree = 0;
        if (theorem_ == Theorem::thm13) needed_degree = 3;
        if (theorem_ == Theorem::thm14) needed_degree = scope_.thm14->k + 2;

        for (std::uint64_t mask = 0; mask < end; ++mask) {
            if (needed_degree > 0) {
                bool low = false;
                for (int v = 0; v < n && !low; ++v) low = std::popcount(mask & incident[v]) < needed_degree;
                if (low) {
                    ++report_.graphs_examined;
                    continue;
                }
            }
            Graph g = labeled_graph(n, mask);
            if (theorem_ == Theorem::thm12 && !is_connected(g)) continue;
            examine(g);
        }
    }

    void examine(const Graph& g)
    {
        ++report_.graphs_examined;
        try {
            switch (theorem_) {
            case Theorem::thm11: check_factor_criterion(g); break;
            case Theorem::thm12: check_covered_criterion(g); break;
            case Theorem::thm13:
                if (thm13_hypothesis_holds(g)) {
                    if (!check_thm13_hypothesis(g).satisfied)
                        throw InconsistencyError("hypothesis predicate and report disagree on " + to_graph6(g));
                    hit(g);
                }
                break;
            case Theorem::thm14:
                if (thm14_hypothesis_holds(g, *scope_.thm14)) {
                    auto full = check_thm14_hypothesis(g, *scope_.thm14);
                    if (!full.satisfied)
                        throw InconsistencyError("hypothesis predicate and report disagree on " + to_graph6(g));
                    if (full.vacuous) ++vacuous_hits_;
                    hit(g);
                }
                break;
            }
        } catch (const BudgetExhausted&) {
            report_.budget_exhausted.push_back(to_graph6(g));
        }
    }

    void check_factor_criterion(const Graph& g)
    {
        FactorQuery q;
        q.node_budget = scope_.node_budget;
        const bool search = find_p3_factor(g, q, &stats_).has_value();
        const auto crit = kaneko_check(g);
        if (search != crit.holds) {
            std::string detail = std::string("factor search: ") + (search ? "exists" : "none") + "; criterion: " +
                                 (crit.holds ? "holds" : "fails at X=" + crit.witness_x->to_string());
            report_.disagreements.push_back({to_graph6(g), detail});
        }
    }

    void check_covered_criterion(const Graph& g)
    {
        const auto brute = covered_check_bruteforce(g, scope_.node_budget, &stats_);
        const auto crit = covered_check_criterion(g);
        if (brute.covered != crit.holds) {
            std::string detail = std::string("search: ") + (brute.covered ? "covered" : "not covered") + "; criterion: " +
                                 (crit.holds ? "holds" : "fails at X=" + crit.witness_x->to_string());
            report_.disagreements.push_back({to_graph6(g), detail});
        }
    }

    void hit(const Graph& g)
    {
        ++report_.hypothesis_hits;
        if (!is_uniform(g, scope_.node_budget, &stats_).uniform) report_.counterexamples.push_back(to_graph6(g));
    }

    Theorem theorem_;
    const ValidationScope& scope_;
    ValidationReport report_;
    SearchStats stats_;
    std::uint64_t vacuous_hits_ = 0;
};


void add_check(SharpnessReport& r, std::string name, long long expected, long long actual)
{
    r.checks.push_back({std::move(name), std::to_string(expected), std::to_string(actual), expected == actual});
}

void add_check(SharpnessReport& r, std::string name, std::string expected, std::string actual, bool pass)
{
    r.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

/// Checks shared by both constructions: sun count and epsilon at X = clique
/// in G - e, then optionally the full uniformity run.
void sun_side(SharpnessReport& r, const Graph& g, EdgeRef e, VertexSet clique, int expected_suns, int expected_bound,
              std::uint64_t budget)
{
    const Graph g_minus_e = delete_edge(g, e);
    r.deleted_edge = e;
    r.x = clique;
    r.sun_count = sun_count(g_minus_e, g_minus_e.vertices() - clique);
    r.epsilon = epsilon(g_minus_e, clique);
    r.bound = 2 * clique.size() - r.epsilon;
    add_check(r, "sun(G'-X)", expected_suns, r.sun_count);
    add_check(r, "epsilon(X)", 2, r.epsilon);
    add_check(r, "2|X|-epsilon(X)", expected_bound, r.bound);
    add_check(r, "sun(G'-X) > 2|X|-epsilon(X)", "true", r.sun_count > r.bound ? "true" : "false", r.sun_count > r.bound);

    if (g.order() <= full_check_max_order) {
        r.full_check = true;
        const auto crit = covered_check_criterion(g_minus_e);
        add_check(r, "G' covered (criterion)", "false", crit.holds ? "true" : "false", !crit.holds);
        const auto u = is_uniform(g, budget);
        r.uniform = u.uniform;
        r.uniform_witness = u.witness_edge;
        add_check(r, "G uniform (search)", "false", u.uniform ? "true" : "false", !u.uniform);
    }
    r.verdict = "G - e is not covered, so G is not uniform";
}

void enforce(const SharpnessReport& r)
{
    for (const auto& c : r.checks)
        if (!c.pass)
            throw InconsistencyError(r.construction + "(" + std::to_string(r.parameter) + "): check '" + c.name +
                                     "' expected " + c.expected + ", got " + c.actual);
}

}  // namespace

ValidationReport validate(Theorem theorem, const ValidationScope& scope)
{
    Validator v(theorem, scope);
    v.run();
    return v.take();
}

bool SharpnessReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const DemoCheck& c) { return c.pass; });
}

json SharpnessReport::to_json() const
{
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "sharpness";
    j["construction"] = construction;
    j["parameter"] = parameter;
    j["graph6"] = graph6;
    j["n"] = order;
    j["deleted_edge"] = {deleted_edge.u, deleted_edge.v};
    j["X"] = x.to_vector();
    j["sun_count"] = sun_count;
    j["epsilon"] = epsilon;
    j["bound"] = bound;
    j["full_check"] = full_check;
    j["uniform"] = uniform ? json(*uniform) : json(nullptr);
    j["uniform_witness_edge"] = uniform_witness ? json{uniform_witness->u, uniform_witness->v} : json(nullptr);
    j["checks"] = json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["verdict"] = verdict;
    j["passed"] = passed();
    return j;
}

SharpnessReport remark1_demo(int t, std::uint64_t node_budget)
{
    const Graph g = remark1_graph(t);
    SharpnessReport r;
    r.construction = "remark1";
    r.parameter = t;
    r.graph6 = to_graph6(g);
    r.order = g.order();

    const int delta = min_degree(g);
    const int alpha = independence_number(g).alpha;
    add_check(r, "n", 11 + 5 * t, g.order());
    add_check(r, "delta", 4 + t, delta);
    add_check(r, "alpha", 4 + 2 * t, alpha);
    add_check(r, "2*delta", alpha + 4, 2 * delta);
    add_check(r, "kappa", 3 + t, vertex_connectivity(g));
    add_check(r, "thm13 hypothesis", "false", check_thm13_hypothesis(g).satisfied ? "true" : "false",
              !check_thm13_hypothesis(g).satisfied);

    const EdgeRef e(3 + t, 4 + t);
    sun_side(r, g, e, VertexSet::range(3 + t), 5 + 2 * t, 4 + 2 * t, node_budget);
    enforce(r);
    return r;
}

SharpnessReport remark2_demo(int k, int b, std::uint64_t node_budget)
{
    const Graph g = remark2_graph(k);
    SharpnessReport r;
    r.construction = "remark2";
    r.parameter = k;
    r.graph6 = to_graph6(g);
    r.order = g.order();
    if (b < 1 || b > 2 * k + 1) throw std::invalid_argument("b must lie in 1..2k+1");

    const int n = g.order();
    const int kappa = vertex_connectivity(g);
    add_check(r, "n", 5 * k + 3, n);
    add_check(r, "kappa", k + 1, kappa);
    add_check(r, "kappa < k+2", "true", kappa < k + 2 ? "true" : "false", kappa < k + 2);

    // gamma = b / (2k+1) makes floor(gamma (2k+1)) = b exactly.
    const Rational gamma(b, 2 * k + 1);
    add_check(r, "floor(gamma(2k+1))", b, gamma.floor_times(2 * k + 1));
    VertexSet a;
    for (int i = 0; i < b; ++i) a.insert(k + 1 + 2 * i);
    add_check(r, "A independent", "true", g.is_independent(a) ? "true" : "false", g.is_independent(a));
    const Rational nbhd(neighborhood(g, a).size());
    const Rational expected = gamma * Rational(2 * k + 1) + Rational(k + 1);
    const Rational lower = gamma * Rational(n - 3 * k - 2) + Rational(k + 1);
    const Rational strict = gamma * Rational(n - 3 * k - 2) + Rational(k + 2);
    add_check(r, "|N(A)| = gamma(2k+1)+k+1", expected.to_string(), nbhd.to_string(), nbhd == expected);
    add_check(r, "|N(A)| = gamma(n-3k-2)+k+1", lower.to_string(), nbhd.to_string(), nbhd == lower);
    add_check(r, "|N(A)| < gamma(n-3k-2)+k+2", strict.to_string(), nbhd.to_string(), nbhd < strict);

    const EdgeRef e(k + 1, k + 2);
    sun_side(r, g, e, VertexSet::range(k + 1), 2 * k + 2, 2 * k, node_budget);
    enforce(r);
    return r;
}

json to_json(const HypothesisReport& r)
{
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "hypothesis";
    j["satisfied"] = r.satisfied;
    j["checks"] = json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"required", c.required}, {"actual", c.actual}, {"pass", c.pass}});
    j["witness"] = r.witness ? json(r.witness->to_vector()) : json(nullptr);
    j["vacuous"] = r.vacuous;
    return j;
}

json analyze_graph(const Graph& g, std::uint64_t node_budget)
{
    json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = "analysis";
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["delta"] = min_degree(g);
    const auto ind = independence_number(g);
    j["alpha"] = ind.alpha;
    j["kappa"] = g.order() >= 2 ? json(vertex_connectivity(g)) : json(nullptr);
    j["connected"] = is_connected(g);
    j["two_edge_connected"] = edge_connectivity_at_least(g, 2);
    j["sun_count"] = sun_count(g, g.vertices());

    json w;
    w["max_independent_set"] = ind.witness.to_vector();

    FactorQuery q;
    q.node_budget = node_budget;
    const auto factor = find_p3_factor(g, q);
    j["has_p3_factor"] = factor.has_value();
    if (factor) {
        w["p3_factor"] = factor->paths;
    } else {
        const auto crit = kaneko_check(g);
        if (crit.witness_x)
            w["factor_obstruction"] = {{"X", crit.witness_x->to_vector()}, {"sun_count", crit.sun_count},
                                       {"bound", crit.bound}};
    }

    const auto covered = covered_check_bruteforce(g, node_budget);
    j["covered"] = covered.covered;
    if (covered.uncovered_edge) w["uncovered_edge"] = {covered.uncovered_edge->u, covered.uncovered_edge->v};
    if (is_connected(g)) {
        const auto crit = covered_check_criterion(g);
        if (crit.holds != covered.covered)
            throw InconsistencyError("covered criterion and search disagree on " + to_graph6(g));
        if (crit.witness_x)
            w["covered_obstruction"] = {{"X", crit.witness_x->to_vector()}, {"sun_count", crit.sun_count},
                                        {"bound", crit.bound}, {"epsilon", crit.epsilon}};
    }
    if ((factor.has_value()) != kaneko_check(g).holds)
        throw InconsistencyError("factor criterion and search disagree on " + to_graph6(g));

    if (g.size() > 0) {
        const auto u = is_uniform(g, node_budget);
        j["uniform"] = u.uniform;
        if (u.witness_edge) {
            w["non_uniform_edge"] = {u.witness_edge->u, u.witness_edge->v};
            if (u.inner.uncovered_edge) w["uncovered_in_g_minus_e"] = {u.inner.uncovered_edge->u, u.inner.uncovered_edge->v};
        }
    } else {
        j["uniform"] = false;
    }
    j["witnesses"] = w;
    return j;
}

}  // namespace pfu
