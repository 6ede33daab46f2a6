#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfu/graph.hpp"
#include "pfu/parameters.hpp"
#include "pfu/rational.hpp"

namespace pfu {

inline constexpr int report_schema_version = 1;

/// Largest order accepted by exhaustive (all labeled graphs) enumeration.
inline constexpr int max_exhaustive_order = 10;

enum class EnumerationMode { all, connected };

/// Every labeled graph on n vertices in edge-mask order (bit i of the mask is
/// the i-th vertex pair in colex order), optionally only the connected ones.
class GraphEnumerator {
public:
    GraphEnumerator(int n, EnumerationMode mode);
    std::optional<Graph> next();
    /// Labeled graphs visited so far, including skipped disconnected ones.
    std::uint64_t visited() const { return mask_; }

private:
    int n_;
    EnumerationMode mode_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
};

/// G(n, p) with exact rational p, drawn from a seeded mt19937_64; identical
/// seeds give identical streams on every platform.
Graph random_graph(int n, Rational p, std::mt19937_64& rng);

class RandomGraphStream {
public:
    RandomGraphStream(int n, int count, Rational p, std::uint64_t seed, bool connected_only = false);
    std::optional<Graph> next();

private:
    int n_;
    int remaining_;
    Rational p_;
    bool connected_only_;
    std::mt19937_64 rng_;
};

enum class Theorem { thm11, thm12, thm13, thm14 };

const char* to_string(Theorem t);

struct RandomScope {
    int count_per_order = 0;
    std::vector<int> orders;
    Rational edge_prob{1, 2};
    std::uint64_t seed = 1;
};

struct ValidationScope {
    /// Exhaustive over all labeled graphs with min_order <= n <= max_order;
    /// max_order = 0 disables the exhaustive part.
    int exhaustive_min_order = 1;
    int exhaustive_max_order = 0;
    RandomScope random;
    /// Per-search node budget, 0 for unlimited.
    std::uint64_t node_budget = 0;
    /// Required for Theorem::thm14.
    std::optional<Thm14Params> thm14;
};

struct Disagreement {
    std::string graph6;
    std::string detail;
};

struct ValidationReport {
    std::string theorem;
    std::uint64_t graphs_examined = 0;
    std::uint64_t hypothesis_hits = 0;
    /// Hypothesis holds but the graph is not uniform (thm13/thm14), sorted.
    std::vector<std::string> counterexamples;
    /// Criterion and search disagree (thm11/thm12), sorted by graph6.
    std::vector<Disagreement> disagreements;
    /// Graphs whose search ran out of budget, sorted.
    std::vector<std::string> budget_exhausted;
    std::uint64_t search_nodes = 0;
    double wall_seconds = 0.0;
    std::vector<std::string> notes;

    bool passed() const { return counterexamples.empty() && disagreements.empty(); }
    nlohmann::json to_json() const;
};

/// thm11/thm12: criterion agrees with exhaustive search on every graph in
/// scope (thm12 on connected graphs only). thm13/thm14: every graph meeting
/// the hypothesis is uniform.
ValidationReport validate(Theorem theorem, const ValidationScope& scope);

struct DemoCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SharpnessReport {
    std::string construction;
    int parameter = 0;
    std::string graph6;
    int order = 0;
    EdgeRef deleted_edge;
    VertexSet x;
    int sun_count = 0;
    int epsilon = 0;
    int bound = 0;
    /// Full is_uniform run (orders up to full_check_max_order only).
    bool full_check = false;
    std::optional<bool> uniform;
    std::optional<EdgeRef> uniform_witness;
    std::vector<DemoCheck> checks;
    std::string verdict;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Orders above this get the witness-only treatment in the demos.
inline constexpr int full_check_max_order = 14;

/// Rebuilds K_{3+t} v (4+2t)K2, deletes one K2 edge, and checks the degree,
/// independence, sun-count and bound identities at X = clique. Throws
/// InconsistencyError if any identity fails.
SharpnessReport remark1_demo(int t, std::uint64_t node_budget = 0);
/// Same for K_{k+1} v (2k+1)K2 with gamma = b / (2k + 1) and A the first
/// vertex of each of the first b K2 blocks.
SharpnessReport remark2_demo(int k, int b = 1, std::uint64_t node_budget = 0);

/// Everything the `analyze` subcommand prints.
nlohmann::json analyze_graph(const Graph& g, std::uint64_t node_budget = 0);
nlohmann::json to_json(const HypothesisReport& r);

}  // namespace pfu
