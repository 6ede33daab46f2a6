#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfu/graph.hpp"
#include "pfu/rational.hpp"

namespace pfu {

int min_degree(const Graph& g);

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};

/// Exact independence number via maximum clique of the complement, with a
/// greedy-colouring bound.
IndependenceResult independence_number(const Graph& g);

/// Union of the neighbourhoods of the members of a.
VertexSet neighborhood(const Graph& g, VertexSet a);

/// Connected and no fewer than k edge deletions disconnect g.
bool edge_connectivity_at_least(const Graph& g, int k);

/// Minimum vertex-cut size via unit-capacity max-flow between non-adjacent
/// pairs; n - 1 for complete graphs, 0 for disconnected ones. Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// Calls visit(A) for every independent set of exactly `size` vertices, in
/// lexicographic order; visit returns true to stop early.
void for_each_independent_set(const Graph& g, int size, const std::function<bool(VertexSet)>& visit);
std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int size);

struct HypothesisCheck {
    std::string name;
    std::string required;
    std::string actual;
    bool pass = false;
};

struct HypothesisReport {
    bool satisfied = false;
    std::vector<HypothesisCheck> checks;
    /// Violating independent set (neighbourhood check) or a maximum
    /// independent set (degree-versus-alpha check).
    std::optional<VertexSet> witness;
    /// The neighbourhood condition held only because no independent set of
    /// the required size exists.
    bool vacuous = false;
};

/// 2-edge-connected and 2 delta > alpha + 4.
HypothesisReport check_thm13_hypothesis(const Graph& g);
/// Same predicate without building a report.
bool thm13_hypothesis_holds(const Graph& g);

struct Thm14Params {
    int k = 1;
    Rational gamma{1, 3};

    /// Throws std::invalid_argument unless k >= 1 and 1/3 <= gamma <= 1.
    void validate() const;
    /// floor(gamma (2k + 1))
    int b() const;
};

/// (k+2)-connected, n >= 5k + 3 - 3/(5 gamma - 1), and
/// |N(A)| > gamma (n - 3k - 2) + k + 2 for every independent A of size b.
HypothesisReport check_thm14_hypothesis(const Graph& g, const Thm14Params& p);
bool thm14_hypothesis_holds(const Graph& g, const Thm14Params& p);

}  // namespace pfu
