#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfu/graph.hpp"
#include "pfu/path_factor.hpp"

namespace pfu {

/// Two routes that must agree did not. Always a bug in this library.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Outcome of a "for every X" criterion. On failure witness_x is the
/// violating set of minimum size, lexicographically least among those, and
/// the detail fields describe the inequality there.
struct CriterionVerdict {
    bool holds = true;
    std::optional<VertexSet> witness_x;
    int sun_count = 0;
    int bound = 0;
    int epsilon = 0;
};

struct CriterionOptions {
    /// Stop enumerating once |X| is large enough that no violation is
    /// possible (the bound reaches n - |X|, an upper bound on sun(G - X)).
    bool prune = true;
};

/// sun(G - X) <= 2|X| for every X; equivalent to having a P>=3-factor.
CriterionVerdict kaneko_check(const Graph& g, CriterionOptions opts = {});

/// sun(G - X) <= 2|X| - epsilon(X) for every X; equivalent to coveredness
/// for connected g. Throws GraphError for disconnected input.
CriterionVerdict covered_check_criterion(const Graph& g, CriterionOptions opts = {});

/// Recomputes sun count, epsilon and the bound at the verdict's witness and
/// confirms the inequality fails there. `with_epsilon` selects the
/// covered-graph form of the bound.
bool witness_is_sound(const Graph& g, const CriterionVerdict& v, bool with_epsilon);

struct CoveredResult {
    bool covered = false;
    /// An edge no P>=3-factor contains; absent when covered or edgeless.
    std::optional<EdgeRef> uncovered_edge;
    bool edgeless = false;
};

/// Every edge lies on some P>=3-factor. Edgeless graphs are not covered.
CoveredResult covered_check_bruteforce(const Graph& g, std::uint64_t node_budget = 0, SearchStats* stats = nullptr);

struct UniformVerdict {
    bool uniform = false;
    /// An edge e with g - e not covered.
    std::optional<EdgeRef> witness_edge;
    /// Coveredness of g - witness_edge (labels as in g).
    CoveredResult inner;
};

/// g - e is covered for every edge e. Throws GraphError on edgeless input.
UniformVerdict is_uniform(const Graph& g, std::uint64_t node_budget = 0, SearchStats* stats = nullptr);

/// Pairwise form: for all distinct e1, e2 a factor contains e1 and avoids
/// e2. Matches is_uniform whenever g has at least two edges.
bool is_uniform_pairwise(const Graph& g, std::uint64_t node_budget = 0);

struct CrossValidation {
    bool has_factor = false;
    bool kaneko_holds = false;
    /// Present only for connected graphs.
    std::optional<bool> covered_bruteforce;
    std::optional<bool> covered_criterion;
    std::vector<std::string> disagreements;

    bool consistent() const { return disagreements.empty(); }
};

/// Runs both routes for factor existence and, on connected graphs, for
/// coveredness, recording every disagreement.
CrossValidation cross_validate(const Graph& g, std::uint64_t node_budget = 0, SearchStats* stats = nullptr);

}  // namespace pfu
