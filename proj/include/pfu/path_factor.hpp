#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pfu/graph.hpp"

namespace pfu {

/// Thrown when a search exceeds its caller-supplied node budget. Distinct
/// from "no factor exists", which is reported as an empty optional.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spanning set of vertex-disjoint paths, each on at least three vertices.
struct PathFactor {
    std::vector<std::vector<int>> paths;

    bool operator==(const PathFactor&) const = default;
};

struct FactorQuery {
    /// The factor must use this edge.
    std::optional<EdgeRef> require;
    /// The factor must avoid this edge.
    std::optional<EdgeRef> forbid;
    /// Largest path order the search branches on; 0 means unbounded. Every
    /// path of order >= 6 splits into two paths of order >= 3, so 5 loses no
    /// solutions. The path carrying the required edge may need order 6 (the
    /// required edge can sit in the middle of a P6) and is allowed one more.
    int max_path_order = 5;
    /// Search-node limit; 0 means unlimited.
    std::uint64_t node_budget = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
};

/// Exhaustive backtracking search for a P>=3-factor of g honoring
/// require/forbid. Returns nullopt exactly when no such factor exists.
/// Throws GraphError for require/forbid that are not edges of g (or equal),
/// BudgetExhausted when the node budget runs out.
std::optional<PathFactor> find_p3_factor(const Graph& g, const FactorQuery& query = {},
                                         SearchStats* stats = nullptr);

/// Consecutive vertex pairs of every path, normalized and sorted.
std::vector<EdgeRef> covers_edge_set(const PathFactor& f);

/// Full re-validation: paths of order >= 3 along edges of g, pairwise
/// disjoint, covering V(g), plus the require/forbid constraints.
bool is_valid_factor(const Graph& g, const PathFactor& f, std::optional<EdgeRef> require = std::nullopt,
                     std::optional<EdgeRef> forbid = std::nullopt);

}  // namespace pfu
