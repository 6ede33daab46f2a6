#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <initializer_list>
#include <vector>

namespace pfu {

/// Largest supported order; a vertex set fits in one machine word.
inline constexpr int max_order = 64;

/// Raised for malformed input: bad vertex indices, self-loops, cap overflow,
/// unparsable text.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Subset of {0..63} stored as a 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
    /// {0, .., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static VertexSet of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    /// Complement relative to {0..n-1}.
    constexpr VertexSet complement(int n) const { return range(n) - *this; }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t b) : b_(b) {}
        constexpr int operator*() const { return std::countr_zero(b_); }
        constexpr iterator& operator++() { b_ &= b_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t b_ = 0;
    };
    /// Ascending vertex order.
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// Unordered vertex pair, normalized so that u < v.
struct EdgeRef {
    int u = 0;
    int v = 0;

    EdgeRef() = default;
    EdgeRef(int a, int b);

    auto operator<=>(const EdgeRef&) const = default;
    std::string to_string() const;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on out-of-range endpoints or self-loops; duplicate
    /// pairs collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_edges(int n, const std::vector<EdgeRef>& edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
    {
        return from_edges(n, std::vector<std::pair<int, int>>(edges));
    }
    /// Edgeless graph of order n.
    static Graph empty(int n);

    int order() const { return n_; }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    bool has_edge(EdgeRef e) const { return e.v < n_ && adjacent(e.u, e.v); }

    /// All edges in lexicographic order of (u, v).
    std::vector<EdgeRef> edges() const;

    /// True when no edge has both ends in s.
    bool is_independent(VertexSet s) const;

    bool operator==(const Graph& o) const;

private:
    explicit Graph(int n);
    void link(int u, int v);
    void unlink(int u, int v);

    friend Graph delete_edge(const Graph&, EdgeRef);
    friend Graph add_edge(const Graph&, EdgeRef);
    friend Graph induced_subgraph(const Graph&, VertexSet);
    friend Graph labeled_graph(int, std::uint64_t);

    int n_ = 0;
    std::array<VertexSet, max_order> adj_{};
};

void check_order(int n);

/// Induced subgraph on V(g) - x, relabeled to 0..n-|x|-1 preserving order.
Graph delete_vertices(const Graph& g, VertexSet x);
/// Induced subgraph on s, relabeled preserving order.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// Same vertex set, one edge fewer. Throws if e is not an edge.
Graph delete_edge(const Graph& g, EdgeRef e);
/// Same vertex set, one edge more.
Graph add_edge(const Graph& g, EdgeRef e);

/// The labeled graph on n <= 11 vertices whose edge (i, j), i < j, is present
/// iff bit index(i, j) of mask is set, pairs indexed in colex order
/// (0,1),(0,2),(1,2),(0,3),...
Graph labeled_graph(int n, std::uint64_t mask);

/// Connected components of g[alive], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet alive);
std::vector<VertexSet> components(const Graph& g);
/// Vertices reachable from start inside alive.
VertexSet reach(const Graph& g, VertexSet alive, int start);
bool is_connected(const Graph& g);
int isolated_count(const Graph& g);

}  // namespace pfu
