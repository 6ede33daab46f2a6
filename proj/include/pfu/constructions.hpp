#pragma once

#include "pfu/graph.hpp"

namespace pfu {

/// g1 on vertices 0..n1-1, g2 shifted to n1..n1+n2-1, plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);
/// g1 then g2 shifted by n1, no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
/// Requires n >= 3.
Graph cycle_graph(int n);
/// m disjoint copies of g, copy i occupying i*n..(i+1)*n-1.
Graph copies(int m, const Graph& g);

/// K_{3+t} joined with (4+2t) K2. Clique vertices are 0..2+t; the K2 blocks
/// follow as (3+t+2i, 4+t+2i).
Graph remark1_graph(int t);
/// K_{k+1} joined with (2k+1) K2. Clique vertices are 0..k; the K2 blocks
/// follow as (k+1+2i, k+2+2i).
Graph remark2_graph(int k);

}  // namespace pfu
