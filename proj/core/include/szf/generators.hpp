#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "szf/graph.hpp"

namespace szf {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Q_d: vertices are the integers 0..2^d-1, adjacent iff they differ in one bit.
/// Vertex k (0-based) carries binary label k, so 1-based label k+1 <-> binary k.
Graph hypercube(int d);

/// Line graph together with the labelling of its vertices by edges of the source.
struct LineGraph {
  Graph graph;
  /// edge_of[v] = (i,j), i<j, 0-based endpoints in the source graph.
  std::vector<std::pair<int, int>> edge_of;

  /// Line-graph vertex for the source edge {i,j}; nullopt when {i,j} is not an edge.
  std::optional<int> vertex_of(int i, int j) const;
};

/// Vertices of L(G) are the edges of G in lexicographic (min, max) order. An edgeless G
/// yields the empty graph (order 0).
LineGraph line_graph(const Graph& g);

/// Cartesian product G □ H with vertex (g,h) at index g*|V(H)| + h.
/// Throws CapacityError when |V(G)||V(H)| > vertex_limit.
Graph cartesian_product(const Graph& g, const Graph& h, int vertex_limit = kMaxVertices);

/// Uniform labelled tree decoded from a seeded Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Erdős–Rényi G(n, p) with a seeded generator.
Graph random_graph(int n, double p, std::uint64_t seed);

/// One representative of every isomorphism class of graphs on n vertices (n <= 7),
/// ordered by edge count and then by canonical code.
std::vector<Graph> all_graphs(int n);

}  // namespace szf
