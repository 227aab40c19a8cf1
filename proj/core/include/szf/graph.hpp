#pragma once

#include <utility>
#include <vector>

#include "szf/vertex_set.hpp"

namespace szf {

/// Simple undirected graph on vertices 0..n-1, one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws CapacityError when n exceeds kMaxVertices.
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  /// Adds {u,v}. Self-loops and out-of-range endpoints throw ContractViolation.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const;
  /// Edges as (u,v) with u<v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  bool is_regular(int k) const;
  bool is_bipartite() const;

  /// True when adjacency is symmetric and loop-free with every bit in range.
  bool valid() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Subgraph induced by the vertices in `keep`, relabelled in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Brute-force isomorphism test with degree refinement; intended for n <= 10.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace szf
