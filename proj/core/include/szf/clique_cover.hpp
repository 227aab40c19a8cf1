#pragma once

#include <vector>

#include "szf/graph.hpp"

namespace szf {

/// A family of cliques of a graph that together contain every edge.
struct CliqueCover {
  std::vector<VertexSet> cliques;
  int size() const { return static_cast<int>(cliques.size()); }
};

struct CliqueCoverResult {
  int cc = 0;
  CliqueCover cover;
};

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted by bitset value.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// True iff every listed set is a clique of g and every edge lies in one of them.
bool is_clique_cover(const Graph& g, const CliqueCover& cover);

/// Exact clique-cover number: branch and bound over maximal cliques. Edgeless graphs give
/// cc = 0 with an empty cover. Throws CapacityError for graphs above 32 vertices.
CliqueCoverResult clique_cover_number(const Graph& g);

}  // namespace szf
