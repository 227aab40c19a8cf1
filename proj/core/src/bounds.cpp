#include "szf/bounds.hpp"

#include <string>

#include "szf/error.hpp"

namespace szf {

int cc_nullity_lower_bound(const Graph& g) { return g.order() - clique_cover_number(g).cc; }

ExactMatrix witness_matrix(const Graph& g, const CliqueCover& cover) {
  if (!is_clique_cover(g, cover)) throw ContractViolation("witness_matrix: not a clique cover of the graph");
  std::vector<VertexSet> cliques = cover.cliques;
  VertexSet touched;
  for (VertexSet c : cliques) touched |= c;
  for (int v : g.vertices() - touched) cliques.push_back(VertexSet::single(v));

  ExactMatrix a(g.order(), g.order());
  for (VertexSet c : cliques)
    for (int u : c)
      for (int w : c) a.at(u, w) += 1;
  return a;
}

VertexSet lkn_forcing_set(int n) {
  if (n < 4) throw ContractViolation("lkn_forcing_set: n must be at least 4");
  if (n * (n - 1) / 2 > kMaxVertices) throw CapacityError("lkn_forcing_set: L(K_n) exceeds the vertex cap");
  const LineGraph lg = line_graph(complete_graph(n));
  VertexSet excluded;
  // 0-based: (i, n-1) for i <= n-4, then the three pairs among n-3, n-2, n-1.
  for (int i = 0; i <= n - 4; ++i) excluded.insert(*lg.vertex_of(i, n - 1));
  excluded.insert(*lg.vertex_of(n - 3, n - 2));
  excluded.insert(*lg.vertex_of(n - 3, n - 1));
  excluded.insert(*lg.vertex_of(n - 2, n - 1));
  return lg.graph.vertices() - excluded;
}

VertexSet product_forcing_set(VertexSet s_g, const Graph& g, const Graph& h) {
  if (!s_g.is_subset_of(g.vertices())) throw ContractViolation("product_forcing_set: set is not inside V(G)");
  if (g.order() * h.order() > kMaxVertices) throw CapacityError("product_forcing_set: product exceeds the vertex cap");
  VertexSet out;
  for (int s : s_g)
    for (int b = 0; b < h.order(); ++b) out.insert(s * h.order() + b);
  return out;
}

long known_formula(Formula f, int parameter) {
  switch (f) {
    case Formula::line_graph_of_clique:
      if (parameter < 4) throw ContractViolation("Z(L(K_n)) closed form needs n >= 4");
      return static_cast<long>(parameter) * (parameter - 1) / 2 - (parameter - 2);
    case Formula::hypercube:
      if (parameter < 1 || parameter > 62) throw ContractViolation("Z(Q_d) closed form needs 1 <= d <= 62");
      return 1L << (parameter - 1);
  }
  throw ContractViolation("unknown formula");
}

Formula formula_from_name(std::string_view name) {
  if (name == "lkn" || name == "line-clique") return Formula::line_graph_of_clique;
  if (name == "qd" || name == "hypercube") return Formula::hypercube;
  throw ContractViolation("unknown formula '" + std::string(name) + "' (expected lkn or qd)");
}

}  // namespace szf
