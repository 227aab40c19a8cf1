#pragma once

#include <string_view>

#include "szf/clique_cover.hpp"
#include "szf/exact.hpp"
#include "szf/generators.hpp"
#include "szf/graph.hpp"

namespace szf {

/// n - cc(G): lower bound on the maximum nullity over symmetric matrices with graph G whose
/// off-diagonal nonzeros share one weak sign.
int cc_nullity_lower_bound(const Graph& g);

/// Sum of v v^T over the clique indicator vectors of `cover`, plus a singleton clique for
/// every vertex no listed clique contains. Entrywise nonnegative integer matrix whose graph
/// is g and whose rank is at most the number of cliques used. Throws ContractViolation when
/// `cover` is not a clique cover of g.
ExactMatrix witness_matrix(const Graph& g, const CliqueCover& cover);

/// Signed forcing set of L(K_n) in the labelling of line_graph(complete_graph(n)): every
/// vertex except (i,n) for i <= n-3 and the three pairs among {n-2, n-1, n}.
/// Requires n >= 4; the forcing guarantee holds for n >= 6.
VertexSet lkn_forcing_set(int n);

/// A copy of s_g in every fibre: {(s,h) : s in s_g, h in V(H)} in cartesian_product labelling.
VertexSet product_forcing_set(VertexSet s_g, const Graph& g, const Graph& h);

enum class Formula {
  /// Z(L(K_n)) = C(n,2) - (n-2), n >= 4.
  line_graph_of_clique,
  /// Z(Q_d) = 2^(d-1), d >= 1.
  hypercube,
};

/// Throws ContractViolation for parameters outside the formula's range.
long known_formula(Formula f, int parameter);
Formula formula_from_name(std::string_view name);

}  // namespace szf
