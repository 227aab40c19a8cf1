#include <random>

#include "doctest.h"
#include "szf/bounds.hpp"
#include "szf/clique_cover.hpp"
#include "szf/generators.hpp"
#include "szf/minimize.hpp"
#include "szf/search.hpp"
#include "test_oracles.hpp"

using namespace szf;
using szf::testing::brute_clique_cover_number;
using szf::testing::minor_rank;

namespace {

Graph graph_of_matrix(const ExactMatrix& m) {
  Graph g(m.rows());
  for (int u = 0; u < m.rows(); ++u)
    for (int w = u + 1; w < m.cols(); ++w)
      if (sgn(m.at(u, w)) != 0) g.add_edge(u, w);
  return g;
}

}  // namespace

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(complete_graph(5)) == std::vector<VertexSet>{VertexSet::full(5)});
  CHECK(maximal_cliques(cycle_graph(5)).size() == 5);
  CHECK(maximal_cliques(Graph(3)).size() == 3);  // isolated vertices are maximal singletons
  // The octahedron has eight triangles.
  Graph oct = complete_graph(6);
  oct.remove_edge(0, 1);
  oct.remove_edge(2, 3);
  oct.remove_edge(4, 5);
  CHECK(maximal_cliques(oct).size() == 8);
}

TEST_CASE("clique cover numbers of small families") {
  CHECK(clique_cover_number(complete_graph(6)).cc == 1);
  CHECK(clique_cover_number(cycle_graph(5)).cc == 5);
  CHECK(clique_cover_number(line_graph(complete_graph(4)).graph).cc == 4);
  CHECK(clique_cover_number(line_graph(complete_graph(6)).graph).cc == 6);
  CHECK(clique_cover_number(Graph(4)).cc == 0);
  CHECK(clique_cover_number(hypercube(3)).cc == 12);
  CHECK_THROWS_AS(clique_cover_number(Graph(33)), CapacityError);
}

TEST_CASE("clique cover matches exhaustive search") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto r = clique_cover_number(g);
      CHECK(r.cc == brute_clique_cover_number(g));
      CHECK(r.cover.size() == r.cc);
      CHECK(is_clique_cover(g, r.cover));
    }
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(6, 0.6, rng());
    CHECK(clique_cover_number(g).cc == brute_clique_cover_number(g));
  }
}

TEST_CASE("is_clique_cover rejects non-cliques and missed edges") {
  const Graph p3 = path_graph(3);
  CHECK(is_clique_cover(p3, CliqueCover{{VertexSet{0, 1}, VertexSet{1, 2}}}));
  CHECK_FALSE(is_clique_cover(p3, CliqueCover{{VertexSet{0, 1}}}));
  CHECK_FALSE(is_clique_cover(p3, CliqueCover{{VertexSet{0, 1, 2}}}));
}

TEST_CASE("witness matrix has graph G and rank at most the cover size") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 6), 0.45, rng());
    const auto r = clique_cover_number(g);
    const ExactMatrix m = witness_matrix(g, r.cover);
    CHECK(graph_of_matrix(m) == g);
    int covered_extra = 0;
    VertexSet covered;
    for (VertexSet c : r.cover.cliques) covered |= c;
    covered_extra = (g.vertices() - covered).size();
    CHECK(rank_of(m) <= r.cc + covered_extra);
    if (g.order() <= 6) CHECK(rank_of(m) == minor_rank(m));
  }
  CHECK_THROWS_AS(witness_matrix(path_graph(3), CliqueCover{{VertexSet{0, 1}}}), ContractViolation);
}

TEST_CASE("n - cc(G) bounds the signed forcing number from below") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      CHECK(cc_nullity_lower_bound(g) <= signed_zero_forcing_number(z_pattern_of_graph(g)).value);
    }
  }
}

TEST_CASE("explicit forcing set for L(K_n)") {
  for (int n : {6, 7, 8}) {
    const LineGraph lg = line_graph(complete_graph(n));
    const VertexSet s = lkn_forcing_set(n);
    CHECK(s.size() == n * (n - 1) / 2 - n);
    const int sub = n - 3;
    for (int i = 0; i < sub; ++i) CHECK_FALSE(s.contains(*lg.vertex_of(i, n - 1)));
    CHECK_FALSE(s.contains(*lg.vertex_of(n - 3, n - 2)));
    CHECK(signed_forces(z_pattern_of_graph(lg.graph), s).has_value());
    CHECK(cc_nullity_lower_bound(lg.graph) == static_cast<int>(s.size()));
  }
  CHECK_THROWS_AS(lkn_forcing_set(3), ContractViolation);
}

TEST_CASE("product forcing sets") {
  const Graph q3 = hypercube(3);
  const VertexSet s3{0, 2, 6};
  const VertexSet s4 = product_forcing_set(s3, q3, complete_graph(2));
  CHECK(s4.size() == 6);
  CHECK(s4 == VertexSet{0, 1, 4, 5, 12, 13});
  CHECK(cartesian_product(q3, complete_graph(2)) == hypercube(4));
  CHECK(signed_forces(z_pattern_of_graph(hypercube(4)), s4).has_value());
  CHECK_THROWS_AS(cartesian_product(hypercube(6), complete_graph(3)), CapacityError);
}

TEST_CASE("closed forms") {
  CHECK(known_formula(Formula::line_graph_of_clique, 5) == 7);
  CHECK(known_formula(Formula::line_graph_of_clique, 4) == 4);
  CHECK(known_formula(Formula::hypercube, 3) == 4);
  CHECK(known_formula(Formula::hypercube, 4) == 8);
  CHECK_THROWS_AS(known_formula(Formula::line_graph_of_clique, 3), ContractViolation);
  CHECK(formula_from_name("lkn") == Formula::line_graph_of_clique);
  CHECK(formula_from_name("qd") == Formula::hypercube);
  CHECK_THROWS(formula_from_name("petersen"));
  for (int n = 4; n <= 5; ++n)
    CHECK(zero_forcing_number(line_graph(complete_graph(n)).graph).value ==
          known_formula(Formula::line_graph_of_clique, n));
  for (int d = 1; d <= 4; ++d) CHECK(zero_forcing_number(hypercube(d)).value == known_formula(Formula::hypercube, d));
}
