#include "szf/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "szf/error.hpp"

namespace szf {

Graph complete_graph(int n) {
  if (n < 1) throw ContractViolation("complete_graph: n must be positive");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw ContractViolation("path_graph: n must be positive");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ContractViolation("cycle_graph: n must be at least 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph hypercube(int d) {
  if (d < 0) throw ContractViolation("hypercube: negative dimension");
  if (d > 6) throw CapacityError("hypercube: Q_" + std::to_string(d) + " exceeds the vertex cap");
  const int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

std::optional<int> LineGraph::vertex_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(edge_of.begin(), edge_of.end(), std::pair{i, j});
  if (it == edge_of.end() || *it != std::pair{i, j}) return std::nullopt;
  return static_cast<int>(it - edge_of.begin());
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  const int m = static_cast<int>(out.edge_of.size());
  if (m > kMaxVertices) {
    throw CapacityError("line_graph: " + std::to_string(m) + " edges exceed the vertex cap");
  }
  out.graph = Graph(m);
  for (int a = 0; a < m; ++a) {
    const auto [i, j] = out.edge_of[a];
    for (int b = a + 1; b < m; ++b) {
      const auto [k, l] = out.edge_of[b];
      if (i == k || i == l || j == k || j == l) out.graph.add_edge(a, b);
    }
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h, int vertex_limit) {
  if (g.order() == 0 || h.order() == 0) throw ContractViolation("cartesian_product: empty factor");
  const long n = static_cast<long>(g.order()) * h.order();
  if (n > std::min(vertex_limit, kMaxVertices)) {
    throw CapacityError("cartesian_product: " + std::to_string(n) + " vertices exceed the limit");
  }
  const int m = h.order();
  Graph out(static_cast<int>(n));
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c : h.neighbors(b))
        if (b < c) out.add_edge(a * m + b, a * m + c);
      for (int c : g.neighbors(a))
        if (a < c) out.add_edge(a * m + b, c * m + b);
    }
  }
  return out;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("random_tree: n must be positive");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (int& x : pruefer) x = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : pruefer) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : pruefer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const int u = *leaves.begin();
  const int v = *std::next(leaves.begin());
  g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

namespace {

// Upper-triangle adjacency code under a relabelling; pairs in (j, i<j) order.
std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2 - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((code >> bit) & 1U) g.add_edge(i, j);
  return g;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw ContractViolation("all_graphs: negative order");
  if (n > 7) throw CapacityError("all_graphs: orders above 7 are not supported");
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int v : VertexSet(mask)) g.add_edge(v, k - 1);
        seen.insert(canonical_code(g));
      }
    }
    level.clear();
    for (std::uint64_t code : seen) level.push_back(from_code(k, code));
  }
  std::stable_sort(level.begin(), level.end(),
                   [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
  return level;
}

}  // namespace szf
