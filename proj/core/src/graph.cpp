#include "szf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "szf/error.hpp"

namespace szf {

std::string format_one_based(VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

VertexSet parse_one_based(const std::string& text, int n) {
  VertexSet s;
  std::string token;
  std::size_t column = 0;
  auto flush = [&] {
    if (token.empty()) return;
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(token, &used);
      if (used != token.size()) throw ParseError("bad vertex label '" + token + "'", 1, column);
    } catch (const std::logic_error&) {
      throw ParseError("bad vertex label '" + token + "'", 1, column);
    }
    if (label < 1 || label > n) {
      throw ParseError("vertex " + token + " outside 1.." + std::to_string(n), 1, column);
    }
    s.insert(label - 1);
    token.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (token.empty()) column = i + 1;
      token += c;
    }
  }
  flush();
  return s;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds the " +
                        std::to_string(kMaxVertices) + "-vertex cap");
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw ContractViolation("edge endpoint out of range");
  if (u == v) throw ContractViolation("self-loops are not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= adj_[v];
    frontier = next - seen;
    seen |= next;
  }
  return seen == vertices();
}

bool Graph::is_regular(int k) const {
  return std::all_of(adj_.begin(), adj_.end(), [k](VertexSet s) { return s.size() == k; });
}

bool Graph::is_bipartite() const {
  std::vector<int> side(adj_.size(), -1);
  for (int root = 0; root < order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Graph::valid() const {
  const VertexSet all = vertices();
  for (int u = 0; u < order(); ++u) {
    if (adj_[u].contains(u) || !adj_[u].is_subset_of(all)) return false;
    for (int v : adj_[u]) {
      if (!adj_[v].contains(u)) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  const std::vector<int> kept = keep.to_vector();
  Graph out(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (g.adjacent(kept[i], kept[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map, VertexSet used, int v) {
  if (v == g.order()) return true;
  for (int image = 0; image < h.order(); ++image) {
    if (used.contains(image) || g.degree(v) != h.degree(image)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(map[u], image);
    if (!ok) continue;
    map[v] = image;
    used.insert(image);
    if (extend_isomorphism(g, h, map, used, v + 1)) return true;
    used.erase(image);
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(g.order()), dh(h.order());
  for (int v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(g.order(), -1);
  return extend_isomorphism(g, h, map, VertexSet{}, 0);
}

}  // namespace szf
