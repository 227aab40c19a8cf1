#include "szf/clique_cover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "szf/error.hpp"

namespace szf {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
  int pivot = -1;
  int best = -1;
  for (int u : p | x) {
    const int d = (g.neighbors(u) & p).size();
    if (d > best) {
      best = d;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

constexpr int kMaxCoverOrder = 32;
constexpr std::size_t kWords = (kMaxCoverOrder * (kMaxCoverOrder - 1) / 2 + 63) / 64;

struct EdgeSet {
  std::array<std::uint64_t, kWords> words{};

  void insert(int e) { words[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64); }
  bool contains(int e) const { return (words[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1U; }
  bool empty() const {
    return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
  }
  EdgeSet minus(const EdgeSet& o) const {
    EdgeSet r;
    for (std::size_t i = 0; i < kWords; ++i) r.words[i] = words[i] & ~o.words[i];
    return r;
  }
  int overlap(const EdgeSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < kWords; ++i) c += std::popcount(words[i] & o.words[i]);
    return c;
  }
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::vector<VertexSet> cliques) : g_(g), cliques_(std::move(cliques)) {
    edges_ = g.edges();
    for (VertexSet c : cliques_) {
      EdgeSet covered;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (c.contains(edges_[e].first) && c.contains(edges_[e].second)) covered.insert(static_cast<int>(e));
      }
      masks_.push_back(covered);
    }
    containing_.resize(edges_.size());
    for (std::size_t c = 0; c < cliques_.size(); ++c)
      for (std::size_t e = 0; e < edges_.size(); ++e)
        if (masks_[c].contains(static_cast<int>(e))) containing_[e].push_back(static_cast<int>(c));
  }

  std::vector<int> solve() {
    EdgeSet all;
    for (std::size_t e = 0; e < edges_.size(); ++e) all.insert(static_cast<int>(e));
    best_ = greedy(all);
    std::vector<int> chosen;
    dfs(all, chosen);
    return best_;
  }

 private:
  std::vector<int> greedy(EdgeSet uncovered) const {
    std::vector<int> picked;
    while (!uncovered.empty()) {
      int best = 0;
      int gain = -1;
      for (std::size_t c = 0; c < masks_.size(); ++c) {
        const int here = uncovered.overlap(masks_[c]);
        if (here > gain) {
          gain = here;
          best = static_cast<int>(c);
        }
      }
      picked.push_back(best);
      uncovered = uncovered.minus(masks_[static_cast<std::size_t>(best)]);
    }
    return picked;
  }

  // Uncovered edges no two of which fit in one clique each need their own clique.
  int lower_bound(const EdgeSet& uncovered) const {
    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (!uncovered.contains(static_cast<int>(e))) continue;
      bool independent = true;
      for (std::size_t f : kept) {
        const VertexSet span{edges_[e].first, edges_[e].second, edges_[f].first, edges_[f].second};
        if (is_clique(span)) {
          independent = false;
          break;
        }
      }
      if (independent) kept.push_back(e);
    }
    return static_cast<int>(kept.size());
  }

  bool is_clique(VertexSet s) const {
    for (int v : s)
      if (!(s - VertexSet::single(v)).is_subset_of(g_.neighbors(v))) return false;
    return true;
  }

  void dfs(const EdgeSet& uncovered, std::vector<int>& chosen) {
    if (uncovered.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + static_cast<std::size_t>(lower_bound(uncovered)) >= best_.size()) return;
    std::size_t branch_edge = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (uncovered.contains(static_cast<int>(e)) && containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        branch_edge = e;
      }
    }
    std::vector<int> options = containing_[branch_edge];
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return uncovered.overlap(masks_[static_cast<std::size_t>(a)]) >
             uncovered.overlap(masks_[static_cast<std::size_t>(b)]);
    });
    for (int c : options) {
      chosen.push_back(c);
      dfs(uncovered.minus(masks_[static_cast<std::size_t>(c)]), chosen);
      chosen.pop_back();
    }
  }

  const Graph& g_;
  std::vector<VertexSet> cliques_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<EdgeSet> masks_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> best_;
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique_cover(const Graph& g, const CliqueCover& cover) {
  for (VertexSet c : cover.cliques) {
    if (!c.is_subset_of(g.vertices())) return false;
    for (int v : c)
      if (!(c - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  for (auto [u, v] : g.edges()) {
    const bool covered = std::any_of(cover.cliques.begin(), cover.cliques.end(),
                                     [u = u, v = v](VertexSet c) { return c.contains(u) && c.contains(v); });
    if (!covered) return false;
  }
  return true;
}

CliqueCoverResult clique_cover_number(const Graph& g) {
  if (g.order() > kMaxCoverOrder) {
    throw CapacityError("clique_cover_number: graphs above " + std::to_string(kMaxCoverOrder) +
                        " vertices are not supported");
  }
  CliqueCoverResult result;
  if (g.edge_count() == 0) return result;
  std::vector<VertexSet> cliques;
  for (VertexSet c : maximal_cliques(g))
    if (c.size() >= 2) cliques.push_back(c);
  CoverSearch search(g, cliques);
  for (int c : search.solve()) result.cover.cliques.push_back(cliques[static_cast<std::size_t>(c)]);
  std::sort(result.cover.cliques.begin(), result.cover.cliques.end());
  result.cc = result.cover.size();
  return result;
}

}  // namespace szf
