#include "szf/search.hpp"

#include <algorithm>
#include <random>

namespace szf {

namespace {

class SignedSearch {
 public:
  SignedSearch(const SignedGame& game, const ForcingSearchOptions& options, RefutedStates& memo)
      : game_(game), options_(options), memo_(memo) {
    if (options.shuffle_seed) rng_.seed(*options.shuffle_seed);
  }

  bool run(const GameState& st, std::vector<RuleInstance>& moves) {
    if (options_.deadline && (nodes_++ & 0x3FF) == 0) options_.deadline->check();
    const std::size_t rollback = moves.size();
    const GameState closed = game_.eager_closure(st, &moves);
    if (closed.all_black(game_.order())) return true;
    if (memo_.contains(closed)) {
      moves.resize(rollback);
      return false;
    }
    std::vector<RuleInstance> branches = game_.marking_moves(closed);
    if (options_.shuffle_seed) std::shuffle(branches.begin(), branches.end(), rng_);
    for (const RuleInstance& inst : branches) {
      const std::size_t before = moves.size();
      moves.push_back(inst);
      if (run(SignedGame::apply_unchecked(closed, inst), moves)) return true;
      moves.resize(before);
    }
    // Only refuted states are recorded, so the memo stays valid across initial sets.
    memo_.insert(closed);
    moves.resize(rollback);
    return false;
  }

 private:
  const SignedGame& game_;
  const ForcingSearchOptions& options_;
  RefutedStates& memo_;
  std::mt19937_64 rng_;
  std::uint64_t nodes_ = 0;
};

class BranchedSearch {
 public:
  BranchedSearch(const SignedGame& game, int max_splits, const ForcingSearchOptions& options)
      : game_(game), options_(options), refuted_(static_cast<std::size_t>(max_splits) + 1) {
    if (options.shuffle_seed) rng_.seed(*options.shuffle_seed);
  }

  bool run(const GameState& st, int budget, BranchNode& node) {
    if (options_.deadline && (nodes_++ & 0x3FF) == 0) options_.deadline->check();
    const std::size_t rollback = node.moves.size();
    const GameState closed = game_.eager_closure(st, &node.moves);
    if (closed.all_black(game_.order())) return true;
    // Refutation with a larger budget implies refutation with this one.
    for (std::size_t b = static_cast<std::size_t>(budget); b < refuted_.size(); ++b) {
      if (refuted_[b].contains(closed)) {
        node.moves.resize(rollback);
        return false;
      }
    }

    std::vector<RuleInstance> branches = game_.marking_moves(closed);
    if (options_.shuffle_seed) std::shuffle(branches.begin(), branches.end(), rng_);
    for (const RuleInstance& inst : branches) {
      const std::size_t before = node.moves.size();
      node.moves.push_back(inst);
      if (run(SignedGame::apply_unchecked(closed, inst), budget, node)) return true;
      node.moves.resize(before);
      node.split_vertex = -1;
      node.children.clear();
    }

    if (budget > 0) {
      const VertexSet candidates = VertexSet::full(game_.order()) - closed.black - closed.marked();
      for (int v : candidates) {
        std::vector<BranchNode> children(3);
        bool all = true;
        for (int k = 0; k < 3 && all; ++k) all = run(split_child(closed, v, k), budget - 1, children[k]);
        if (all) {
          node.split_vertex = v;
          node.children = std::move(children);
          return true;
        }
      }
    }

    refuted_[static_cast<std::size_t>(budget)].insert(closed);
    node.moves.resize(rollback);
    return false;
  }

  // Child k of a split on v: 0 marks v with +, 1 marks it with -, 2 blackens it.
  static GameState split_child(GameState st, int v, int k) {
    if (k == 0) st.plus.insert(v);
    if (k == 1) st.minus.insert(v);
    if (k == 2) st.black.insert(v);
    return st;
  }

 private:
  const SignedGame& game_;
  const ForcingSearchOptions& options_;
  std::vector<RefutedStates> refuted_;
  std::mt19937_64 rng_;
  std::uint64_t nodes_ = 0;
};

int depth_of(const BranchNode& node) {
  int deepest = 0;
  for (const BranchNode& child : node.children) deepest = std::max(deepest, depth_of(child));
  return node.is_split() ? deepest + 1 : deepest;
}

bool verify_node(const SignedGame& game, GameState st, const BranchNode& node, int splits_left) {
  for (const RuleInstance& inst : node.moves) {
    if (!game.is_applicable(st, inst)) return false;
    st = SignedGame::apply_unchecked(st, inst);
  }
  if (!node.is_split()) return node.children.empty() && st.all_black(game.order());
  const int v = node.split_vertex;
  if (splits_left <= 0 || v >= game.order() || node.children.size() != 3) return false;
  if (st.black.contains(v) || st.marked().contains(v)) return false;
  for (int k = 0; k < 3; ++k) {
    if (!verify_node(game, BranchedSearch::split_child(st, v, k), node.children[static_cast<std::size_t>(k)],
                     splits_left - 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Transcript> signed_forces(const SignedGame& game, VertexSet initial,
                                        const ForcingSearchOptions& options, RefutedStates* memo) {
  RefutedStates local;
  SignedSearch search(game, options, memo ? *memo : local);
  Transcript t{initial & VertexSet::full(game.order()), {}};
  if (!search.run(GameState::start(t.initial), t.moves)) return std::nullopt;
  return t;
}

std::optional<Transcript> signed_forces(const SignPattern& p, VertexSet initial) {
  return signed_forces(SignedGame(p), initial);
}

int BranchCertificate::split_depth() const { return depth_of(root); }

std::optional<BranchCertificate> branched_forces(const SignedGame& game, VertexSet initial, int max_splits,
                                                 const ForcingSearchOptions& options) {
  if (max_splits < 0) throw ContractViolation("branched_forces: negative split budget");
  BranchedSearch search(game, max_splits, options);
  BranchCertificate cert{initial & VertexSet::full(game.order()), {}};
  if (!search.run(GameState::start(cert.initial), max_splits, cert.root)) return std::nullopt;
  return cert;
}

std::optional<BranchCertificate> branched_forces(const SignPattern& p, VertexSet initial, int max_splits) {
  return branched_forces(SignedGame(p), initial, max_splits);
}

bool verify_branch_certificate(const SignPattern& p, const BranchCertificate& cert, int max_splits) {
  if (!p.has_fixed_periphery()) return false;
  const SignedGame game(p);
  if (!cert.initial.is_subset_of(VertexSet::full(game.order()))) return false;
  return verify_node(game, GameState::start(cert.initial), cert.root, max_splits);
}

}  // namespace szf
