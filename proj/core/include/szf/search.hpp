#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "szf/deadline.hpp"
#include "szf/game.hpp"

namespace szf {

struct ForcingSearchOptions {
  const Deadline* deadline = nullptr;
  /// When set, the order in which marking moves are tried is shuffled with this seed.
  /// The verdict must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Refuted states, keyed exactly by (black, plus, minus). Reusable across initial sets of
/// the same pattern, since refutation is a property of the state alone.
using RefutedStates = std::unordered_set<GameState, GameStateHash>;

/// Decides whether some play of the signed rule from `initial` blackens every vertex.
/// Between branch points clauses A and B are applied eagerly; every clause-C mark and,
/// while no white vertex is marked, every clause-D seed is a branch. Returns a replayable
/// transcript on success.
std::optional<Transcript> signed_forces(const SignedGame& game, VertexSet initial,
                                        const ForcingSearchOptions& options = {},
                                        RefutedStates* memo = nullptr);
std::optional<Transcript> signed_forces(const SignPattern& p, VertexSet initial);

/// A node of a branched strategy: normal moves, then optionally a three-way split on an
/// unmarked white vertex with children (marked +, marked -, black) in that order.
struct BranchNode {
  std::vector<RuleInstance> moves;
  int split_vertex = -1;
  std::vector<BranchNode> children;

  bool is_split() const { return split_vertex >= 0; }
  bool operator==(const BranchNode&) const = default;
};

struct BranchCertificate {
  VertexSet initial;
  BranchNode root;

  /// Deepest nesting of splits along any root-to-leaf path.
  int split_depth() const;
  bool operator==(const BranchCertificate&) const = default;
};

/// Like signed_forces, but a strategy may additionally case-split on an unmarked white
/// vertex, at most `max_splits` deep along any branch; every child must finish.
std::optional<BranchCertificate> branched_forces(const SignedGame& game, VertexSet initial,
                                                 int max_splits,
                                                 const ForcingSearchOptions& options = {});
std::optional<BranchCertificate> branched_forces(const SignPattern& p, VertexSet initial,
                                                 int max_splits);

/// Replays the strategy tree. Every move must be applicable and every split must be on an
/// unmarked white vertex within the `max_splits` depth. Leaves must end all black.
bool verify_branch_certificate(const SignPattern& p, const BranchCertificate& cert, int max_splits);

}  // namespace szf
