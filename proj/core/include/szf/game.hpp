#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "szf/graph.hpp"
#include "szf/sign_pattern.hpp"
#include "szf/vertex_set.hpp"

namespace szf {

enum class Marker : std::uint8_t { none, plus, minus };

/// One position of the signed game: the black set plus +/- markers on white vertices.
/// Markers live in two disjoint bitsets that never intersect `black`.
struct GameState {
  VertexSet black;
  VertexSet plus;
  VertexSet minus;

  static GameState start(VertexSet initial) { return GameState{initial, {}, {}}; }

  VertexSet marked() const { return plus | minus; }
  Marker marker(int v) const {
    if (plus.contains(v)) return Marker::plus;
    if (minus.contains(v)) return Marker::minus;
    return Marker::none;
  }
  bool all_black(int n) const { return black == VertexSet::full(n); }
  bool consistent() const {
    return !plus.intersects(minus) && !black.intersects(plus | minus);
  }

  bool operator==(const GameState&) const = default;
};

struct GameStateHash {
  std::size_t operator()(const GameState& s) const noexcept {
    std::uint64_t h = s.black.bits() * 0x9E3779B97F4A7C15ULL;
    h ^= (s.plus.bits() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= (s.minus.bits() + 0x85157AF5ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h);
  }
};

enum class Clause : std::uint8_t { A, B, C, D };
char to_char(Clause c);

struct Mark {
  int vertex = 0;
  Sign sign = Sign::plus;
  bool operator==(const Mark&) const = default;
};

/// One application of the signed rule at `pivot`. Clauses A and B blacken a set,
/// C and D place a single marker.
struct RuleInstance {
  Clause clause = Clause::A;
  int pivot = 0;
  VertexSet blacken;
  std::optional<Mark> mark;

  static RuleInstance blackening(Clause c, int pivot, VertexSet targets) {
    return RuleInstance{c, pivot, targets, std::nullopt};
  }
  static RuleInstance marking(Clause c, int pivot, int v, Sign s) {
    return RuleInstance{c, pivot, VertexSet{}, Mark{v, s}};
  }

  bool operator==(const RuleInstance&) const = default;
};

/// Certificate: an initial black set and the moves that finish the game from it.
struct Transcript {
  VertexSet initial;
  std::vector<RuleInstance> moves;

  bool operator==(const Transcript&) const = default;
};

/// The sets the signed rule inspects at one pivot.
struct PivotView {
  VertexSet w;       ///< white in-neighbours, plus the pivot if white with a strict diagonal
  VertexSet w_plus;  ///< marked members whose marker equals P_uw
  VertexSet w_minus; ///< marked members whose marker differs from P_uw
  VertexSet w_star;  ///< unmarked members
};

/// Rule engine for one sign pattern. Construction rejects patterns without fixed
/// periphery. Cheap to copy; holds per-row sign masks.
class SignedGame {
 public:
  explicit SignedGame(const SignPattern& p);

  int order() const { return n_; }
  const SignPattern& pattern() const { return pattern_; }

  /// nullopt when u is white with a ? diagonal (not a legal pivot).
  std::optional<PivotView> view(const GameState& st, int u) const;

  /// All applicable instances in pivot order; for each pivot A precedes B, identical
  /// effects at the same pivot are reported once (A wins over B).
  std::vector<RuleInstance> applicable_instances(const GameState& st) const;

  bool is_applicable(const GameState& st, const RuleInstance& inst) const;

  /// Applies `inst` after checking applicability. Throws ContractViolation otherwise.
  GameState apply(const GameState& st, const RuleInstance& inst) const;
  /// Applies the effect without checking the rule.
  static GameState apply_unchecked(GameState st, const RuleInstance& inst);

  /// Applies clauses A and B until none is applicable. Moves are appended to `log`
  /// when given. The resulting state does not depend on the order of application.
  GameState eager_closure(GameState st, std::vector<RuleInstance>* log = nullptr) const;

  /// Clause-C and clause-D instances, deduplicated by effect, in pivot order.
  std::vector<RuleInstance> marking_moves(const GameState& st) const;

 private:
  int n_ = 0;
  SignPattern pattern_;
  std::vector<VertexSet> plus_;   // row masks, diagonal included
  std::vector<VertexSet> minus_;
  std::vector<bool> strict_diag_;
  std::vector<bool> unknown_diag_;
};

/// Classical closure: repeatedly blacken the lone white neighbour of a black vertex.
VertexSet classical_derived(const Graph& g, VertexSet initial);

/// Same closure, also recording each force as a clause-A move on z_pattern_of_graph(g).
VertexSet classical_derived(const Graph& g, VertexSet initial, std::vector<RuleInstance>& log);

// Free-function forms of the engine operations.
std::vector<RuleInstance> applicable_instances(const SignPattern& p, const GameState& st);
GameState apply_instance(const SignPattern& p, const GameState& st, const RuleInstance& inst);
GameState eager_closure(const SignPattern& p, const GameState& st);

/// Replays `t` and returns true iff every move is applicable when played and the final
/// state is all black. Never throws for well-formed input.
bool verify_transcript(const SignPattern& p, const Transcript& t);

/// States B^k/M_k after each move (index 0 is the initial state). Moves are applied
/// unchecked.
std::vector<GameState> replay_states(const Transcript& t);

}  // namespace szf
