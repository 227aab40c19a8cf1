#include "szf/game.hpp"

#include <algorithm>

#include "szf/error.hpp"

namespace szf {

char to_char(Clause c) {
  switch (c) {
    case Clause::A: return 'A';
    case Clause::B: return 'B';
    case Clause::C: return 'C';
    case Clause::D: return 'D';
  }
  return '?';
}

SignedGame::SignedGame(const SignPattern& p) : n_(p.order()), pattern_(p) {
  if (!p.has_fixed_periphery()) {
    throw ContractViolation("the signed game requires a pattern with fixed periphery");
  }
  plus_.reserve(static_cast<std::size_t>(n_));
  minus_.reserve(static_cast<std::size_t>(n_));
  for (int u = 0; u < n_; ++u) {
    plus_.push_back(p.row_plus(u));
    minus_.push_back(p.row_minus(u));
    strict_diag_.push_back(is_strict(p.at(u, u)));
    unknown_diag_.push_back(p.at(u, u) == Sign::unknown);
  }
}

std::optional<PivotView> SignedGame::view(const GameState& st, int u) const {
  if (!st.black.contains(u) && unknown_diag_[u]) return std::nullopt;
  const VertexSet white = VertexSet::full(n_) - st.black;
  // A black pivot is outside `white`; a white pivot is in its own row mask exactly when its
  // diagonal is strict.
  PivotView v;
  v.w = (plus_[u] | minus_[u]) & white;
  v.w_plus = v.w & ((st.plus & plus_[u]) | (st.minus & minus_[u]));
  v.w_minus = v.w & ((st.plus & minus_[u]) | (st.minus & plus_[u]));
  v.w_star = v.w - st.marked();
  return v;
}

namespace {

bool blackens_all(const PivotView& v) {
  return !v.w.empty() && (v.w.size() == 1 || v.w_plus == v.w || v.w_minus == v.w);
}

std::optional<Mark> clause_c_mark(const SignPattern& p, int u, const PivotView& v) {
  if (v.w_star.size() != 1) return std::nullopt;
  const bool has_plus = !v.w_plus.empty();
  const bool has_minus = !v.w_minus.empty();
  if (has_plus == has_minus) return std::nullopt;
  const Sign s = has_plus ? Sign::plus : Sign::minus;
  const int w = v.w_star.front();
  return Mark{w, multiply(p.at(u, w), invert(s))};
}

}  // namespace

std::vector<RuleInstance> SignedGame::applicable_instances(const GameState& st) const {
  std::vector<RuleInstance> out;
  const bool unmarked = st.marked().empty();
  for (int u = 0; u < n_; ++u) {
    if (const auto v = view(st, u)) {
      if (v->w.size() == 1) {
        out.push_back(RuleInstance::blackening(Clause::A, u, v->w));
      } else if (!v->w.empty() && (v->w_plus == v->w || v->w_minus == v->w)) {
        out.push_back(RuleInstance::blackening(Clause::B, u, v->w));
      }
      if (const auto m = clause_c_mark(pattern_, u, *v)) {
        out.push_back(RuleInstance::marking(Clause::C, u, m->vertex, m->sign));
      }
    }
    if (unmarked && !st.black.contains(u)) {
      out.push_back(RuleInstance::marking(Clause::D, u, u, Sign::plus));
    }
  }
  return out;
}

bool SignedGame::is_applicable(const GameState& st, const RuleInstance& inst) const {
  if (inst.pivot < 0 || inst.pivot >= n_) return false;
  const int u = inst.pivot;
  switch (inst.clause) {
    case Clause::A: {
      const auto v = view(st, u);
      return v && !inst.mark && v->w.size() == 1 && inst.blacken == v->w;
    }
    case Clause::B: {
      const auto v = view(st, u);
      return v && !inst.mark && !v->w.empty() && (v->w_plus == v->w || v->w_minus == v->w) &&
             inst.blacken == v->w;
    }
    case Clause::C: {
      const auto v = view(st, u);
      if (!v || !inst.mark || !inst.blacken.empty()) return false;
      const auto m = clause_c_mark(pattern_, u, *v);
      return m && *m == *inst.mark;
    }
    case Clause::D:
      return inst.blacken.empty() && inst.mark && inst.mark->vertex == u && inst.mark->sign == Sign::plus &&
             !st.black.contains(u) && st.marked().empty();
  }
  return false;
}

GameState SignedGame::apply_unchecked(GameState st, const RuleInstance& inst) {
  st.black |= inst.blacken;
  st.plus -= inst.blacken;
  st.minus -= inst.blacken;
  if (inst.mark) {
    const VertexSet v = VertexSet::single(inst.mark->vertex);
    if (inst.mark->sign == Sign::plus) {
      st.plus |= v;
      st.minus -= v;
    } else {
      st.minus |= v;
      st.plus -= v;
    }
  }
  return st;
}

GameState SignedGame::apply(const GameState& st, const RuleInstance& inst) const {
  if (!is_applicable(st, inst)) {
    throw ContractViolation(std::string("clause ") + to_char(inst.clause) + " is not applicable at pivot " +
                            std::to_string(inst.pivot + 1));
  }
  return apply_unchecked(st, inst);
}

GameState SignedGame::eager_closure(GameState st, std::vector<RuleInstance>* log) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n_; ++u) {
      const auto v = view(st, u);
      if (!v || !blackens_all(*v)) continue;
      const RuleInstance inst = RuleInstance::blackening(v->w.size() == 1 ? Clause::A : Clause::B, u, v->w);
      if (log) log->push_back(inst);
      st = apply_unchecked(st, inst);
      changed = true;
    }
  }
  return st;
}

std::vector<RuleInstance> SignedGame::marking_moves(const GameState& st) const {
  std::vector<RuleInstance> out;
  std::vector<Mark> effects;
  for (int u = 0; u < n_; ++u) {
    const auto v = view(st, u);
    if (!v) continue;
    if (const auto m = clause_c_mark(pattern_, u, *v)) {
      if (std::find(effects.begin(), effects.end(), *m) != effects.end()) continue;
      effects.push_back(*m);
      out.push_back(RuleInstance::marking(Clause::C, u, m->vertex, m->sign));
    }
  }
  if (st.marked().empty()) {
    for (int u : VertexSet::full(n_) - st.black) {
      out.push_back(RuleInstance::marking(Clause::D, u, u, Sign::plus));
    }
  }
  return out;
}

VertexSet classical_derived(const Graph& g, VertexSet initial, std::vector<RuleInstance>& log) {
  VertexSet black = initial & g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u : black) {
      const VertexSet white = g.neighbors(u) - black;
      if (white.size() == 1) {
        log.push_back(RuleInstance::blackening(Clause::A, u, white));
        black |= white;
        changed = true;
      }
    }
  }
  return black;
}

VertexSet classical_derived(const Graph& g, VertexSet initial) {
  VertexSet black = initial & g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u : black) {
      const VertexSet white = g.neighbors(u) - black;
      if (white.size() == 1) {
        black |= white;
        changed = true;
      }
    }
  }
  return black;
}

std::vector<RuleInstance> applicable_instances(const SignPattern& p, const GameState& st) {
  return SignedGame(p).applicable_instances(st);
}

GameState apply_instance(const SignPattern& p, const GameState& st, const RuleInstance& inst) {
  return SignedGame(p).apply(st, inst);
}

GameState eager_closure(const SignPattern& p, const GameState& st) { return SignedGame(p).eager_closure(st); }

bool verify_transcript(const SignPattern& p, const Transcript& t) {
  if (!p.has_fixed_periphery()) return false;
  const SignedGame game(p);
  if (!t.initial.is_subset_of(VertexSet::full(game.order()))) return false;
  GameState st = GameState::start(t.initial);
  for (const RuleInstance& inst : t.moves) {
    if (!game.is_applicable(st, inst)) return false;
    st = SignedGame::apply_unchecked(st, inst);
  }
  return st.all_black(game.order());
}

std::vector<GameState> replay_states(const Transcript& t) {
  std::vector<GameState> states{GameState::start(t.initial)};
  for (const RuleInstance& inst : t.moves) states.push_back(SignedGame::apply_unchecked(states.back(), inst));
  return states;
}

}  // namespace szf
