// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "szf/bounds.hpp"
#include "szf/catalogue.hpp"
#include "szf/clique_cover.hpp"
#include "szf/exact.hpp"
#include "szf/generators.hpp"
#include "szf/graph6.hpp"
#include "szf/minimize.hpp"
#include "szf/oracle.hpp"
#include "szf/search.hpp"
#include "test_oracles.hpp"

using namespace szf;
using szf::testing::data_path;

namespace {

/// Collects the checks of one criterion and the notes printed after its verdict line.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      notes_.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return passed_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool passed_ = true;
  std::vector<std::string> notes_;
};

/// (pattern, forcing set) pairs gathered by criteria 1 to 6 for the kernel trials.
struct Witness {
  std::string label;
  SignPattern pattern;
  VertexSet set;
};
std::vector<Witness> g_witnesses;

std::string set_text(VertexSet s) { return "{" + format_one_based(s) + "}"; }

// Finishes a game from an arbitrary state with the signed rule, recording the moves.
bool finish_from(const SignedGame& game, const GameState& st, std::vector<RuleInstance>& moves) {
  std::vector<RuleInstance> local;
  const GameState closed = game.eager_closure(st, &local);
  if (closed.all_black(game.order())) {
    moves.insert(moves.end(), local.begin(), local.end());
    return true;
  }
  for (const RuleInstance& m : game.marking_moves(closed)) {
    std::vector<RuleInstance> tail = local;
    tail.push_back(m);
    if (finish_from(game, game.apply(closed, m), tail)) {
      moves.insert(moves.end(), tail.begin(), tail.end());
      return true;
    }
  }
  return false;
}

void hadamard(Criterion& c) {
  const SignPattern h = hadamard_pattern();
  const auto zs = signed_zero_forcing_number(h);
  c.expect(zs.value == 2, "Z_signed(Hadamard) = 2");
  c.expect(verify_transcript(h, std::get<Transcript>(zs.certificate)), "signed transcript verifies");
  c.note("Z_signed = " + std::to_string(zs.value) + ", witness " + set_text(zs.witness));
  g_witnesses.push_back({"Hadamard", h, zs.witness});

  const auto zb = branched_number(h, 1);
  c.expect(zb.value == 1, "Z_branched(Hadamard) = 1 with one split");
  const auto& found = std::get<BranchCertificate>(zb.certificate);
  c.expect(verify_branch_certificate(h, found, 1), "branched certificate verifies");
  c.expect(!szf::testing::naive_branched_forces(h, VertexSet{}, 1), "empty set is not enough with one split");

  // The hand analysis: black 1, mark 2 with +, then split on vertex 3.
  const SignedGame game(h);
  BranchCertificate cert;
  cert.initial = VertexSet{0};
  cert.root.moves = {RuleInstance::marking(Clause::D, 1, 1, Sign::plus)};
  cert.root.split_vertex = 2;
  const GameState split = game.apply(GameState::start(cert.initial), cert.root.moves[0]);
  const char* names[] = {"3 marked +", "3 marked -", "3 black"};
  for (int k = 0; k < 3; ++k) {
    GameState child = split;
    if (k == 0) child.plus.insert(2);
    if (k == 1) child.minus.insert(2);
    if (k == 2) child.black.insert(2);
    BranchNode node;
    const bool ok = finish_from(game, child, node.moves);
    c.expect(ok, std::string("case ") + names[k] + " finishes");
    c.note(std::string("case ") + names[k] + ": " + std::to_string(node.moves.size()) + " moves");
    cert.root.children.push_back(std::move(node));
  }
  c.expect(verify_branch_certificate(h, cert, 1), "three-case certificate verifies");
}

void q3(Criterion& c) {
  const Graph g = hypercube(3);
  const SignPattern p = z_pattern_of_graph(g);
  const int z = zero_forcing_number(g).value;
  const auto zs = signed_zero_forcing_number(p);
  c.expect(z == 4, "Z(Q3) = 4");
  c.expect(zs.value == 3, "Z_signed(Q3) = 3");
  c.note("Z = " + std::to_string(z) + ", Z_signed = " + std::to_string(zs.value) + ", witness " +
         set_text(zs.witness));

  // S = {1,3,7}, seed 5, then the forced marks and blackenings of the worked play.
  Transcript t{VertexSet{0, 2, 6},
               {RuleInstance::marking(Clause::D, 4, 4, Sign::plus),
                RuleInstance::marking(Clause::C, 6, 7, Sign::minus),
                RuleInstance::marking(Clause::C, 0, 1, Sign::minus),
                RuleInstance::blackening(Clause::A, 2, VertexSet{3}),
                RuleInstance::blackening(Clause::B, 3, VertexSet{1, 7})}};
  GameState st = GameState::start(t.initial);
  for (const auto& m : t.moves) st = SignedGame::apply_unchecked(st, m);
  SignedGame(p).eager_closure(st, &t.moves);
  c.expect(verify_transcript(p, t), "transcript from {1,3,7} with seed 5 verifies");
  c.note("transcript from {1,3,7}: " + std::to_string(t.moves.size()) + " moves");
  g_witnesses.push_back({"Q3 minimum", p, zs.witness});
  g_witnesses.push_back({"Q3 {1,3,7}", p, t.initial});
}

void q4(Criterion& c) {
  const Graph q3g = hypercube(3);
  const VertexSet s3 = signed_zero_forcing_number(z_pattern_of_graph(q3g)).witness;
  const Graph k2 = complete_graph(2);
  c.expect(cartesian_product(q3g, k2) == hypercube(4), "Q3 x K2 is Q4 in the product labelling");
  const VertexSet s4 = product_forcing_set(s3, q3g, k2);
  const SignPattern p = z_pattern_of_graph(hypercube(4));
  const auto t = signed_forces(p, s4);
  c.expect(s4.size() == 6, "product set has 6 = 3 * 2^(4-3) vertices");
  c.expect(t.has_value() && verify_transcript(p, *t), "product set forces Q4");
  c.note("product set " + set_text(s4) + " from " + set_text(s3));
  g_witnesses.push_back({"Q4 product", p, s4});
}

void census(Criterion& c) {
  ScanOptions opts;
  opts.filter = ScanFilter::parse("signed<classical");
  const Graph lk4 = line_graph(complete_graph(4)).graph;
  for (int n = 1; n <= 6; ++n) {
    std::ifstream in(data_path("catalogue/graphs" + std::to_string(n) + ".g6"));
    std::vector<ScanRecord> matches;
    const ScanSummary s = scan_catalogue(in, opts, [&](const ScanRecord& r) { matches.push_back(r); });
    c.expect(s.errors == 0 && s.timeouts == 0, "clean scan on n = " + std::to_string(n));
    if (n <= 5) {
      c.expect(matches.empty(), "no matches on n = " + std::to_string(n));
      continue;
    }
    c.expect(s.total == 156, "156 graphs on 6 vertices");
    c.expect(matches.size() == 2, "exactly two matches on 6 vertices");
    int isomorphic = 0;
    for (const auto& r : matches) {
      c.expect(r.z_signed == 3 && r.z == 4, "match " + r.graph6 + " has (Z_signed, Z) = (3, 4)");
      const Graph g = parse_graph6(r.graph6);
      if (is_isomorphic(g, lk4)) ++isomorphic;
      c.note("match " + r.graph6 + ": Z = " + std::to_string(r.z) + ", Z_signed = " + std::to_string(r.z_signed) +
             ", witness " + set_text(r.witness_signed) + (is_isomorphic(g, lk4) ? " (L(K4))" : ""));
      g_witnesses.push_back({"census " + r.graph6, z_pattern_of_graph(g), r.witness_signed});
    }
    c.expect(isomorphic == 1, "one match is L(K4)");
    c.note("6 vertices: " + std::to_string(s.total) + " graphs, " + std::to_string(s.connected) + " connected");
  }
}

void lk5(Criterion& c) {
  const Graph g = line_graph(complete_graph(5)).graph;
  const SignPattern p = z_pattern_of_graph(g);
  MinimizeOptions opts;
  opts.prune = true;
  const int z = zero_forcing_number(g).value;
  const auto zs = signed_zero_forcing_number(p, opts);
  c.expect(z == 7, "Z(L(K5)) = 7");
  c.expect(z == known_formula(Formula::line_graph_of_clique, 5), "Z(L(K5)) matches C(5,2) - 3");
  c.expect(zs.value == 6, "Z_signed(L(K5)) = 6");
  c.expect(verify_transcript(p, std::get<Transcript>(zs.certificate)), "transcript verifies");
  c.note("Z = " + std::to_string(z) + ", Z_signed = " + std::to_string(zs.value) + " after " +
         std::to_string(zs.subsets_tested) + " subsets");
  g_witnesses.push_back({"L(K5)", p, zs.witness});
}

void lk6(Criterion& c) {
  const Graph g = line_graph(complete_graph(6)).graph;
  const SignPattern p = z_pattern_of_graph(g);
  const VertexSet s = lkn_forcing_set(6);
  const auto t = signed_forces(p, s);
  c.expect(s.size() == 9, "|S| = 9");
  c.expect(t.has_value() && verify_transcript(p, *t), "explicit set forces L(K6)");

  const auto cc = clique_cover_number(g);
  c.expect(cc.cc == 6, "cc(L(K6)) = 6");
  const ExactMatrix w = witness_matrix(g, cc.cover);
  const auto rank = exact_rank(w);
  bool same_graph = true;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v) same_graph = same_graph && ((sgn(w.at(u, v)) != 0) == g.adjacent(u, v));
  c.expect(same_graph, "witness matrix has graph L(K6)");
  c.expect(rank.rank <= 6 && rank.nullity >= 9, "witness rank <= 6, nullity >= 9");
  c.note("sandwich: n - cc = " + std::to_string(g.order() - cc.cc) + " <= Z_signed <= |S| = " +
         std::to_string(s.size()) + "; witness rank " + std::to_string(rank.rank));
  g_witnesses.push_back({"L(K6)", p, s});

  const Deadline deadline = Deadline::after_seconds(120);
  MinimizeOptions opts;
  opts.prune = true;
  opts.deadline = &deadline;
  try {
    const auto zs = signed_zero_forcing_number(p, opts);
    c.expect(zs.value == 9, "full minimisation gives 9");
    c.note("full minimisation: Z_signed = " + std::to_string(zs.value) + " in " +
           std::to_string(zs.elapsed.count()) + " ms");
  } catch (const Timeout&) {
    c.note("full minimisation exceeded 120 s; the sandwich certifies 9");
  }
}

void trees(Criterion& c) {
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Graph t = random_tree(n, seed);
    const int z = zero_forcing_number(t).value;
    const int zs = signed_zero_forcing_number(z_pattern_of_graph(t)).value;
    if (z != zs) {
      ++mismatches;
      c.note("seed " + std::to_string(seed) + ": " + serialize_graph6(t) + " Z = " + std::to_string(z) +
             ", Z_signed = " + std::to_string(zs));
    }
  }
  c.expect(mismatches == 0, "Z_signed = Z on 50 random trees");
  c.note("50 trees with 2 <= n <= 10, " + std::to_string(mismatches) + " mismatches");
}

void kernel_trials(Criterion& c) {
  c.expect(!g_witnesses.empty(), "witnesses were collected");
  for (const auto& w : g_witnesses) {
    const MainTheoremReport r = verify_main_theorem(w.pattern, w.set, 100, 2024);
    c.expect(r.vanishing_failures == 0 && r.marker_failures == 0, w.label + " passes all trials");
    c.note(w.label + " " + set_text(w.set) + ": " + std::to_string(r.failures()) + " failures / " +
           std::to_string(r.trials) + " trials");
  }
}

void cover_bound(Criterion& c) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng());
    const std::string id = serialize_graph6(g);
    const auto cc = clique_cover_number(g);
    ExactMatrix w = witness_matrix(g, cc.cover);
    bool same_graph = true;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) same_graph = same_graph && ((sgn(w.at(u, v)) != 0) == g.adjacent(u, v));
    c.expect(same_graph, id + ": witness graph is G");
    int isolated = 0;
    for (int u = 0; u < n; ++u) isolated += g.degree(u) == 0;
    c.expect(rank_of(w) <= cc.cc + isolated, id + ": rank <= cover size");
    // The singleton blocks of isolated vertices may be dropped: their diagonal is free.
    for (int u = 0; u < n; ++u)
      if (g.degree(u) == 0) w.at(u, u) = 0;
    c.expect(rank_of(w) <= cc.cc, id + ": rank <= cc(G)");

    const SignPattern p = z_pattern_of_graph(g);
    const auto best = nullity_lower_bound_search(p, 10, static_cast<std::uint64_t>(i));
    const int zs = signed_zero_forcing_number(p).value;
    c.expect(n - cc.cc <= best.best_nullity, id + ": n - cc <= best nullity");
    c.expect(best.best_nullity <= zs, id + ": best nullity <= Z_signed");
    ++checked;
  }
  c.note(std::to_string(checked) + " random graphs with 3 <= n <= 9");
}

void referee_minor(Criterion& c) {
  // Unit Z-form of K6 minus the matching {1,2}, {3,4}, {5,6}, with zero diagonal.
  std::vector<std::vector<long>> rows(6, std::vector<long>(6, 1));
  for (int i = 0; i < 6; ++i) rows[i][i] = 0;
  for (auto [a, b] : {std::pair{0, 1}, {2, 3}, {4, 5}}) rows[a][b] = rows[b][a] = 0;
  const ExactMatrix m = ExactMatrix::from_integers(rows);
  const mpq_class det = determinant(m.submatrix({0, 2, 4}, {1, 3, 5}));
  c.expect(det == 2, "minor on rows {1,3,5}, columns {2,4,6} equals 2");
  c.expect(rank_of(m) >= 3, "rank >= 3");
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (rows[u][v] != 0) g.add_edge(u, v);
  const int zs = signed_zero_forcing_number(z_pattern_of_graph(g)).value;
  c.expect(zs == 3, "Z_signed of that graph is 3");
  c.note("minor = " + det.get_str() + ", Z_signed = " + std::to_string(zs) + ", so M_Z = 3");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "Hadamard pattern: Z_signed = 2, branched number 1", hadamard},
      {2, "Q3: Z = 4, Z_signed = 3, play from {1,3,7}", q3},
      {3, "Q4: product forcing set of size 6", q4},
      {4, "six-vertex census", census},
      {5, "L(K5): Z = 7, Z_signed = 6", lk5},
      {6, "L(K6): explicit set, clique cover sandwich", lk6},
      {7, "trees: Z_signed = Z", trees},
      {8, "kernel trials on collected witnesses", kernel_trials},
      {9, "clique cover witness matrices", cover_bound},
      {10, "unit Z-form minor", referee_minor},
  };

  int failures = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.passed() ? "PASS" : "FAIL") << "  criterion " << e.id << ": " << e.title << " (" << ms
              << " ms)\n";
    for (const auto& n : c.notes()) std::cout << "      " << n << '\n';
    std::cout.flush();
    failures += c.passed() ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
