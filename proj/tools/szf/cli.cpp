#include "szf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "szf/bounds.hpp"
#include "szf/catalogue.hpp"
#include "szf/certificate_io.hpp"
#include "szf/clique_cover.hpp"
#include "szf/deadline.hpp"
#include "szf/error.hpp"
#include "szf/generators.hpp"
#include "szf/graph6.hpp"
#include "szf/minimize.hpp"
#include "szf/oracle.hpp"
#include "szf/parallel.hpp"

namespace szf {
namespace {

constexpr int kSuccess = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

/// Flag combinations CLI11 cannot express; reported like any other usage error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First non-blank record of a graph6 file.
Graph read_graph(const std::string& path) {
  std::istringstream in(read_text(path));
  std::optional<Graph> graph;
  for_each_graph6_line(in, [&](std::size_t line, const std::string& text) {
    if (graph) return;
    try {
      graph = parse_graph6(text);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), line);
    }
  });
  if (!graph) throw ParseError(path + ": no graph6 record found", 1, 1);
  return *graph;
}

SignPattern read_pattern(const std::string& path) { return parse_pattern(read_text(path)); }

nlohmann::ordered_json one_based(VertexSet s) {
  auto arr = nlohmann::ordered_json::array();
  for (int v : s) arr.push_back(v + 1);
  return arr;
}

struct SolveFlags {
  std::string input;
  std::string mode = "signed";
  int max_splits = 1;
  bool json = false;
  int threads = 1;
  double timeout = 0.0;
  bool prune = false;
  std::string dot_path;
};

void add_solve_flags(CLI::App& cmd, SolveFlags& f) {
  cmd.add_option("--input", f.input, "input file ('-' for stdin)")->required();
  cmd.add_option("--mode", f.mode, "classical, signed or branched")
      ->check(CLI::IsMember({"classical", "signed", "branched"}))
      ->capture_default_str();
  cmd.add_option("--max-splits", f.max_splits, "nested case splits allowed in branched mode")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_flag("--json", f.json, "print one JSON object instead of text");
  cmd.add_option("--threads", f.threads, "worker threads (default: SZF_THREADS or 1)")->check(CLI::PositiveNumber);
  cmd.add_option("--timeout-per-graph", f.timeout, "wall-clock limit in seconds (0: none)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_flag("--prune", f.prune, "share refuted game states across candidate sets");
  cmd.add_option("--emit-dot", f.dot_path, "write the transcript as Graphviz DOT to this path");
}

int solve(const SignPattern& p, const Graph* graph, const SolveFlags& f, std::ostream& out) {
  const GameMode mode = game_mode_from_name(f.mode);
  if (!f.dot_path.empty() && mode == GameMode::branched)
    throw UsageError("--emit-dot needs a transcript; use --mode classical or signed");

  const Deadline deadline = Deadline::after_seconds(f.timeout);
  MinimizeOptions opts;
  opts.threads = f.threads;
  opts.prune = f.prune;
  opts.deadline = &deadline;

  // The classical game always runs on the underlying graph.
  const Graph underlying = graph ? *graph : graph_of_pattern(p);
  ForcingNumberResult r;
  const char* label = "Z";
  switch (mode) {
    case GameMode::classical:
      r = zero_forcing_number(underlying, opts);
      break;
    case GameMode::signed_game:
      r = signed_zero_forcing_number(p, opts);
      label = "Z_signed";
      break;
    case GameMode::branched:
      r = branched_number(p, f.max_splits, opts);
      label = "Z_branched";
      break;
  }

  nlohmann::json cert;
  std::visit([&](const auto& c) { cert = to_json(c); }, r.certificate);

  if (!f.dot_path.empty()) {
    const SignPattern& game_pattern = mode == GameMode::classical ? z_pattern_of_graph(underlying) : p;
    std::ofstream dot(f.dot_path);
    if (!dot) throw Error("cannot write '" + f.dot_path + "'");
    dot << transcript_to_dot(game_pattern, std::get<Transcript>(r.certificate));
  }

  if (f.json) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(mode);
    j["n"] = p.order();
    if (mode == GameMode::branched) j["max_splits"] = f.max_splits;
    j[label] = r.value;
    j["witness"] = one_based(r.witness);
    j["certificate"] = cert;
    out << j.dump() << '\n';
  } else {
    out << label << " = " << r.value << '\n' << cert.dump() << '\n';
  }
  return kSuccess;
}

struct ScanFlags {
  std::string input;
  std::string mode = "signed";
  int max_splits = 1;
  std::string filter;
  bool json = false;
  int threads = 1;
  double timeout = 60.0;
  bool strict = false;
  bool prune = false;
};

int scan(const ScanFlags& f, std::ostream& out, std::ostream& err) {
  ScanOptions opts;
  opts.mode = game_mode_from_name(f.mode);
  opts.max_splits = f.max_splits;
  opts.filter = ScanFilter::parse(f.filter);
  opts.threads = f.threads;
  opts.timeout_per_graph_seconds = f.timeout;
  opts.strict = f.strict;
  opts.prune = f.prune;
  const bool timing = std::getenv("SZF_TIMING") != nullptr;

  std::ifstream file;
  std::istream* in = &std::cin;
  if (f.input != "-") {
    file.open(f.input, std::ios::binary);
    if (!file) throw Error("cannot open '" + f.input + "'");
    in = &file;
  }

  if (!f.json) out << csv_header(timing) << '\n';
  const ScanSummary s = scan_catalogue(*in, opts, [&](const ScanRecord& r) {
    out << (f.json ? to_json_line(r, timing) : to_csv(r, timing)) << '\n';
  });
  out.flush();
  err << "scanned " << s.total << " graphs (" << s.connected << " connected); matched " << s.matched << " ("
      << s.matched_connected << " connected); " << s.errors << " errors, " << s.timeouts << " timeouts\n";
  return s.errors > 0 ? kFailure : kSuccess;
}

struct BoundsFlags {
  std::string input;
  std::string formula;
  int param = -1;
  bool json = false;
};

int bounds(const BoundsFlags& f, std::ostream& out) {
  if (f.input.empty() == f.formula.empty()) throw UsageError("bounds needs exactly one of --input or --formula");
  nlohmann::ordered_json j;
  if (!f.formula.empty()) {
    if (f.param < 0) throw UsageError("--formula needs --param");
    const long z = known_formula(formula_from_name(f.formula), f.param);
    j["formula"] = f.formula;
    j["param"] = f.param;
    j["Z"] = z;
    if (f.json)
      out << j.dump() << '\n';
    else
      out << "Z = " << z << '\n';
    return kSuccess;
  }
  const Graph g = read_graph(f.input);
  const CliqueCoverResult cc = clique_cover_number(g);
  auto cover = nlohmann::ordered_json::array();
  for (VertexSet c : cc.cover.cliques) cover.push_back(one_based(c));
  j["n"] = g.order();
  j["cc"] = cc.cc;
  j["cc_bound"] = g.order() - cc.cc;
  j["cover"] = cover;
  if (f.json) {
    out << j.dump() << '\n';
  } else {
    out << "n = " << g.order() << "\ncc = " << cc.cc << "\nn - cc = " << g.order() - cc.cc << "\ncover =";
    for (VertexSet c : cc.cover.cliques) out << " {" << format_one_based(c) << '}';
    out << '\n';
  }
  return kSuccess;
}

struct VerifyFlags {
  std::string pattern;
  std::string input;
  std::string set;
  int trials = 100;
  std::uint64_t seed = 0;
  int threads = 1;
  bool json = false;
};

int verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (f.pattern.empty() == f.input.empty()) throw UsageError("verify needs exactly one of --pattern or --input");
  const SignPattern p = f.pattern.empty() ? z_pattern_of_graph(read_graph(f.input)) : read_pattern(f.pattern);
  VertexSet s;
  if (f.set.empty()) {
    MinimizeOptions opts;
    opts.threads = f.threads;
    s = signed_zero_forcing_number(p, opts).witness;
  } else {
    s = parse_one_based(f.set, p.order());
  }
  if (!signed_forces(p, s)) {
    err << "error: {" << format_one_based(s) << "} is not a signed forcing set\n";
    return kFailure;
  }
  const MainTheoremReport r = verify_main_theorem(p, s, f.trials, f.seed, f.threads);
  if (f.json) {
    nlohmann::ordered_json j;
    j["set"] = one_based(s);
    j["trials"] = r.trials;
    j["failures"] = r.failures();
    j["vanishing_failures"] = r.vanishing_failures;
    j["marker_failures"] = r.marker_failures;
    j["dimension_failures"] = r.dimension_failures;
    j["failing_seeds"] = r.failing_seeds;
    out << j.dump() << '\n';
  } else {
    out << r.failures() << " failures / " << r.trials << " trials\n";
  }
  for (std::uint64_t seed : r.failing_seeds) err << "failing trial seed " << seed << '\n';
  return r.failures() == 0 ? kSuccess : kFailure;
}

struct GenFlags {
  std::string kind;
  int param = -1;
  std::uint64_t seed = 0;
  double density = 0.5;
  bool pat = false;
};

int generate(const GenFlags& f, std::ostream& out) {
  if (f.kind == "hadamard") {
    out << serialize_pattern(hadamard_pattern());
    return kSuccess;
  }
  if (f.param < 0) throw UsageError("gen " + f.kind + " needs --param");
  std::vector<Graph> graphs;
  const int n = f.param;
  if (f.kind == "complete") graphs.push_back(complete_graph(n));
  else if (f.kind == "path") graphs.push_back(path_graph(n));
  else if (f.kind == "cycle") graphs.push_back(cycle_graph(n));
  else if (f.kind == "hypercube") graphs.push_back(hypercube(n));
  else if (f.kind == "lkn") graphs.push_back(line_graph(complete_graph(n)).graph);
  else if (f.kind == "tree") graphs.push_back(random_tree(n, f.seed));
  else if (f.kind == "random") graphs.push_back(random_graph(n, f.density, f.seed));
  else if (f.kind == "all") graphs = all_graphs(n);
  else throw UsageError("unknown generator '" + f.kind + "'");
  for (const Graph& g : graphs) {
    if (f.pat)
      out << serialize_pattern(z_pattern_of_graph(g));
    else
      out << serialize_graph6(g) << '\n';
  }
  return kSuccess;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed zero forcing: forcing numbers, certificates, bounds and catalogue scans", "szf"};
  app.require_subcommand(1);
  const int env_threads = threads_from_environment();

  SolveFlags graph_flags;
  graph_flags.threads = env_threads;
  add_solve_flags(*app.add_subcommand("graph", "forcing number of a graph6 graph via its Z-pattern"), graph_flags);

  SolveFlags pattern_flags;
  pattern_flags.threads = env_threads;
  add_solve_flags(*app.add_subcommand("pattern", "forcing number of a .pat sign pattern"), pattern_flags);

  ScanFlags scan_flags;
  scan_flags.threads = env_threads;
  CLI::App* scan_cmd = app.add_subcommand("scan", "scan a graph6 catalogue");
  scan_cmd->add_option("--input", scan_flags.input, "graph6 file ('-' for stdin)")->required();
  scan_cmd->add_option("--mode", scan_flags.mode, "classical, signed or branched")
      ->check(CLI::IsMember({"classical", "signed", "branched"}))
      ->capture_default_str();
  scan_cmd->add_option("--max-splits", scan_flags.max_splits)->check(CLI::NonNegativeNumber)->capture_default_str();
  scan_cmd->add_option("--filter", scan_flags.filter, "e.g. \"signed<classical && n<=6\"");
  scan_cmd->add_flag("--json", scan_flags.json, "JSON lines instead of CSV");
  scan_cmd->add_option("--threads", scan_flags.threads)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--timeout-per-graph", scan_flags.timeout, "seconds per graph (0: none)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  scan_cmd->add_flag("--strict", scan_flags.strict, "stop at the first bad record");
  scan_cmd->add_flag("--prune", scan_flags.prune, "share refuted game states across candidate sets");

  BoundsFlags bounds_flags;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "clique cover bound or closed-form forcing numbers");
  bounds_cmd->add_option("--input", bounds_flags.input, "graph6 file");
  bounds_cmd->add_option("--formula", bounds_flags.formula, "lkn or qd")->check(CLI::IsMember({"lkn", "qd"}));
  bounds_cmd->add_option("--param", bounds_flags.param, "n for lkn, d for qd");
  bounds_cmd->add_flag("--json", bounds_flags.json);

  VerifyFlags verify_flags;
  verify_flags.threads = env_threads;
  CLI::App* verify_cmd = app.add_subcommand("verify", "sample realisations and check the kernel claims");
  verify_cmd->add_option("--pattern", verify_flags.pattern, ".pat file");
  verify_cmd->add_option("--input", verify_flags.input, "graph6 file (uses its Z-pattern)");
  verify_cmd->add_option("--set", verify_flags.set, "1-based forcing set, e.g. 1,2 (default: minimum witness)");
  verify_cmd->add_option("--trials", verify_flags.trials)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--seed", verify_flags.seed)->capture_default_str();
  verify_cmd->add_option("--threads", verify_flags.threads)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_flags.json);

  GenFlags gen_flags;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write generated graphs (graph6) or patterns (.pat)");
  gen_cmd->add_option("kind", gen_flags.kind, "complete, path, cycle, hypercube, lkn, tree, random, all, hadamard")
      ->required();
  gen_cmd->add_option("--param", gen_flags.param, "order, dimension or clique size");
  gen_cmd->add_option("--seed", gen_flags.seed)->capture_default_str();
  gen_cmd->add_option("--density", gen_flags.density, "edge probability for 'random'")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_flag("--pat", gen_flags.pat, "emit the Z-pattern in .pat format");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (app.got_subcommand("graph")) {
      const Graph g = read_graph(graph_flags.input);
      return solve(z_pattern_of_graph(g), &g, graph_flags, out);
    }
    if (app.got_subcommand("pattern")) return solve(read_pattern(pattern_flags.input), nullptr, pattern_flags, out);
    if (app.got_subcommand("scan")) return scan(scan_flags, out, err);
    if (app.got_subcommand("bounds")) return bounds(bounds_flags, out);
    if (app.got_subcommand("verify")) return verify(verify_flags, out, err);
    return generate(gen_flags, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Timeout&) {
    err << "error: time limit exceeded\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace szf
