#include "szf/catalogue.hpp"

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "szf/clique_cover.hpp"
#include "szf/error.hpp"
#include "szf/graph6.hpp"
#include "szf/minimize.hpp"
#include "szf/parallel.hpp"
#include "szf/sign_pattern.hpp"

namespace szf {

int threads_from_environment() {
  if (const char* env = std::getenv("SZF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

GameMode game_mode_from_name(const std::string& name) {
  if (name == "classical") return GameMode::classical;
  if (name == "signed") return GameMode::signed_game;
  if (name == "branched") return GameMode::branched;
  throw ContractViolation("unknown mode '" + name + "' (expected classical, signed or branched)");
}

const char* to_string(GameMode m) {
  switch (m) {
    case GameMode::classical: return "classical";
    case GameMode::signed_game: return "signed";
    case GameMode::branched: return "branched";
  }
  return "?";
}

ScanFilter ScanFilter::parse(const std::string& expr) {
  ScanFilter f;
  std::string normalized;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    if (expr.compare(i, 2, "&&") == 0) {
      normalized += ',';
      ++i;
    } else if (expr[i] != ' ' && expr[i] != '\t') {
      normalized += expr[i];
    }
  }
  std::stringstream in(normalized);
  std::string term;
  while (std::getline(in, term, ',')) {
    if (term.empty()) continue;
    if (term == "signed<classical") {
      f.terms_.push_back({Term::Kind::signed_lt_classical});
    } else if (term == "branched<signed") {
      f.terms_.push_back({Term::Kind::branched_lt_signed});
    } else if (term == "connected") {
      f.terms_.push_back({Term::Kind::connected});
    } else if (term.rfind("n<=", 0) == 0 || term.rfind("n>=", 0) == 0 || term.rfind("n==", 0) == 0 ||
               term.rfind("n=", 0) == 0) {
      const bool two = term[2] == '=';
      const std::string number = term.substr(two ? 3 : 2);
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(number, &used);
        if (used != number.size()) throw ParseError("");
      } catch (...) {
        throw ParseError("filter: bad number in '" + term + "'");
      }
      Term::Kind kind = Term::Kind::order_eq;
      if (term[1] == '<') kind = Term::Kind::order_le;
      if (term[1] == '>') kind = Term::Kind::order_ge;
      f.terms_.push_back({kind, value});
    } else {
      throw ParseError("filter: unknown predicate '" + term +
                       "' (expected signed<classical, branched<signed, connected, n<=K, n>=K, n=K)");
    }
  }
  return f;
}

bool ScanFilter::admits_order(int n) const {
  for (const Term& t : terms_) {
    if (t.kind == Term::Kind::order_le && n > t.value) return false;
    if (t.kind == Term::Kind::order_ge && n < t.value) return false;
    if (t.kind == Term::Kind::order_eq && n != t.value) return false;
  }
  return true;
}

bool ScanFilter::admits_connectivity(bool connected) const {
  for (const Term& t : terms_)
    if (t.kind == Term::Kind::connected && !connected) return false;
  return true;
}

bool ScanFilter::matches(const ScanRecord& r) const {
  if (!admits_order(r.n) || !admits_connectivity(r.connected)) return false;
  for (const Term& t : terms_) {
    if (t.kind == Term::Kind::signed_lt_classical && !(r.z_signed < r.z)) return false;
    if (t.kind == Term::Kind::branched_lt_signed && !(r.z_branched && *r.z_branched < r.z_signed)) return false;
  }
  return true;
}

ScanRecord scan_graph(const std::string& graph6, std::size_t line, const ScanOptions& options) {
  ScanRecord r;
  r.line = line;
  r.graph6 = graph6;
  const auto started = std::chrono::steady_clock::now();
  try {
    const Graph g = parse_graph6(graph6);
    r.n = g.order();
    r.connected = g.is_connected();
    const Deadline deadline = Deadline::after_seconds(options.timeout_per_graph_seconds);
    MinimizeOptions minimize;
    minimize.deadline = &deadline;
    minimize.prune = options.prune;
    r.z = zero_forcing_number(g, minimize).value;
    const SignPattern p = z_pattern_of_graph(g);
    const ForcingNumberResult signed_result = signed_zero_forcing_number(p, minimize);
    r.z_signed = signed_result.value;
    r.witness_signed = signed_result.witness;
    if (options.mode == GameMode::branched) r.z_branched = branched_number(p, options.max_splits, minimize).value;
    if (r.n <= options.clique_cover_max_order) {
      r.cc = clique_cover_number(g).cc;
      r.cc_bound = r.n - *r.cc;
    }
  } catch (const Timeout&) {
    r.status = "timeout";
    r.message = "exceeded the per-graph time limit";
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return r;
}

ScanSummary scan_catalogue(std::istream& in, const ScanOptions& options,
                           const std::function<void(const ScanRecord&)>& emit) {
  ScanSummary summary;
  std::vector<std::pair<std::size_t, std::string>> pending;
  const std::size_t chunk = static_cast<std::size_t>(std::max(options.threads, 1)) * 16;

  auto flush = [&] {
    std::vector<ScanRecord> records(pending.size());
    std::vector<bool> skipped(pending.size(), false);
    parallel_for(pending.size(), options.threads, [&](int, std::size_t i) {
      const auto& [line, text] = pending[i];
      // Cheap pre-filter on order and connectivity before any search.
      try {
        const Graph g = parse_graph6(text);
        if (!options.filter.admits_order(g.order()) || !options.filter.admits_connectivity(g.is_connected())) {
          skipped[i] = true;
          return;
        }
      } catch (const std::exception&) {
      }
      records[i] = scan_graph(text, line, options);
    });
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (skipped[i]) {
        ++summary.skipped;
        continue;
      }
      const ScanRecord& r = records[i];
      ++summary.total;
      if (r.status == "error") {
        ++summary.errors;
        if (options.strict) throw ParseError(r.message, r.line);
        emit(r);
        continue;
      }
      if (r.connected) ++summary.connected;
      if (r.status == "timeout") {
        ++summary.timeouts;
        emit(r);
        continue;
      }
      if (options.filter.matches(r)) {
        ++summary.matched;
        if (r.connected) ++summary.matched_connected;
        emit(r);
      }
    }
    pending.clear();
  };

  for_each_graph6_line(in, [&](std::size_t line, const std::string& text) {
    pending.emplace_back(line, text);
    if (pending.size() >= chunk) flush();
  });
  if (in.bad()) throw Error("I/O error while reading the catalogue");
  flush();
  return summary;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_field(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::string csv_header(bool with_timing) {
  std::string h = "graph6,n,connected,status,Z,Z_signed,Z_branched,cc,cc_bound,witness_signed";
  if (with_timing) h += ",elapsed_ms";
  return h;
}

std::string to_csv(const ScanRecord& r, bool with_timing) {
  const bool ok = r.status == "ok";
  std::string out = csv_field(r.graph6) + ',' + std::to_string(r.n) + ',' + (r.connected ? "1" : "0") + ',' +
                    r.status + ',' + (ok ? std::to_string(r.z) : "") + ',' + (ok ? std::to_string(r.z_signed) : "") +
                    ',' + optional_field(r.z_branched) + ',' + optional_field(r.cc) + ',' +
                    optional_field(r.cc_bound) + ',' + csv_field(ok ? format_one_based(r.witness_signed) : "");
  if (with_timing) out += ',' + std::to_string(r.elapsed.count());
  return out;
}

std::string to_json_line(const ScanRecord& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["connected"] = r.connected;
  j["status"] = r.status;
  if (r.status == "ok") {
    j["Z"] = r.z;
    j["Z_signed"] = r.z_signed;
    if (r.z_branched) j["Z_branched"] = *r.z_branched;
    if (r.cc) j["cc"] = *r.cc;
    if (r.cc_bound) j["cc_bound"] = *r.cc_bound;
    nlohmann::json witness = nlohmann::json::array();
    for (int v : r.witness_signed) witness.push_back(v + 1);
    j["witness_signed"] = std::move(witness);
  } else {
    j["line"] = r.line;
    j["message"] = r.message;
  }
  if (with_timing) j["elapsed_ms"] = r.elapsed.count();
  return j.dump();
}

}  // namespace szf
