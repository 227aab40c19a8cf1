#pragma once

#include <chrono>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "szf/vertex_set.hpp"

namespace szf {

enum class GameMode { classical, signed_game, branched };
GameMode game_mode_from_name(const std::string& name);
const char* to_string(GameMode m);

/// One line of a catalogue scan.
struct ScanRecord {
  std::size_t line = 0;
  std::string graph6;
  int n = 0;
  bool connected = false;
  /// "ok", "timeout" or "error".
  std::string status = "ok";
  std::string message;
  int z = 0;
  int z_signed = 0;
  std::optional<int> z_branched;
  std::optional<int> cc;
  std::optional<int> cc_bound;
  VertexSet witness_signed;
  std::chrono::milliseconds elapsed{0};
};

/// Conjunction of predicates over a record, written "signed<classical", "n<=K", "connected",
/// "branched<signed", joined with "&&" or ",". The empty expression matches everything.
class ScanFilter {
 public:
  ScanFilter() = default;
  /// Throws ParseError on unknown predicates.
  static ScanFilter parse(const std::string& expr);

  /// Records failing the size predicates can be skipped before any search runs.
  bool admits_order(int n) const;
  bool admits_connectivity(bool connected) const;
  bool matches(const ScanRecord& r) const;
  bool empty() const { return terms_.empty(); }

 private:
  struct Term {
    enum class Kind { signed_lt_classical, branched_lt_signed, order_le, order_ge, order_eq, connected };
    Kind kind;
    int value = 0;
  };
  std::vector<Term> terms_;
};

struct ScanOptions {
  GameMode mode = GameMode::signed_game;
  int max_splits = 1;
  ScanFilter filter;
  int threads = 1;
  double timeout_per_graph_seconds = 60.0;
  bool strict = false;
  bool prune = false;
  /// Compute cc(G) and n - cc(G) for graphs up to this order.
  int clique_cover_max_order = 20;
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t connected = 0;
  std::size_t matched = 0;
  std::size_t matched_connected = 0;
  std::size_t errors = 0;
  std::size_t timeouts = 0;
  std::size_t skipped = 0;
};

/// Computes one record for a graph6 line. Never throws for bad input; the record carries
/// status "error" and a message instead.
ScanRecord scan_graph(const std::string& graph6, std::size_t line, const ScanOptions& options);

/// Scans a newline-delimited graph6 stream. Graphs are processed in parallel in chunks;
/// `emit` sees matching records in input order. With `strict`, the first bad record throws
/// ParseError carrying its line number.
ScanSummary scan_catalogue(std::istream& in, const ScanOptions& options,
                           const std::function<void(const ScanRecord&)>& emit);

/// CSV header row and RFC 4180 record line (no trailing newline). Vertex sets are 1-based.
std::string csv_header(bool with_timing);
std::string to_csv(const ScanRecord& r, bool with_timing);
/// JSON-lines form of a record.
std::string to_json_line(const ScanRecord& r, bool with_timing);

}  // namespace szf
