#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "szf/graph.hpp"
#include "szf/vertex_set.hpp"

namespace szf {

enum class Sign : std::uint8_t { plus, minus, zero, unknown };

char to_char(Sign s);
/// Accepts '+', '-', '0', '?'; throws ParseError otherwise.
Sign sign_from_char(char c);

/// Sign inversion on {+,-}. Throws ContractViolation on 0 or ?.
Sign invert(Sign s);
/// + if the signs agree, - otherwise. Both arguments must be + or -.
Sign multiply(Sign s, Sign t);

inline bool is_strict(Sign s) { return s == Sign::plus || s == Sign::minus; }

/// Square matrix over {+,-,0,?}. Entry (u,w) is P_uw.
class SignPattern {
 public:
  SignPattern() = default;
  /// n×n pattern with every entry set to `fill`.
  explicit SignPattern(int n, Sign fill = Sign::zero);

  int order() const { return n_; }
  Sign at(int u, int w) const { return entries_[static_cast<std::size_t>(u) * n_ + w]; }
  void set(int u, int w, Sign s) { entries_[static_cast<std::size_t>(u) * n_ + w] = s; }

  /// P_uw != ? for every u != w.
  bool has_fixed_periphery() const;
  bool is_symmetric() const;

  /// Columns w (diagonal included) with P_uw = + and P_uw = - respectively.
  VertexSet row_plus(int u) const;
  VertexSet row_minus(int u) const;

  bool operator==(const SignPattern&) const = default;

 private:
  int n_ = 0;
  std::vector<Sign> entries_;
};

/// Reads the ".pat" text format: '#' comment lines, then n, then n rows of n signs
/// (spaces and tabs ignored). Errors carry line and column.
SignPattern parse_pattern(std::string_view text);
/// Writes the ".pat" format with no spaces and a trailing newline.
std::string serialize_pattern(const SignPattern& p);

/// ? on the diagonal, - on edges, 0 on non-edges.
SignPattern z_pattern_of_graph(const Graph& g);

/// {w != u : P_uw in {+,-}}. Requires fixed periphery.
VertexSet in_neighbors(const SignPattern& p, int u);

/// Undirected graph with u~w iff P_uw or P_wu is + or - (u != w).
Graph graph_of_pattern(const SignPattern& p);

/// The 4×4 Hadamard sign pattern (rows ++++, +-+-, ++--, +--+).
SignPattern hadamard_pattern();

}  // namespace szf
