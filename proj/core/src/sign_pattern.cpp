#include "szf/sign_pattern.hpp"

#include <cctype>
#include <string>

#include "szf/error.hpp"

namespace szf {

char to_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    case Sign::zero: return '0';
    case Sign::unknown: return '?';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    case '?': return Sign::unknown;
    default: throw ParseError(std::string("illegal sign character '") + c + "'");
  }
}

Sign invert(Sign s) {
  if (!is_strict(s)) throw ContractViolation("invert: sign must be + or -");
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

Sign multiply(Sign s, Sign t) {
  if (!is_strict(s) || !is_strict(t)) throw ContractViolation("multiply: signs must be + or -");
  return s == t ? Sign::plus : Sign::minus;
}

SignPattern::SignPattern(int n, Sign fill) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("pattern order " + std::to_string(n) + " exceeds the " + std::to_string(kMaxVertices) +
                        "-vertex cap");
  }
  entries_.assign(static_cast<std::size_t>(n) * n, fill);
}

bool SignPattern::has_fixed_periphery() const {
  for (int u = 0; u < n_; ++u)
    for (int w = 0; w < n_; ++w)
      if (u != w && at(u, w) == Sign::unknown) return false;
  return true;
}

bool SignPattern::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int w = u + 1; w < n_; ++w)
      if (at(u, w) != at(w, u)) return false;
  return true;
}

VertexSet SignPattern::row_plus(int u) const {
  VertexSet s;
  for (int w = 0; w < n_; ++w)
    if (at(u, w) == Sign::plus) s.insert(w);
  return s;
}

VertexSet SignPattern::row_minus(int u) const {
  VertexSet s;
  for (int w = 0; w < n_; ++w)
    if (at(u, w) == Sign::minus) s.insert(w);
  return s;
}

SignPattern parse_pattern(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  int n = -1;
  int row = 0;
  SignPattern p;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string compact;
    std::vector<std::size_t> columns;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == ' ' || line[i] == '\t') continue;
      compact += line[i];
      columns.push_back(i + 1);
    }
    if (!compact.empty() && compact.front() == '#') continue;

    if (n < 0) {
      if (compact.empty()) continue;
      for (std::size_t i = 0; i < compact.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(compact[i]))) {
          throw ParseError("expected the pattern order", line_no, columns[i]);
        }
      }
      n = std::stoi(compact);
      p = SignPattern(n);
      if (n == 0) break;
      continue;
    }
    if (row == n) {
      if (!compact.empty()) throw ParseError("more than " + std::to_string(n) + " rows", line_no, columns.front());
      continue;
    }
    if (compact.empty()) continue;
    if (static_cast<int>(compact.size()) != n) {
      throw ParseError("row has " + std::to_string(compact.size()) + " entries, expected " + std::to_string(n),
                       line_no, columns.empty() ? 1 : columns.back());
    }
    for (int w = 0; w < n; ++w) {
      try {
        p.set(row, w, sign_from_char(compact[static_cast<std::size_t>(w)]));
      } catch (const ParseError&) {
        throw ParseError(std::string("illegal sign character '") + compact[static_cast<std::size_t>(w)] + "'",
                         line_no, columns[static_cast<std::size_t>(w)]);
      }
    }
    ++row;
    if (pos > text.size()) break;
  }
  if (n < 0) throw ParseError("missing pattern order", line_no);
  if (row != n) throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(row), line_no);
  return p;
}

std::string serialize_pattern(const SignPattern& p) {
  std::string out = std::to_string(p.order()) + "\n";
  for (int u = 0; u < p.order(); ++u) {
    for (int w = 0; w < p.order(); ++w) out += to_char(p.at(u, w));
    out += '\n';
  }
  return out;
}

SignPattern z_pattern_of_graph(const Graph& g) {
  SignPattern p(g.order(), Sign::zero);
  for (int u = 0; u < g.order(); ++u) {
    p.set(u, u, Sign::unknown);
    for (int w : g.neighbors(u)) p.set(u, w, Sign::minus);
  }
  return p;
}

VertexSet in_neighbors(const SignPattern& p, int u) {
  if (!p.has_fixed_periphery()) throw ContractViolation("in_neighbors: pattern lacks fixed periphery");
  VertexSet s = p.row_plus(u) | p.row_minus(u);
  s.erase(u);
  return s;
}

Graph graph_of_pattern(const SignPattern& p) {
  Graph g(p.order());
  for (int u = 0; u < p.order(); ++u)
    for (int w = u + 1; w < p.order(); ++w)
      if (is_strict(p.at(u, w)) || is_strict(p.at(w, u))) g.add_edge(u, w);
  return g;
}

SignPattern hadamard_pattern() {
  return parse_pattern("4\n++++\n+-+-\n++--\n+--+\n");
}

}  // namespace szf
