#include "szf/certificate_io.hpp"

#include <sstream>

#include "szf/error.hpp"

namespace szf {

using nlohmann::json;

namespace {

json one_based(VertexSet s) {
  json arr = json::array();
  for (int v : s) arr.push_back(v + 1);
  return arr;
}

VertexSet vertex_set_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("certificate: '") + field + "' must be an array");
  VertexSet s;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string("certificate: '") + field + "' holds a non-integer");
    const int label = v.get<int>();
    if (label < 1 || label > kMaxVertices) {
      throw ParseError(std::string("certificate: vertex out of range in '") + field + "'");
    }
    s.insert(label - 1);
  }
  return s;
}

Clause clause_from_string(const std::string& s) {
  if (s == "A") return Clause::A;
  if (s == "B") return Clause::B;
  if (s == "C") return Clause::C;
  if (s == "D") return Clause::D;
  throw ParseError("certificate: unknown clause '" + s + "'");
}

json node_to_json(const BranchNode& node) {
  json moves = json::array();
  for (const RuleInstance& inst : node.moves) moves.push_back(to_json(inst));
  json out = {{"moves", std::move(moves)}};
  if (node.is_split()) {
    json children = json::array();
    for (const BranchNode& child : node.children) children.push_back(node_to_json(child));
    out["split"] = {{"v", node.split_vertex + 1}, {"cases", {"+", "-", "black"}}, {"children", std::move(children)}};
  }
  return out;
}

BranchNode node_from_json(const json& j) {
  if (!j.is_object() || !j.contains("moves")) throw ParseError("certificate: branch node lacks 'moves'");
  BranchNode node;
  for (const json& m : j.at("moves")) node.moves.push_back(rule_instance_from_json(m));
  if (j.contains("split")) {
    const json& split = j.at("split");
    if (!split.contains("v") || !split.contains("children")) throw ParseError("certificate: malformed split");
    node.split_vertex = split.at("v").get<int>() - 1;
    if (node.split_vertex < 0) throw ParseError("certificate: split vertex out of range");
    for (const json& child : split.at("children")) node.children.push_back(node_from_json(child));
  }
  return node;
}

}  // namespace

json to_json(const RuleInstance& inst) {
  json out = {{"clause", std::string(1, to_char(inst.clause))}, {"pivot", inst.pivot + 1}};
  if (inst.mark) {
    out["mark"] = {{"v", inst.mark->vertex + 1}, {"sign", std::string(1, to_char(inst.mark->sign))}};
  } else {
    out["blacken"] = one_based(inst.blacken);
  }
  return out;
}

json to_json(const Transcript& t) {
  json moves = json::array();
  for (const RuleInstance& inst : t.moves) moves.push_back(to_json(inst));
  return {{"initial", one_based(t.initial)}, {"moves", std::move(moves)}};
}

json to_json(const BranchCertificate& cert) {
  return {{"initial", one_based(cert.initial)}, {"strategy", node_to_json(cert.root)}};
}

RuleInstance rule_instance_from_json(const json& j) {
  try {
    RuleInstance inst;
    inst.clause = clause_from_string(j.at("clause").get<std::string>());
    inst.pivot = j.at("pivot").get<int>() - 1;
    if (inst.pivot < 0 || inst.pivot >= kMaxVertices) throw ParseError("certificate: pivot out of range");
    if (j.contains("blacken")) inst.blacken = vertex_set_from_json(j.at("blacken"), "blacken");
    if (j.contains("mark")) {
      const json& m = j.at("mark");
      const int v = m.at("v").get<int>() - 1;
      if (v < 0 || v >= kMaxVertices) throw ParseError("certificate: marked vertex out of range");
      const std::string sign = m.at("sign").get<std::string>();
      if (sign != "+" && sign != "-") throw ParseError("certificate: marker sign must be '+' or '-'");
      inst.mark = Mark{v, sign_from_char(sign[0])};
    }
    return inst;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

Transcript transcript_from_json(const json& j) {
  try {
    Transcript t;
    t.initial = vertex_set_from_json(j.at("initial"), "initial");
    for (const json& m : j.at("moves")) t.moves.push_back(rule_instance_from_json(m));
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

BranchCertificate branch_certificate_from_json(const json& j) {
  try {
    BranchCertificate cert;
    cert.initial = vertex_set_from_json(j.at("initial"), "initial");
    cert.root = node_from_json(j.at("strategy"));
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

std::string transcript_to_dot(const SignPattern& p, const Transcript& t) {
  std::ostringstream out;
  out << "digraph transcript {\n  node [shape=circle];\n";
  for (int v = 0; v < p.order(); ++v) {
    out << "  " << v + 1;
    if (t.initial.contains(v)) out << " [style=filled, fillcolor=black, fontcolor=white]";
    out << ";\n";
  }
  for (int u = 0; u < p.order(); ++u)
    for (int w = 0; w < p.order(); ++w)
      if (u != w && is_strict(p.at(u, w))) {
        out << "  " << w + 1 << " -> " << u + 1 << " [color=gray, label=\"" << to_char(p.at(u, w)) << "\"];\n";
      }
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    const RuleInstance& inst = t.moves[k];
    const std::string tag = std::to_string(k + 1) + to_char(inst.clause);
    if (inst.mark) {
      out << "  " << inst.pivot + 1 << " -> " << inst.mark->vertex + 1 << " [color=blue, label=\"" << tag
          << to_char(inst.mark->sign) << "\"];\n";
    } else {
      for (int v : inst.blacken)
        out << "  " << inst.pivot + 1 << " -> " << v + 1 << " [color=red, label=\"" << tag << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace szf
