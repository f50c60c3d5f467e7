#include "iolab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace iolab {

namespace {

using nlohmann::ordered_json;

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Structure read_structure(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool is_poset = false;
  bool seen_header = false, seen_elements = false;
  std::map<std::string, int> index;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;

  auto vertex = [&](const std::string& t) {
    auto it = index.find(t);
    if (it == index.end()) throw ParseError("unknown element '" + t + "'", lineno);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    auto tok = tokens(s);
    if (!seen_header) {
      if (tok.size() != 2 || (tok[0] != "poset" && tok[0] != "graph"))
        throw ParseError("expected 'poset NAME' or 'graph NAME'", lineno);
      is_poset = tok[0] == "poset";
      seen_header = true;
      continue;
    }
    if (!seen_elements) {
      if (tok.empty() || tok[0] != "elements:")
        throw ParseError("expected 'elements: ...'", lineno);
      for (size_t i = 1; i < tok.size(); ++i) {
        if (index.count(tok[i])) throw ParseError("duplicate element '" + tok[i] + "'", lineno);
        index[tok[i]] = static_cast<int>(names.size());
        names.push_back(tok[i]);
      }
      seen_elements = true;
      continue;
    }
    const char* rel = is_poset ? "<" : "--";
    if (tok.size() != 3 || tok[1] != rel)
      throw ParseError(std::string("expected 'a ") + rel + " b'", lineno);
    pairs.emplace_back(vertex(tok[0]), vertex(tok[2]));
  }
  if (!seen_header) throw ParseError("empty input", lineno ? lineno : 1);
  if (!seen_elements) throw ParseError("missing 'elements:' line", lineno);
  int n = static_cast<int>(names.size());
  if (is_poset) return Poset::from_pairs(n, pairs, std::move(names));
  return SimpleGraph::from_edges(n, pairs, std::move(names));
}

Structure read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_structure(in);
}

void write_poset(std::ostream& out, const Poset& p, const std::string& name) {
  out << "poset " << name << "\n";
  out << "elements:";
  for (int v = 0; v < p.size(); ++v) out << " " << p.name_of(v);
  out << "\n";
  // Cover pairs suffice; readers take the closure.
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < p.size(); ++c)
        if (p.less(a, c) && p.less(c, b)) {
          cover = false;
          break;
        }
      if (cover) out << p.name_of(a) << " < " << p.name_of(b) << "\n";
    }
}

void write_graph(std::ostream& out, const SimpleGraph& g, const std::string& name) {
  out << "graph " << name << "\n";
  out << "elements:";
  for (int v = 0; v < g.size(); ++v) out << " " << g.name_of(v);
  out << "\n";
  for (auto [a, b] : g.edges()) out << g.name_of(a) << " -- " << g.name_of(b) << "\n";
}

std::string amchain_to_json(const Poset& p, const AMChain& c) {
  ordered_json doc;
  doc["antichains"] = ordered_json::array();
  for (const auto& a : c.antichains) {
    ordered_json row = ordered_json::array();
    for (int v : a) row.push_back(p.name_of(v));
    doc["antichains"].push_back(std::move(row));
  }
  doc["membership"] = ordered_json::object();
  for (int v = 0; v < p.size(); ++v)
    doc["membership"][p.name_of(v)] = {c.membership[v].first, c.membership[v].second};
  return doc.dump(2);
}

std::string representation_to_json(const Poset& p, const IntervalRepresentation& r) {
  ordered_json doc;
  doc["chain_length"] = r.chain_length;
  doc["intervals"] = ordered_json::object();
  for (int v = 0; v < p.size(); ++v)
    doc["intervals"][p.name_of(v)] = {r.intervals[v].first, r.intervals[v].second};
  return doc.dump(2);
}

namespace {

ordered_json tree_node_json(const ModuleTree& t, int id, const Poset* names_from) {
  const auto& node = t.nodes[id];
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (int v : node.vertices) {
    if (names_from)
      doc["vertices"].push_back(names_from->name_of(v));
    else
      doc["vertices"].push_back(v);
  }
  doc["kind"] = kind_name(node.kind, t.poset_view);
  doc["children"] = ordered_json::array();
  for (int c : node.children) doc["children"].push_back(tree_node_json(t, c, names_from));
  return doc;
}

}  // namespace

std::string module_tree_to_json(const ModuleTree& t, const Poset* names_from) {
  return tree_node_json(t, t.root, names_from).dump(2);
}

std::string module_tree_to_dot(const ModuleTree& t) {
  std::ostringstream out;
  out << "digraph modules {\n";
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    out << "  n" << i << " [label=\"" << kind_name(node.kind, t.poset_view) << " {";
    for (size_t j = 0; j < node.vertices.size(); ++j)
      out << (j ? "," : "") << node.vertices[j];
    out << "}\"];\n";
    for (int c : node.children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace iolab
