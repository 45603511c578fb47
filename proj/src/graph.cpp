#include "besg/graph.hpp"

#include "besg/error.hpp"

namespace besg {

const std::string& Graph::vertex_label(const std::string& v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw Error("graph: unknown vertex '" + v + "'");
  return it->second;
}

VertexKind Graph::kind(const std::string& v) const {
  const std::string& l = vertex_label(v);
  if (alphabets_.is_node_label(l)) return VertexKind::NodeVertex;
  if (alphabets_.is_wire_label(l)) return VertexKind::WireVertex;
  return VertexKind::NonTerminal;
}

void Graph::add_vertex(const std::string& name, const std::string& label) {
  if (name.empty()) throw Error("graph: empty vertex name");
  if (vertices_.count(name)) throw Error("graph: duplicate vertex '" + name + "'");
  if (!alphabets_.is_vertex_label(label))
    throw Error("graph: vertex '" + name + "' has unknown label '" + label + "'");
  vertices_.emplace(name, label);
}

void Graph::add_edge(const std::string& src, const std::string& label,
                     const std::string& tgt) {
  if (!vertices_.count(src)) throw Error("graph: edge source '" + src + "' does not exist");
  if (!vertices_.count(tgt)) throw Error("graph: edge target '" + tgt + "' does not exist");
  if (src == tgt) throw Error("graph: self-loop on '" + src + "' is forbidden");
  if (!alphabets_.is_edge_label(label))
    throw Error("graph: unknown edge label '" + label + "'");
  edges_.insert(Edge{src, label, tgt});
}

void Graph::remove_vertex(const std::string& v) {
  if (!vertices_.count(v)) throw Error("graph: unknown vertex '" + v + "'");
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->src == v || it->tgt == v)
      it = edges_.erase(it);
    else
      ++it;
  }
  vertices_.erase(v);
}

void Graph::remove_edge(const Edge& e) {
  if (!edges_.erase(e))
    throw Error("graph: unknown edge (" + e.src + ", " + e.label + ", " + e.tgt + ")");
}

void Graph::rename_vertex(const std::string& from, const std::string& to) {
  if (from == to) return;
  if (!vertices_.count(from)) throw Error("graph: unknown vertex '" + from + "'");
  if (vertices_.count(to)) throw Error("graph: rename target '" + to + "' already exists");
  std::set<Edge> next;
  for (const Edge& e : edges_) {
    Edge f = e;
    if (f.src == from) f.src = to;
    if (f.tgt == from) f.tgt = to;
    next.insert(f);
  }
  edges_ = std::move(next);
  vertices_.emplace(to, vertices_.at(from));
  vertices_.erase(from);
}

std::vector<Edge> Graph::in_edges(const std::string& v) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (e.tgt == v) out.push_back(e);
  return out;
}

std::vector<Edge> Graph::out_edges(const std::string& v) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (e.src == v) out.push_back(e);
  return out;
}

std::size_t Graph::in_degree(const std::string& v) const {
  std::size_t n = 0;
  for (const Edge& e : edges_)
    if (e.tgt == v) ++n;
  return n;
}

std::size_t Graph::out_degree(const std::string& v) const {
  std::size_t n = 0;
  for (const Edge& e : edges_)
    if (e.src == v) ++n;
  return n;
}

std::string Graph::fresh_name(const std::string& base) const {
  if (!vertices_.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "~" + std::to_string(k);
    if (!vertices_.count(candidate)) return candidate;
  }
}

StringGraphReport check_string_graph(const Graph& g) {
  StringGraphReport r;
  for (const auto& [name, label] : g.vertices()) {
    if (g.alphabets().is_nonterminal_label(label)) {
      r.ok = false;
      r.condition = "nonterminal-vertex";
      r.witness_vertex = name;
      r.message = "vertex '" + name + "' carries nonterminal label '" + label + "'";
      return r;
    }
  }
  for (const Edge& e : g.edges()) {
    if (g.alphabets().is_encoding_label(e.label)) {
      r.ok = false;
      r.condition = "encoding-edge";
      r.witness_edge = e;
      r.message = "edge (" + e.src + ", " + e.label + ", " + e.tgt + ") carries an encoding label";
      return r;
    }
  }
  // Def. 3 (1): no edges directly connecting two node-vertices.
  for (const Edge& e : g.edges()) {
    if (g.is_node_vertex(e.src) && g.is_node_vertex(e.tgt)) {
      r.ok = false;
      r.condition = "node-node-edge";
      r.witness_edge = e;
      r.message = "edge (" + e.src + ", " + e.label + ", " + e.tgt + ") connects two node-vertices";
      return r;
    }
  }
  // Def. 3 (2): wire-vertex in-degree at most one.
  for (const auto& [name, label] : g.vertices()) {
    if (!g.alphabets().is_wire_label(label)) continue;
    if (g.in_degree(name) > 1) {
      r.ok = false;
      r.condition = "wire-in-degree";
      r.witness_vertex = name;
      r.message = "wire-vertex '" + name + "' has in-degree > 1";
      return r;
    }
  }
  // Def. 3 (3): wire-vertex out-degree at most one.
  for (const auto& [name, label] : g.vertices()) {
    if (!g.alphabets().is_wire_label(label)) continue;
    if (g.out_degree(name) > 1) {
      r.ok = false;
      r.condition = "wire-out-degree";
      r.witness_vertex = name;
      r.message = "wire-vertex '" + name + "' has out-degree > 1";
      return r;
    }
  }
  return r;
}

bool is_string_graph(const Graph& g) { return check_string_graph(g).ok; }

std::pair<std::set<std::string>, std::set<std::string>> boundary(const Graph& g) {
  StringGraphReport r = check_string_graph(g);
  if (!r.ok) throw Error("boundary: not a string graph: " + r.message);
  std::set<std::string> inputs, outputs;
  for (const auto& [name, label] : g.vertices()) {
    if (!g.alphabets().is_wire_label(label)) continue;
    if (g.in_degree(name) == 0) inputs.insert(name);
    if (g.out_degree(name) == 0) outputs.insert(name);
  }
  return {inputs, outputs};
}

}  // namespace besg
