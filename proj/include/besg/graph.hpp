#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "besg/alphabets.hpp"

namespace besg {

/// Directed labelled edge. Edges form a set: parallel edges are allowed only
/// when the label or the direction differs.
struct Edge {
  std::string src;
  std::string label;
  std::string tgt;

  auto operator<=>(const Edge&) const = default;
};

enum class VertexKind { NodeVertex, WireVertex, NonTerminal };

/// Finite labelled directed graph over an Alphabets value. No self-loops.
/// The universal carrier for string graphs, encoded string graphs, production
/// bodies and sentential forms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Alphabets a) : alphabets_(std::move(a)) { alphabets_.validate(); }

  bool operator==(const Graph&) const = default;

  const Alphabets& alphabets() const { return alphabets_; }
  const std::map<std::string, std::string>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(const std::string& v) const { return vertices_.count(v) != 0; }
  bool has_edge(const Edge& e) const { return edges_.count(e) != 0; }
  bool has_edge(const std::string& s, const std::string& l, const std::string& t) const {
    return edges_.count(Edge{s, l, t}) != 0;
  }

  /// Label of an existing vertex; throws on unknown names.
  const std::string& vertex_label(const std::string& v) const;

  /// Classification of a vertex by the alphabet membership of its label.
  VertexKind kind(const std::string& v) const;
  bool is_node_vertex(const std::string& v) const { return kind(v) == VertexKind::NodeVertex; }
  bool is_wire_vertex(const std::string& v) const { return kind(v) == VertexKind::WireVertex; }
  bool is_nonterminal(const std::string& v) const { return kind(v) == VertexKind::NonTerminal; }

  void add_vertex(const std::string& name, const std::string& label);
  void add_edge(const std::string& src, const std::string& label, const std::string& tgt);
  void add_edge(const Edge& e) { add_edge(e.src, e.label, e.tgt); }

  /// Removes a vertex together with all incident edges.
  void remove_vertex(const std::string& v);
  void remove_edge(const Edge& e);

  /// Renames a vertex, rewriting incident edges. The new name must be fresh.
  void rename_vertex(const std::string& from, const std::string& to);

  std::vector<Edge> in_edges(const std::string& v) const;
  std::vector<Edge> out_edges(const std::string& v) const;
  std::size_t in_degree(const std::string& v) const;
  std::size_t out_degree(const std::string& v) const;
  std::size_t degree(const std::string& v) const { return in_degree(v) + out_degree(v); }

  /// Derives a fresh vertex name from `base` by appending "~k".
  std::string fresh_name(const std::string& base) const;

 private:
  Alphabets alphabets_;
  std::map<std::string, std::string> vertices_;
  std::set<Edge> edges_;
};

/// First-violation report for the string graph predicate. `condition` is one
/// of: "nonterminal-vertex", "encoding-edge", "node-node-edge",
/// "wire-in-degree", "wire-out-degree" (checked in that order).
struct StringGraphReport {
  bool ok = true;
  std::string condition;
  std::string witness_vertex;
  std::optional<Edge> witness_edge;
  std::string message;
};

StringGraphReport check_string_graph(const Graph& g);
bool is_string_graph(const Graph& g);

/// Inputs (wire-vertices with no incoming edge) and outputs (no outgoing
/// edge) of a string graph. A vertex may be both. Throws on non-string-graphs.
std::pair<std::set<std::string>, std::set<std::string>> boundary(const Graph& g);

}  // namespace besg
