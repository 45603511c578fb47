#pragma once

#include <set>
#include <string>

namespace besg {

/// Label universe shared by every syntactic object.
///
/// Vertex labels split into node labels, wire labels and nonterminal labels;
/// the three sets must be pairwise disjoint. Encoding labels are a subset of
/// the edge labels; every edge label is final.
struct Alphabets {
  std::set<std::string> node_labels;
  std::set<std::string> wire_labels;
  std::set<std::string> nonterminal_labels;
  std::set<std::string> edge_labels;
  std::set<std::string> encoding_labels;

  bool operator==(const Alphabets&) const = default;

  bool is_node_label(const std::string& l) const { return node_labels.count(l) != 0; }
  bool is_wire_label(const std::string& l) const { return wire_labels.count(l) != 0; }
  bool is_nonterminal_label(const std::string& l) const {
    return nonterminal_labels.count(l) != 0;
  }
  bool is_vertex_label(const std::string& l) const {
    return is_node_label(l) || is_wire_label(l) || is_nonterminal_label(l);
  }
  bool is_edge_label(const std::string& l) const { return edge_labels.count(l) != 0; }
  bool is_encoding_label(const std::string& l) const {
    return encoding_labels.count(l) != 0;
  }

  /// Throws Error if the vertex label sets overlap or an encoding label is
  /// not an edge label.
  void validate() const;
};

}  // namespace besg
