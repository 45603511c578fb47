#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "besg/graph.hpp"

namespace besg {

enum class WireKind { Circle, Attached, Bare };

/// A wire: maximal chain or cycle of wire-vertices with at least one edge
/// among the chain and its attachments. Isolated wire-vertices belong to no
/// wire.
struct Wire {
  WireKind kind = WireKind::Bare;
  /// Wire-vertices in edge order. Circles start at the lexicographically
  /// least vertex and follow edge direction.
  std::vector<std::string> path;
  /// Node-vertices the wire attaches to (zero, one or two).
  std::set<std::string> endpoints;
  /// Attachment at the head (edge node -> path.front()) if any.
  std::optional<std::string> source_node;
  /// Attachment at the tail (edge path.back() -> node) if any.
  std::optional<std::string> target_node;
};

/// All wires of a string graph, ordered by first path vertex.
/// Throws on non-string-graphs.
std::vector<Wire> wires(const Graph& g);

/// Maximal same-label runs along a wire's path. For circles the run
/// structure is cyclic: a common label at the path's two ends joins runs.
std::vector<std::vector<std::string>> label_runs(const Graph& g, const Wire& w);

/// Fewest wire-vertices a wire can be contracted to: one per label run, but
/// never below two for circles and bare wires.
std::size_t minimal_length(const Graph& g, const Wire& w);

/// True when merge_wire_vertices(g, u, v) would succeed.
bool can_merge_wire_vertices(const Graph& g, const std::string& u, const std::string& v);

/// Merges adjacent wire-vertices u -> v into one vertex inheriting u's
/// in-edge and v's out-edge. Rejects merges that would create a self-loop
/// (2-circles), erase a bare wire, or join differently labelled vertices.
/// The surviving vertex keeps v's name when v is an output, else u's.
Graph merge_wire_vertices(const Graph& g, const std::string& u, const std::string& v);

/// Splits wire-vertex v into two adjacent wire-vertices; v's in-edge enters
/// the first, its out-edge leaves the second. Isolated wire-vertices are
/// rejected (they belong to no wire). One of the two keeps the name v: the
/// second when v is an output, else the first; the other is named "v~k".
Graph split_wire_vertex(const Graph& g, const std::string& v);

/// Unique minimal representative of g's wire-homeomorphism class, obtained
/// by greedily contracting wires. Idempotent. Throws on non-string-graphs.
Graph minimal_representative(const Graph& g);

/// Decides g ~ h by comparing minimal representatives up to isomorphism.
bool wire_homeomorphic(const Graph& g, const Graph& h);

namespace detail {

/// Connected component of wire-vertices around v (via edges between
/// wire-vertices only). v must be a wire-vertex.
std::set<std::string> wire_component(const Graph& g, const std::string& v);

/// True if any edge joins the component to a non-wire vertex.
bool component_has_attachment(const Graph& g, const std::set<std::string>& comp);

}  // namespace detail

}  // namespace besg
