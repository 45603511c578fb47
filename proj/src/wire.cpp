#include "besg/wire.hpp"

#include <algorithm>
#include <deque>

#include "besg/error.hpp"
#include "besg/iso.hpp"

namespace besg {

namespace detail {

std::set<std::string> wire_component(const Graph& g, const std::string& v) {
  std::set<std::string> comp{v};
  std::deque<std::string> todo{v};
  while (!todo.empty()) {
    std::string cur = todo.front();
    todo.pop_front();
    for (const Edge& e : g.edges()) {
      if (e.src == cur && g.is_wire_vertex(e.tgt) && !comp.count(e.tgt)) {
        comp.insert(e.tgt);
        todo.push_back(e.tgt);
      }
      if (e.tgt == cur && g.is_wire_vertex(e.src) && !comp.count(e.src)) {
        comp.insert(e.src);
        todo.push_back(e.src);
      }
    }
  }
  return comp;
}

bool component_has_attachment(const Graph& g, const std::set<std::string>& comp) {
  for (const Edge& e : g.edges()) {
    if (comp.count(e.src) && !g.is_wire_vertex(e.tgt)) return true;
    if (comp.count(e.tgt) && !g.is_wire_vertex(e.src)) return true;
  }
  return false;
}

}  // namespace detail

std::vector<Wire> wires(const Graph& g) {
  StringGraphReport rep = check_string_graph(g);
  if (!rep.ok) throw Error("wires: not a string graph: " + rep.message);

  std::vector<Wire> result;
  std::set<std::string> seen;
  for (const auto& [name, label] : g.vertices()) {
    if (!g.alphabets().is_wire_label(label) || seen.count(name)) continue;
    if (g.degree(name) == 0) continue;  // isolated: not a wire
    std::set<std::string> comp = detail::wire_component(g, name);
    for (const auto& v : comp) seen.insert(v);

    Wire w;
    // Head of a chain: no in-edge from a wire-vertex in the component.
    std::optional<std::string> head;
    for (const auto& v : comp) {
      bool has_wire_pred = false;
      for (const Edge& e : g.in_edges(v))
        if (comp.count(e.src)) has_wire_pred = true;
      if (!has_wire_pred) {
        head = v;
        break;  // comp is ordered; first such vertex is canonical
      }
    }
    if (!head) {
      // Every vertex has a wire predecessor: simple directed cycle.
      w.kind = WireKind::Circle;
      std::string start = *comp.begin();
      std::string cur = start;
      do {
        w.path.push_back(cur);
        std::string next;
        for (const Edge& e : g.out_edges(cur))
          if (comp.count(e.tgt)) next = e.tgt;
        cur = next;
      } while (cur != start);
    } else {
      std::string cur = *head;
      while (true) {
        w.path.push_back(cur);
        std::string next;
        for (const Edge& e : g.out_edges(cur))
          if (comp.count(e.tgt)) next = e.tgt;
        if (next.empty()) break;
        cur = next;
      }
      for (const Edge& e : g.in_edges(w.path.front()))
        if (g.is_node_vertex(e.src)) w.source_node = e.src;
      for (const Edge& e : g.out_edges(w.path.back()))
        if (g.is_node_vertex(e.tgt)) w.target_node = e.tgt;
      if (w.source_node) w.endpoints.insert(*w.source_node);
      if (w.target_node) w.endpoints.insert(*w.target_node);
      w.kind = w.endpoints.empty() ? WireKind::Bare : WireKind::Attached;
    }
    result.push_back(std::move(w));
  }
  std::sort(result.begin(), result.end(),
            [](const Wire& a, const Wire& b) { return a.path.front() < b.path.front(); });
  return result;
}

std::vector<std::vector<std::string>> label_runs(const Graph& g, const Wire& w) {
  std::vector<std::vector<std::string>> runs;
  for (const auto& v : w.path) {
    if (runs.empty() || g.vertex_label(runs.back().back()) != g.vertex_label(v))
      runs.push_back({v});
    else
      runs.back().push_back(v);
  }
  if (w.kind == WireKind::Circle && runs.size() > 1 &&
      g.vertex_label(runs.front().front()) == g.vertex_label(runs.back().back())) {
    // Cyclic wrap-around: the last run continues into the first.
    for (const auto& v : runs.front()) runs.back().push_back(v);
    runs.erase(runs.begin());
  }
  return runs;
}

std::size_t minimal_length(const Graph& g, const Wire& w) {
  std::size_t n = label_runs(g, w).size();
  if (w.kind == WireKind::Attached) return n;
  return std::max<std::size_t>(n, 2);
}

static void check_merge(const Graph& g, const std::string& u, const std::string& v,
                        std::string* why) {
  auto fail = [&](const std::string& m) { *why = m; };
  if (!g.has_vertex(u) || !g.has_vertex(v)) return fail("unknown vertex");
  if (!g.is_wire_vertex(u) || !g.is_wire_vertex(v)) return fail("both vertices must be wire-vertices");
  if (g.vertex_label(u) != g.vertex_label(v)) return fail("wire-vertex labels differ");
  bool fwd = false, bwd = false;
  for (const Edge& e : g.edges()) {
    if (e.src == u && e.tgt == v) fwd = true;
    if (e.src == v && e.tgt == u) bwd = true;
  }
  if (!fwd) return fail("no edge from '" + u + "' to '" + v + "'");
  if (bwd) return fail("merging a 2-circle would create a self-loop");
  if (g.out_degree(u) != 1 || g.in_degree(v) != 1)
    return fail("vertices are not a simple adjacent pair");
  std::set<std::string> comp = detail::wire_component(g, u);
  if (comp.size() == 2 && !detail::component_has_attachment(g, comp))
    return fail("merging would erase a bare wire");
  why->clear();
}

bool can_merge_wire_vertices(const Graph& g, const std::string& u, const std::string& v) {
  std::string why;
  check_merge(g, u, v, &why);
  return why.empty();
}

Graph merge_wire_vertices(const Graph& g, const std::string& u, const std::string& v) {
  std::string why;
  check_merge(g, u, v, &why);
  if (!why.empty()) throw Error("merge_wire_vertices(" + u + ", " + v + "): " + why);

  std::vector<Edge> ins = g.in_edges(u);
  std::vector<Edge> outs = g.out_edges(v);
  // Keep the output end's name so boundary names survive contraction.
  std::string survivor = outs.empty() ? v : u;
  std::string label = g.vertex_label(u);

  Graph out = g;
  out.remove_vertex(u);
  out.remove_vertex(v);
  out.add_vertex(survivor, label);
  for (const Edge& e : ins) out.add_edge(e.src, e.label, survivor);
  for (const Edge& e : outs) out.add_edge(survivor, e.label, e.tgt);
  return out;
}

Graph split_wire_vertex(const Graph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw Error("split_wire_vertex: unknown vertex '" + v + "'");
  if (!g.is_wire_vertex(v)) throw Error("split_wire_vertex: '" + v + "' is not a wire-vertex");
  std::vector<Edge> ins = g.in_edges(v);
  std::vector<Edge> outs = g.out_edges(v);
  if (ins.empty() && outs.empty())
    throw Error("split_wire_vertex: '" + v + "' is isolated and belongs to no wire");
  if (ins.size() > 1 || outs.size() > 1)
    throw Error("split_wire_vertex: '" + v + "' has wire-degree > 1");

  std::string label = g.vertex_label(v);
  std::string chain_label = !outs.empty() ? outs.front().label : ins.front().label;
  std::string fresh = g.fresh_name(v);
  // Outputs keep their name at the tail end; everything else keeps it at the head.
  std::string first = outs.empty() ? fresh : v;
  std::string second = outs.empty() ? v : fresh;

  Graph out = g;
  out.remove_vertex(v);
  out.add_vertex(first, label);
  out.add_vertex(second, label);
  for (const Edge& e : ins) out.add_edge(e.src, e.label, first);
  for (const Edge& e : outs) out.add_edge(second, e.label, e.tgt);
  out.add_edge(first, chain_label, second);
  return out;
}

Graph minimal_representative(const Graph& g) {
  StringGraphReport rep = check_string_graph(g);
  if (!rep.ok) throw Error("minimal_representative: not a string graph: " + rep.message);
  Graph cur = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : cur.edges()) {
      if (!cur.is_wire_vertex(e.src) || !cur.is_wire_vertex(e.tgt)) continue;
      if (can_merge_wire_vertices(cur, e.src, e.tgt)) {
        cur = merge_wire_vertices(cur, e.src, e.tgt);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool wire_homeomorphic(const Graph& g, const Graph& h) {
  return graph_isomorphic(minimal_representative(g), minimal_representative(h)).has_value();
}

}  // namespace besg
