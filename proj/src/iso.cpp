#include "besg/iso.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace besg {

namespace {

std::map<std::string, std::string> refine_colors(const Graph& g, int rounds) {
  std::map<std::string, std::string> color;
  for (const auto& [v, label] : g.vertices())
    color[v] = label + "/" + std::to_string(g.in_degree(v)) + "/" +
               std::to_string(g.out_degree(v));
  for (int r = 0; r < rounds; ++r) {
    std::map<std::string, std::string> next;
    for (const auto& [v, c] : color) {
      std::vector<std::string> sig;
      for (const Edge& e : g.out_edges(v)) sig.push_back(">" + e.label + ":" + color.at(e.tgt));
      for (const Edge& e : g.in_edges(v)) sig.push_back("<" + e.label + ":" + color.at(e.src));
      std::sort(sig.begin(), sig.end());
      std::string s = c + "{";
      for (const auto& x : sig) s += x + ";";
      next[v] = s + "}";
    }
    color = std::move(next);
  }
  return color;
}

}  // namespace

std::string refinement_key(const Graph& g) {
  auto color = refine_colors(g, 2);
  std::vector<std::string> all;
  all.reserve(color.size());
  for (const auto& [v, c] : color) all.push_back(c);
  std::sort(all.begin(), all.end());
  std::ostringstream os;
  os << g.size() << "|" << g.edges().size() << "|";
  for (const auto& c : all) os << c << "\n";
  return os.str();
}

std::optional<std::map<std::string, std::string>> graph_isomorphic(const Graph& g,
                                                                   const Graph& h) {
  if (g.size() != h.size() || g.edges().size() != h.edges().size()) return std::nullopt;

  auto gcolor = refine_colors(g, 2);
  auto hcolor = refine_colors(h, 2);
  std::map<std::string, int> ghist, hhist;
  for (const auto& [v, c] : gcolor) ++ghist[c];
  for (const auto& [v, c] : hcolor) ++hhist[c];
  if (ghist != hhist) return std::nullopt;

  // Rarest colours first; break ties by name for determinism.
  std::vector<std::string> order;
  for (const auto& [v, c] : gcolor) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    int ca = ghist.at(gcolor.at(a)), cb = ghist.at(gcolor.at(b));
    if (ca != cb) return ca < cb;
    std::size_t da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });

  std::set<std::string> labels = g.alphabets().edge_labels;
  labels.insert(h.alphabets().edge_labels.begin(), h.alphabets().edge_labels.end());

  std::map<std::string, std::string> fwd;
  std::map<std::string, std::string> bwd;

  auto consistent = [&](const std::string& a, const std::string& b) {
    if (gcolor.at(a) != hcolor.at(b)) return false;
    for (const auto& [x, y] : fwd) {
      for (const auto& l : labels) {
        if (g.has_edge(a, l, x) != h.has_edge(b, l, y)) return false;
        if (g.has_edge(x, l, a) != h.has_edge(y, l, b)) return false;
      }
    }
    return true;
  };

  std::vector<std::string> hnames;
  for (const auto& [v, c] : h.vertices()) hnames.push_back(v);

  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const std::string& a = order[i];
    for (const auto& b : hnames) {
      if (bwd.count(b)) continue;
      if (!consistent(a, b)) continue;
      fwd[a] = b;
      bwd[b] = a;
      if (go(i + 1)) return true;
      fwd.erase(a);
      bwd.erase(b);
    }
    return false;
  };

  if (!go(0)) return std::nullopt;
  return fwd;
}

std::size_t IsoSet::insert(const Graph& g, bool* inserted) {
  std::string key = refinement_key(g);
  auto& bucket = buckets_[key];
  for (std::size_t idx : bucket) {
    if (graph_isomorphic(graphs_[idx], g)) {
      if (inserted) *inserted = false;
      return idx;
    }
  }
  graphs_.push_back(g);
  bucket.push_back(graphs_.size() - 1);
  if (inserted) *inserted = true;
  return graphs_.size() - 1;
}

std::optional<std::size_t> IsoSet::find(const Graph& g) const {
  auto it = buckets_.find(refinement_key(g));
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t idx : it->second)
    if (graph_isomorphic(graphs_[idx], g)) return idx;
  return std::nullopt;
}

}  // namespace besg
