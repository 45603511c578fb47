#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "besg/graph.hpp"

namespace besg {

/// Label- and edge-preserving vertex bijection between g and h, or nullopt.
/// Deterministic: vertices are tried in a fixed canonical search order.
std::optional<std::map<std::string, std::string>> graph_isomorphic(const Graph& g,
                                                                   const Graph& h);

/// Set of graphs modulo isomorphism. Insertion assigns stable indices;
/// lookups bucket by a refinement invariant and fall back to exact
/// isomorphism checks within the bucket.
class IsoSet {
 public:
  /// Index of g's class; appends a new class when unseen.
  std::size_t insert(const Graph& g, bool* inserted = nullptr);
  std::optional<std::size_t> find(const Graph& g) const;
  const Graph& at(std::size_t i) const { return graphs_.at(i); }
  std::size_t size() const { return graphs_.size(); }

 private:
  std::map<std::string, std::vector<std::size_t>> buckets_;
  std::vector<Graph> graphs_;
};

/// Isomorphism-invariant bucket key (colour refinement); equal graphs get
/// equal keys, unequal keys imply non-isomorphic.
std::string refinement_key(const Graph& g);

}  // namespace besg
