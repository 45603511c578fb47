#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "besg/graph.hpp"

namespace besg {

/// An injective string graph matching m : L -> H̃ for some H̃ ~ H with the
/// no-dangling-wires condition: every edge of H̃ incident to the image of L
/// also touches the image of L's boundary.
struct Matching {
  Graph expanded_target;                   ///< the H̃ actually matched into
  std::map<std::string, std::string> map;  ///< pattern vertex -> H̃ vertex
  std::set<std::string> pattern_inputs;
  std::set<std::string> pattern_outputs;
};

/// Verifies that m.map is an injective label- and edge-preserving
/// homomorphism of l into m.expanded_target satisfying the incidence
/// condition. Fills *why with the first failure when given.
bool is_valid_matching(const Graph& l, const Matching& m, std::string* why = nullptr);

/// All matchings of l into wire-homeomorphic variants of h, deduplicated up
/// to wire-sliding and returned in a deterministic canonical order. Target
/// wires grow as needed: every per-run expansion up to the number of
/// wire-vertices of l is considered. Throws when l or h is not a string
/// graph.
std::vector<Matching> find_matchings(const Graph& l, const Graph& h);

/// Matchings whose image lies inside `region`, a vertex subset of `host`.
/// Wire contraction/growth happens inside the region only; the incidence
/// condition is checked against the whole host. The host need not be a
/// string graph (it may be a production body), but region vertices must be
/// terminal and region wire-vertices must have in- and out-degree at most
/// one. Each returned expanded_target is the whole host with region wires
/// adjusted.
std::vector<Matching> find_matchings_in_region(const Graph& l, const Graph& host,
                                               const std::set<std::string>& region);

}  // namespace besg
