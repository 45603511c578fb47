#include "besg/alphabets.hpp"

#include "besg/error.hpp"

namespace besg {

void Alphabets::validate() const {
  for (const auto& l : node_labels) {
    if (wire_labels.count(l))
      throw Error("alphabets: label '" + l + "' is both a node and a wire label");
    if (nonterminal_labels.count(l))
      throw Error("alphabets: label '" + l + "' is both a node and a nonterminal label");
  }
  for (const auto& l : wire_labels) {
    if (nonterminal_labels.count(l))
      throw Error("alphabets: label '" + l + "' is both a wire and a nonterminal label");
  }
  for (const auto& l : encoding_labels) {
    if (!edge_labels.count(l))
      throw Error("alphabets: encoding label '" + l + "' is not an edge label");
  }
}

}  // namespace besg
