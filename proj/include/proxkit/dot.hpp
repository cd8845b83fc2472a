#pragma once

#include <string>

#include "proxkit/gleason.hpp"
#include "proxkit/poset.hpp"

namespace proxkit {

// Graphviz exports. Node order follows element indices, edges are emitted in
// sorted order, so output is deterministic. Hasse edges are solid; for
// Gleason spaces, R-edges beyond the order are dashed and the classes of the
// symmetric core of R become clusters (when R is a pre-order).
std::string dot_poset(const Poset& p, const std::string& graph_name = "poset");
std::string dot_gleason(const GleasonSpace& g, const std::string& graph_name = "gleason");

}  // namespace proxkit
