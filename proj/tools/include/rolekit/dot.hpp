#pragma once

#include <string>

#include "rolekit/hypergraph.hpp"
#include "rolekit/network.hpp"

namespace rolekit::dot {

/// One digraph; one node per actor and one labelled edge per pair. Each
/// relation gets a fixed colour and line style from its position.
std::string export_dot(const MultiNetwork& net, const std::string& graph_name = "G");

/// Each hyperedge becomes a point-shaped junction node with an arrow from
/// the source into it and plain lines out to the targets.
std::string export_dot(const MultiHypergraph& mh, const std::string& graph_name = "H");

}  // namespace rolekit::dot
