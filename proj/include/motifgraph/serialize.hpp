#pragma once

#include <iosfwd>
#include <string>

#include "motifgraph/sampling.hpp"

namespace motifgraph {

// Shortest representation within 15 significant digits; round-trips and is
// byte-stable across runs.
std::string format_double(double v);

// {motif, k, num_nodes, externals, nodes:[{id,level}], basic_edges:[[u,v]],
//  decorating_edges:[[u,v]]}, edge lists ascending.
std::string to_json(const UnderlyingGraph& g);
// Same document restricted to the present decorations, plus p and seed.
std::string to_json(const RealizedGraph& g);

// One "u v B" or "u v D" line per realized edge, basics first, sorted.
void write_edgelist(std::ostream& os, const RealizedGraph& g);

}  // namespace motifgraph
