#pragma once

#include <cstdint>
#include <vector>

#include "motifgraph/sampling.hpp"

namespace motifgraph {

std::vector<std::int32_t> bfs_distances(const Adjacency& adj, int source);

// Throws disconnected_error naming one node from each of two components.
void check_connected(const Adjacency& adj);

// Exact diameter. All-pairs BFS up to 10^4 nodes; beyond that an exact
// eccentricity-pruning search (lower bound from a double sweep, then BFS
// down the level structure until 2*level <= bound). Hard cap 10^6 nodes.
std::int64_t diameter(const Adjacency& adj);
std::int64_t diameter(const RealizedGraph& g);

std::int64_t diameter_all_pairs(const Adjacency& adj);  // OpenMP over sources
std::int64_t diameter_all_pairs_serial(const Adjacency& adj);
std::int64_t diameter_pruned(const Adjacency& adj);

}  // namespace motifgraph
