#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "motifgraph/motif.hpp"

namespace motifgraph {

// Deterministic level-k graph grown from a motif. Bonds split into basic
// bonds (always present) and decorations (present with probability p once
// the graph is realized). Node ids follow a fixed layout:
//   0 .. q-1                            external nodes (always)
//   q .. q + q(q-1)/2 - 1               pair-gluing nodes of the top level
//   rest                                copies' interiors, copy 0 first
struct UnderlyingGraph {
    MotifId motif;
    int level = 1;                 // k >= 1
    std::vector<int> node_level;   // 1..level per node; external <=> == level
    std::vector<Edge> basic_edges;       // sorted ascending
    std::vector<Edge> decorating_edges;  // sorted ascending
    std::vector<int> external;           // q ids, canonical order

    int num_nodes() const { return static_cast<int>(node_level.size()); }
    bool is_external(int v) const { return node_level[v] == level; }
    std::vector<int> internal_nodes() const;
};

// Grows level k by gluing q copies of level k-1 pairwise at their external
// nodes (copy i's external j is copy j's external i) and adding one
// decoration per motif edge between the surviving externals.
// Throws std::invalid_argument for k < 1 and capacity_error when counts
// would overflow the 32-bit node index.
UnderlyingGraph build(MotifId motif, int level);

// Node-id map used by build: where copy `copy_index` of the level-(k-1)
// graph lands inside the level-k graph. Exposed so tests can check the
// copies overlap pairwise in exactly one node.
std::vector<int> embedding_map(MotifId motif, int prev_num_nodes, int copy_index);

// Count of nodes per level tag; matches the closed form
// (1/2) q^{k-l} (q-1) for l < k and q for l = k.
std::map<int, std::int64_t> level_census(const UnderlyingGraph& g);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Inner-boundary fraction q / |V_k|; tends to zero, so the family is amenable.
Rational boundary_fraction(MotifId motif, int level);

}  // namespace motifgraph
