#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "motifgraph/hierarchy.hpp"

namespace motifgraph {

// One realization of the random graph: every decoration kept or dropped
// independently. `present[e]` answers for decorating_edges[e].
struct RealizedGraph {
    const UnderlyingGraph* base = nullptr;
    std::vector<std::uint8_t> present;
    double p = 0.0;
    std::uint64_t seed = 0;

    int num_nodes() const { return base->num_nodes(); }
    std::int64_t num_present_decorations() const;
    std::int64_t num_edges() const;
    // basic edges followed by the present decorations, each list sorted
    std::vector<Edge> edges() const;
};

// Draws a realization; decoration e is present iff the counter-based bit
// (seed, e) falls below p, so the outcome is independent of evaluation order.
// The realization aliases `g`, which must outlive it; the rvalue overloads
// are deleted so a temporary graph cannot slip through.
RealizedGraph sample(const UnderlyingGraph& g, double p, std::uint64_t seed);
RealizedGraph sample(UnderlyingGraph&&, double, std::uint64_t) = delete;

// Bare (p = 0) and fully decorated (p = 1) realizations, deterministic.
RealizedGraph realize_bare(const UnderlyingGraph& g);
RealizedGraph realize_full(const UnderlyingGraph& g);
RealizedGraph realize_bare(UnderlyingGraph&&) = delete;
RealizedGraph realize_full(UnderlyingGraph&&) = delete;

struct WeightedSubset {
    std::uint32_t mask = 0;
    long double weight = 0.0L;
};

// Visits all 2^m decoration subsets with their exact Bernoulli weights.
// Capped at m <= 24 (capacity_error beyond).
void for_each_weighted_subset(int num_decorations, double p,
                              const std::function<void(const WeightedSubset&)>& fn);
std::vector<WeightedSubset> enumerate_weighted(const UnderlyingGraph& g, double p);

// Realization with an explicit decoration subset (bit e of mask).
RealizedGraph realize_subset(const UnderlyingGraph& g, std::uint32_t mask);
RealizedGraph realize_subset(UnderlyingGraph&&, std::uint32_t) = delete;

// Compressed adjacency over basic edges plus present decorations.
struct Adjacency {
    std::vector<std::int32_t> offset;     // size num_nodes + 1
    std::vector<std::int32_t> neighbors;  // sorted within each node

    int num_nodes() const { return static_cast<int>(offset.size()) - 1; }
    int degree(int v) const { return offset[v + 1] - offset[v]; }
    const std::int32_t* begin(int v) const { return neighbors.data() + offset[v]; }
    const std::int32_t* end(int v) const { return neighbors.data() + offset[v + 1]; }
    bool has_edge(int u, int v) const;
};

Adjacency build_adjacency(const RealizedGraph& g);

}  // namespace motifgraph
