#pragma once

#include <cstdint>

#include "motifgraph/sampling.hpp"

namespace motifgraph {

struct PatternCount {
    // Subgraphs isomorphic to the motif: distinct (node set, edge subset)
    // images, automorphic relabelings counted once.
    std::uint64_t images = 0;
    // Node sets supporting at least one image.
    std::uint64_t node_sets = 0;
};

// Exhaustive count over all connected induced subgraphs of motif size
// (connected-subgraph enumeration with exclusive extension, then a
// 2^(q(q-1)/2)-entry containment table). Capped at 5000 nodes.
PatternCount count_pattern_embeddings(const RealizedGraph& g, MotifId motif);
PatternCount count_pattern_embeddings_serial(const RealizedGraph& g, MotifId motif);

}  // namespace motifgraph
