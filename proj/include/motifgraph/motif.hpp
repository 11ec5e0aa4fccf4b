#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace motifgraph {

// The five three/four-node building patterns.
enum class MotifId { M1, M2, M3, M4, M5 };

constexpr std::array<MotifId, 5> kAllMotifs = {MotifId::M1, MotifId::M2, MotifId::M3,
                                               MotifId::M4, MotifId::M5};

using Edge = std::pair<int, int>;  // normalized u < v

struct Motif {
    MotifId id;
    int node_count;           // 3 for M1, 4 otherwise
    std::vector<Edge> edges;  // simple, over nodes 0..node_count-1

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
};

// Canonical labeled motif.
//   M1: triangle            M2: triangle plus pendant edge {2,3}
//   M3: 4-cycle             M4: 4-cycle plus diagonal {0,2}
//   M5: complete K4
const Motif& get_motif(MotifId id);

// All node permutations preserving the edge set, by exhaustive search over
// the q! candidates. Small q makes this trivial.
std::vector<std::vector<int>> automorphisms(const Motif& m);

std::string motif_name(MotifId id);
MotifId parse_motif(const std::string& name);  // throws std::invalid_argument

}  // namespace motifgraph
