#include "motifgraph/hierarchy.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "motifgraph/common.hpp"

namespace motifgraph {

namespace {

// Index of the unordered pair {i,j}, i<j, in lexicographic order.
int pair_index(int q, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * q - i * (i + 1) / 2 + (j - i - 1);
}

__int128 ipow(__int128 b, int e) {
    __int128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::vector<int> UnderlyingGraph::internal_nodes() const {
    std::vector<int> out;
    out.reserve(num_nodes() - external.size());
    for (int v = 0; v < num_nodes(); ++v)
        if (!is_external(v)) out.push_back(v);
    return out;
}

std::vector<int> embedding_map(MotifId motif, int prev_num_nodes, int copy_index) {
    const int q = get_motif(motif).node_count;
    const int glue_base = q;
    const int interior_base = q + q * (q - 1) / 2;
    const int prev_interior = prev_num_nodes - q;
    std::vector<int> map(prev_num_nodes);
    for (int v = 0; v < prev_num_nodes; ++v) {
        if (v < q) {
            // external of the copy: kept external when labels agree,
            // otherwise merged into the pair-gluing node
            map[v] = (v == copy_index) ? v : glue_base + pair_index(q, copy_index, v);
        } else {
            map[v] = interior_base + copy_index * prev_interior + (v - q);
        }
    }
    return map;
}

UnderlyingGraph build(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    const Motif& m = get_motif(motif);
    const int q = m.node_count;

    // Closed-form counts up front: |V| = (q^k+q)/2, |E'| = r q^{k-1},
    // |E''| = r (q^{k-1}-1)/(q-1). Reject anything the 32-bit ids cannot hold.
    const __int128 nodes = (ipow(q, level) + q) / 2;
    const __int128 basic = static_cast<__int128>(m.edge_count()) * ipow(q, level - 1);
    const __int128 deco = static_cast<__int128>(m.edge_count()) * (ipow(q, level - 1) - 1) / (q - 1);
    const __int128 cap = std::numeric_limits<std::int32_t>::max();
    require_capacity(nodes <= cap && basic + deco <= cap,
                     "level " + std::to_string(level) + " exceeds 32-bit node/edge indexing");

    UnderlyingGraph g;
    g.motif = motif;
    g.level = 1;
    g.node_level.assign(q, 1);
    g.basic_edges = m.edges;
    g.external.resize(q);
    std::iota(g.external.begin(), g.external.end(), 0);

    for (int k = 2; k <= level; ++k) {
        const int prev_nodes = g.num_nodes();
        const int prev_interior = prev_nodes - q;

        UnderlyingGraph next;
        next.motif = motif;
        next.level = k;
        next.node_level.assign(q + q * (q - 1) / 2 + q * prev_interior, 0);
        next.external = g.external;  // ids 0..q-1 by construction

        for (int v = 0; v < q; ++v) next.node_level[v] = k;
        for (int v = q; v < q + q * (q - 1) / 2; ++v) next.node_level[v] = k - 1;

        next.basic_edges.reserve(q * g.basic_edges.size());
        next.decorating_edges.reserve(q * g.decorating_edges.size() + m.edges.size());
        for (int c = 0; c < q; ++c) {
            const std::vector<int> map = embedding_map(motif, prev_nodes, c);
            for (int v = q; v < prev_nodes; ++v) next.node_level[map[v]] = g.node_level[v];
            for (auto [u, v] : g.basic_edges)
                next.basic_edges.push_back(std::minmax(map[u], map[v]));
            for (auto [u, v] : g.decorating_edges)
                next.decorating_edges.push_back(std::minmax(map[u], map[v]));
        }
        // New decorations mirror the motif between the surviving externals,
        // whose ids equal the motif node labels.
        for (auto e : m.edges) next.decorating_edges.push_back(e);

        std::sort(next.basic_edges.begin(), next.basic_edges.end());
        std::sort(next.decorating_edges.begin(), next.decorating_edges.end());
        g = std::move(next);
    }

    assert(std::adjacent_find(g.basic_edges.begin(), g.basic_edges.end()) == g.basic_edges.end());
    assert(std::adjacent_find(g.decorating_edges.begin(), g.decorating_edges.end()) ==
           g.decorating_edges.end());
    return g;
}

std::map<int, std::int64_t> level_census(const UnderlyingGraph& g) {
    std::map<int, std::int64_t> census;
    for (int lv : g.node_level) ++census[lv];
    return census;
}

Rational boundary_fraction(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    const int q = get_motif(motif).node_count;
    const __int128 nodes = (ipow(q, level) + q) / 2;
    require_capacity(nodes <= std::numeric_limits<std::int64_t>::max(), "level too large");
    return Rational{q, static_cast<std::int64_t>(nodes)};
}

}  // namespace motifgraph
