#include "motifgraph/motif.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace motifgraph {

bool Motif::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end();
}

std::vector<int> Motif::degrees() const {
    std::vector<int> deg(node_count, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

const Motif& get_motif(MotifId id) {
    static const std::array<Motif, 5> catalog = {{
        {MotifId::M1, 3, {{0, 1}, {0, 2}, {1, 2}}},
        {MotifId::M2, 4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}},
        {MotifId::M3, 4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}},
        {MotifId::M4, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}},
        {MotifId::M5, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
    }};
    return catalog[static_cast<int>(id)];
}

std::vector<std::vector<int>> automorphisms(const Motif& m) {
    const int q = m.node_count;
    std::vector<int> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> result;
    do {
        bool ok = true;
        for (auto [u, v] : m.edges) {
            if (!m.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        // Edge count is preserved by a bijection, so mapping edges onto
        // edges already makes perm an automorphism.
        if (ok) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::string motif_name(MotifId id) {
    static const char* names[] = {"M1", "M2", "M3", "M4", "M5"};
    return names[static_cast<int>(id)];
}

MotifId parse_motif(const std::string& name) {
    for (MotifId id : kAllMotifs)
        if (motif_name(id) == name) return id;
    throw std::invalid_argument("unknown motif '" + name + "' (expected M1..M5)");
}

}  // namespace motifgraph
