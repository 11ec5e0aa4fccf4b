#include "motifgraph/pattern.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "motifgraph/common.hpp"

namespace motifgraph {

namespace {

int pair_bit(int q, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * q - i * (i + 1) / 2 + (j - i - 1);
}

// table[mask] = number of motif images inside a q-node graph whose edge set
// is `mask`: permutations mapping every motif edge onto a mask bit, divided
// by the automorphism count (the action on images is free).
std::vector<std::uint32_t> containment_table(const Motif& m) {
    const int q = m.node_count;
    const int bits = q * (q - 1) / 2;
    const auto aut = static_cast<std::uint32_t>(automorphisms(m).size());
    std::vector<std::uint32_t> table(std::size_t{1} << bits, 0);
    std::vector<int> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::uint32_t need = 0;
        for (auto [u, v] : m.edges) need |= 1u << pair_bit(q, perm[u], perm[v]);
        for (std::uint32_t mask = 0; mask < table.size(); ++mask)
            if ((mask & need) == need) ++table[mask];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& t : table) t /= aut;
    return table;
}

// Connected-induced-subgraph enumeration with exclusive extension: every
// subset whose minimum node is the root comes out exactly once. The per-call
// vectors stay tiny (subgraph size <= 4).
struct EsuCounter {
    const Adjacency& adj;
    int q;
    const std::vector<std::uint32_t>& table;
    std::vector<std::uint8_t> closed;  // in the subgraph or adjacent to it
    std::array<int, 4> sub{};
    int sub_size = 0;
    std::uint64_t images = 0;
    std::uint64_t node_sets = 0;

    EsuCounter(const Adjacency& a, int q_, const std::vector<std::uint32_t>& t)
        : adj(a), q(q_), table(t), closed(a.num_nodes(), 0) {}

    void emit() {
        std::array<int, 4> s{};
        std::copy_n(sub.begin(), q, s.begin());
        std::sort(s.begin(), s.begin() + q);
        std::uint32_t mask = 0;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                if (adj.has_edge(s[i], s[j])) mask |= 1u << pair_bit(q, i, j);
        const std::uint32_t n = table[mask];
        images += n;
        node_sets += n > 0;
    }

    void extend(std::vector<int> ext, int root) {
        if (sub_size == q) {
            emit();
            return;
        }
        while (!ext.empty()) {
            const int w = ext.back();
            ext.pop_back();
            std::vector<int> grown = ext;
            std::vector<int> newly;
            for (const auto* u = adj.begin(w); u != adj.end(w); ++u) {
                if (*u > root && !closed[*u]) {
                    closed[*u] = 1;
                    newly.push_back(*u);
                    grown.push_back(*u);
                }
            }
            sub[sub_size++] = w;
            extend(std::move(grown), root);
            --sub_size;
            for (int u : newly) closed[u] = 0;
        }
    }

    void run_root(int root) {
        closed[root] = 1;
        std::vector<int> ext, marked;
        for (const auto* u = adj.begin(root); u != adj.end(root); ++u) {
            closed[*u] = 1;
            marked.push_back(*u);
            if (*u > root) ext.push_back(*u);
        }
        sub[0] = root;
        sub_size = 1;
        extend(std::move(ext), root);
        sub_size = 0;
        closed[root] = 0;
        for (int u : marked) closed[u] = 0;
    }
};

template <bool Parallel>
PatternCount count_impl(const RealizedGraph& g, MotifId motif) {
    require_capacity(g.num_nodes() <= 5000, "pattern counting capped at 5000 nodes");
    const Motif& m = get_motif(motif);
    const std::vector<std::uint32_t> table = containment_table(m);
    const Adjacency adj = build_adjacency(g);
    const int n = adj.num_nodes();

    // Per-root tallies into fixed slots; integer sums are scheduling-proof.
    std::vector<std::uint64_t> images(n, 0), sets(n, 0);
#pragma omp parallel if (Parallel)
    {
        EsuCounter counter(adj, m.node_count, table);
#pragma omp for schedule(dynamic, 16)
        for (int v = 0; v < n; ++v) {
            counter.images = 0;
            counter.node_sets = 0;
            counter.run_root(v);
            images[v] = counter.images;
            sets[v] = counter.node_sets;
        }
    }
    PatternCount out;
    out.images = std::accumulate(images.begin(), images.end(), std::uint64_t{0});
    out.node_sets = std::accumulate(sets.begin(), sets.end(), std::uint64_t{0});
    return out;
}

}  // namespace

PatternCount count_pattern_embeddings(const RealizedGraph& g, MotifId motif) {
    return count_impl<true>(g, motif);
}

PatternCount count_pattern_embeddings_serial(const RealizedGraph& g, MotifId motif) {
    return count_impl<false>(g, motif);
}

}  // namespace motifgraph
