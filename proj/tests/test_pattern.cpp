#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "motifgraph/common.hpp"
#include "motifgraph/pattern.hpp"
#include "motifgraph/rng.hpp"

using namespace motifgraph;

namespace {

// Independent oracle: iterate every node subset of motif size and count the
// label maps landing all motif edges on present edges.
PatternCount naive_count(const RealizedGraph& g, MotifId id) {
    const Motif& m = get_motif(id);
    const Adjacency adj = build_adjacency(g);
    const int n = adj.num_nodes(), q = m.node_count;
    const auto aut = automorphisms(m).size();
    PatternCount out;
    auto process = [&](std::initializer_list<int> nodes) {
        const std::vector<int> s(nodes);
        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t hits = 0;
        do {
            bool ok = true;
            for (auto [u, v] : m.edges)
                if (!adj.has_edge(s[perm[u]], s[perm[v]])) {
                    ok = false;
                    break;
                }
            hits += ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.images += hits / aut;
        out.node_sets += hits > 0;
    };
    if (q == 3) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) process({a, b, c});
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) process({a, b, c, d});
    }
    return out;
}

}  // namespace

TEST_CASE("exhaustive counts, bare graphs") {
    // frozen from the naive oracle; note the closed forms only reproduce the
    // M1 and M2 columns
    const std::uint64_t images[5][3] = {
        {1, 4, 12}, {1, 29, 133}, {1, 14, 56}, {1, 12, 48}, {1, 4, 16}};
    for (int i = 0; i < 5; ++i)
        for (int k = 1; k <= 3; ++k) {
            const UnderlyingGraph g = build(kAllMotifs[i], k);
            CHECK(count_pattern_embeddings(realize_bare(g), kAllMotifs[i]).images ==
                  images[i][k - 1]);
        }
}

TEST_CASE("exhaustive counts, fully decorated level 2") {
    const std::uint64_t images[5] = {8, 74, 15, 31, 5};
    for (int i = 0; i < 5; ++i) {
        const UnderlyingGraph g = build(kAllMotifs[i], 2);
        CHECK(count_pattern_embeddings(realize_full(g), kAllMotifs[i]).images == images[i]);
    }
}

TEST_CASE("enumeration agrees with the naive oracle on random realizations") {
    for (MotifId id : kAllMotifs) {
        const UnderlyingGraph g = build(id, 2);
        for (int trial = 0; trial < 4; ++trial) {
            const RealizedGraph r = sample(g, 0.5, rng::substream(100 + trial, trial));
            const PatternCount fast = count_pattern_embeddings(r, id);
            const PatternCount slow = naive_count(r, id);
            CHECK(fast.images == slow.images);
            CHECK(fast.node_sets == slow.node_sets);
        }
    }
    // one larger instance per node-count class
    for (MotifId id : {MotifId::M1, MotifId::M4}) {
        const UnderlyingGraph g = build(id, 3);
        const RealizedGraph r = sample(g, 0.35, 9);
        const PatternCount fast = count_pattern_embeddings(r, id);
        const PatternCount slow = naive_count(r, id);
        CHECK(fast.images == slow.images);
        CHECK(fast.node_sets == slow.node_sets);
    }
}

TEST_CASE("image count dominates the node-set count") {
    const UnderlyingGraph g = build(MotifId::M2, 2);
    const RealizedGraph r = realize_full(g);
    const PatternCount c = count_pattern_embeddings(r, MotifId::M2);
    CHECK(c.images >= c.node_sets);
    CHECK(c.node_sets == 38);
}

TEST_CASE("cross-motif probes") {
    // triangles inside the decorated 4-node families
    const UnderlyingGraph m5 = build(MotifId::M5, 2);
    const RealizedGraph m5full = realize_full(m5);
    CHECK(count_pattern_embeddings(m5full, MotifId::M1).images ==
          naive_count(m5full, MotifId::M1).images);
    // the bare square family is triangle-free
    const UnderlyingGraph m3 = build(MotifId::M3, 3);
    CHECK(count_pattern_embeddings(realize_bare(m3), MotifId::M1).images == 0);
}

TEST_CASE("parallel equals serial") {
    const UnderlyingGraph g = build(MotifId::M3, 3);
    const RealizedGraph r = sample(g, 0.7, 123);
    const PatternCount a = count_pattern_embeddings(r, MotifId::M3);
    const PatternCount b = count_pattern_embeddings_serial(r, MotifId::M3);
    CHECK(a.images == b.images);
    CHECK(a.node_sets == b.node_sets);
}

TEST_CASE("capacity guard") {
    const UnderlyingGraph g = build(MotifId::M5, 7);  // 8194 nodes
    CHECK_THROWS_AS(count_pattern_embeddings(realize_bare(g), MotifId::M5), capacity_error);
}
