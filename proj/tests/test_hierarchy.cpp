#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "motifgraph/common.hpp"
#include "motifgraph/hierarchy.hpp"
#include "motifgraph/metrics.hpp"

using namespace motifgraph;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("counts match closed forms through level 8") {
    for (MotifId id : kAllMotifs) {
        const Motif& m = get_motif(id);
        const std::int64_t q = m.node_count, r = m.edge_count();
        for (int k = 1; k <= 8; ++k) {
            const UnderlyingGraph g = build(id, k);
            CHECK(g.num_nodes() == (ipow(q, k) + q) / 2);
            CHECK(std::ssize(g.basic_edges) == r * ipow(q, k - 1));
            CHECK(std::ssize(g.decorating_edges) == r * (ipow(q, k - 1) - 1) / (q - 1));
            CHECK(std::ssize(g.external) == q);
        }
    }
}

TEST_CASE("level-2 snapshot for the triangle family") {
    const UnderlyingGraph g = build(MotifId::M1, 2);
    CHECK(g.node_level == std::vector<int>{2, 2, 2, 1, 1, 1});
    CHECK(g.external == std::vector<int>{0, 1, 2});
    CHECK(g.basic_edges == std::vector<Edge>{{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5},
                                             {3, 4}, {3, 5}, {4, 5}});
    CHECK(g.decorating_edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("documented small builds") {
    const UnderlyingGraph m1k1 = build(MotifId::M1, 1);
    CHECK(m1k1.num_nodes() == 3);
    CHECK(m1k1.basic_edges.size() == 3);
    CHECK(m1k1.decorating_edges.empty());

    const UnderlyingGraph m3k2 = build(MotifId::M3, 2);
    CHECK(m3k2.num_nodes() == 10);
    CHECK(m3k2.basic_edges.size() == 16);
    CHECK(m3k2.decorating_edges.size() == 4);
}

TEST_CASE("level census solves the per-level recursion") {
    {
        const auto census = level_census(build(MotifId::M1, 2));
        CHECK(census == std::map<int, std::int64_t>{{1, 3}, {2, 3}});
    }
    {
        const auto census = level_census(build(MotifId::M1, 3));
        CHECK(census == std::map<int, std::int64_t>{{1, 9}, {2, 3}, {3, 3}});
    }
    {
        const auto census = level_census(build(MotifId::M5, 1));
        CHECK(census == std::map<int, std::int64_t>{{1, 4}});
    }
    // (1/2) q^{k-l} (q-1) for l < k; q at l = k
    for (MotifId id : kAllMotifs) {
        const int q = get_motif(id).node_count;
        const int k = 5;
        const auto census = level_census(build(id, k));
        for (int l = 1; l < k; ++l) CHECK(census.at(l) == ipow(q, k - l) * (q - 1) / 2);
        CHECK(census.at(k) == q);
    }
}

TEST_CASE("external nodes are exactly the level-k nodes") {
    const UnderlyingGraph g = build(MotifId::M4, 3);
    std::set<int> ext(g.external.begin(), g.external.end());
    for (int v = 0; v < g.num_nodes(); ++v)
        CHECK(g.is_external(v) == (ext.count(v) == 1));
}

TEST_CASE("graph is simple with disjoint bond classes") {
    for (MotifId id : kAllMotifs) {
        const UnderlyingGraph g = build(id, 4);
        std::set<Edge> all;
        for (auto e : g.basic_edges) {
            CHECK(e.first < e.second);
            CHECK(all.insert(e).second);
        }
        for (auto e : g.decorating_edges) {
            CHECK(e.first < e.second);
            CHECK(all.insert(e).second);  // also catches basic/decoration overlap
        }
    }
}

TEST_CASE("decorations never touch level-1 nodes") {
    for (MotifId id : kAllMotifs) {
        const UnderlyingGraph g = build(id, 4);
        for (auto [u, v] : g.decorating_edges) {
            CHECK(g.node_level[u] >= 2);
            CHECK(g.node_level[v] >= 2);
        }
    }
}

TEST_CASE("copies overlap pairwise in exactly one node") {
    for (MotifId id : {MotifId::M1, MotifId::M3, MotifId::M5}) {
        const int q = get_motif(id).node_count;
        for (int k = 2; k <= 4; ++k) {
            const int prev_nodes = build(id, k - 1).num_nodes();
            std::vector<std::set<int>> images;
            for (int c = 0; c < q; ++c) {
                const auto map = embedding_map(id, prev_nodes, c);
                images.emplace_back(map.begin(), map.end());
                CHECK(std::ssize(images.back()) == prev_nodes);  // injective
            }
            for (int i = 0; i < q; ++i) {
                for (int j = i + 1; j < q; ++j) {
                    std::vector<int> common;
                    std::set_intersection(images[i].begin(), images[i].end(), images[j].begin(),
                                          images[j].end(), std::back_inserter(common));
                    CHECK(common.size() == 1);
                }
            }
        }
    }
}

TEST_CASE("construction is deterministic") {
    const UnderlyingGraph a = build(MotifId::M2, 4);
    const UnderlyingGraph b = build(MotifId::M2, 4);
    CHECK(a.node_level == b.node_level);
    CHECK(a.basic_edges == b.basic_edges);
    CHECK(a.decorating_edges == b.decorating_edges);
    CHECK(a.external == b.external);
}

TEST_CASE("bare degree of level-1 nodes is a sum of two motif degrees") {
    const std::set<int> expected_m2 = {3, 4, 5};
    for (MotifId id : kAllMotifs) {
        const UnderlyingGraph g = build(id, 3);
        std::vector<int> deg(g.num_nodes(), 0);
        for (auto [u, v] : g.basic_edges) {
            ++deg[u];
            ++deg[v];
        }
        for (int v = 0; v < g.num_nodes(); ++v) {
            if (g.node_level[v] != 1) continue;
            switch (id) {
                case MotifId::M1:
                case MotifId::M3: CHECK(deg[v] == 4); break;
                case MotifId::M5: CHECK(deg[v] == 6); break;
                case MotifId::M2: CHECK(expected_m2.count(deg[v]) == 1); break;
                case MotifId::M4: CHECK((deg[v] >= 4 && deg[v] <= 6)); break;
            }
        }
    }
}

TEST_CASE("boundary fraction shrinks to zero") {
    const Rational r2 = boundary_fraction(MotifId::M1, 2);
    CHECK(r2.num == 3);
    CHECK(r2.den == 6);
    const Rational r5 = boundary_fraction(MotifId::M1, 5);
    CHECK(r5.num == 3);
    CHECK(r5.den == 123);
    double prev = 1.0;
    for (int k = 1; k <= 12; ++k) {
        const double f = boundary_fraction(MotifId::M4, k).value();
        CHECK(f <= prev);
        prev = f;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build(MotifId::M1, 0), std::invalid_argument);
    CHECK_THROWS_AS(build(MotifId::M1, -3), std::invalid_argument);
    CHECK_THROWS_AS(build(MotifId::M5, 40), capacity_error);
}
