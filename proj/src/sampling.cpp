#include "motifgraph/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "motifgraph/common.hpp"
#include "motifgraph/rng.hpp"

namespace motifgraph {

std::int64_t RealizedGraph::num_present_decorations() const {
    return std::count(present.begin(), present.end(), std::uint8_t{1});
}

std::int64_t RealizedGraph::num_edges() const {
    return static_cast<std::int64_t>(base->basic_edges.size()) + num_present_decorations();
}

std::vector<Edge> RealizedGraph::edges() const {
    std::vector<Edge> out = base->basic_edges;
    for (std::size_t e = 0; e < present.size(); ++e)
        if (present[e]) out.push_back(base->decorating_edges[e]);
    return out;
}

RealizedGraph sample(const UnderlyingGraph& g, double p, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    RealizedGraph r;
    r.base = &g;
    r.p = p;
    r.seed = seed;
    r.present.resize(g.decorating_edges.size());
    for (std::size_t e = 0; e < r.present.size(); ++e)
        r.present[e] = rng::uniform01(seed, e) < p ? 1 : 0;
    return r;
}

RealizedGraph realize_bare(const UnderlyingGraph& g) { return sample(g, 0.0, 0); }
RealizedGraph realize_full(const UnderlyingGraph& g) { return sample(g, 1.0, 0); }

void for_each_weighted_subset(int num_decorations, double p,
                              const std::function<void(const WeightedSubset&)>& fn) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    require_capacity(num_decorations >= 0 && num_decorations <= 24,
                     "subset enumeration capped at 24 decorations");
    const int m = num_decorations;
    // Power tables in extended precision; products underflow gracefully.
    std::vector<long double> pow_p(m + 1), pow_q(m + 1);
    pow_p[0] = pow_q[0] = 1.0L;
    for (int i = 1; i <= m; ++i) {
        pow_p[i] = pow_p[i - 1] * static_cast<long double>(p);
        pow_q[i] = pow_q[i - 1] * static_cast<long double>(1.0 - p);
    }
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const int on = std::popcount(mask);
        fn(WeightedSubset{static_cast<std::uint32_t>(mask), pow_p[on] * pow_q[m - on]});
    }
}

std::vector<WeightedSubset> enumerate_weighted(const UnderlyingGraph& g, double p) {
    std::vector<WeightedSubset> out;
    out.reserve(std::size_t{1} << g.decorating_edges.size());
    for_each_weighted_subset(static_cast<int>(g.decorating_edges.size()), p,
                             [&](const WeightedSubset& s) { out.push_back(s); });
    return out;
}

RealizedGraph realize_subset(const UnderlyingGraph& g, std::uint32_t mask) {
    require_capacity(g.decorating_edges.size() <= 32, "subset mask limited to 32 decorations");
    RealizedGraph r;
    r.base = &g;
    r.p = 0.0;
    r.seed = 0;
    r.present.resize(g.decorating_edges.size());
    for (std::size_t e = 0; e < r.present.size(); ++e)
        r.present[e] = (mask >> e) & 1u;
    return r;
}

bool Adjacency::has_edge(int u, int v) const {
    return std::binary_search(begin(u), end(u), v);
}

Adjacency build_adjacency(const RealizedGraph& g) {
    const int n = g.num_nodes();
    Adjacency adj;
    adj.offset.assign(n + 1, 0);

    auto count_edge = [&](Edge e) {
        ++adj.offset[e.first + 1];
        ++adj.offset[e.second + 1];
    };
    for (auto e : g.base->basic_edges) count_edge(e);
    for (std::size_t i = 0; i < g.present.size(); ++i)
        if (g.present[i]) count_edge(g.base->decorating_edges[i]);

    std::partial_sum(adj.offset.begin(), adj.offset.end(), adj.offset.begin());
    adj.neighbors.resize(adj.offset[n]);
    std::vector<std::int32_t> cursor(adj.offset.begin(), adj.offset.end() - 1);
    auto put_edge = [&](Edge e) {
        adj.neighbors[cursor[e.first]++] = e.second;
        adj.neighbors[cursor[e.second]++] = e.first;
    };
    for (auto e : g.base->basic_edges) put_edge(e);
    for (std::size_t i = 0; i < g.present.size(); ++i)
        if (g.present[i]) put_edge(g.base->decorating_edges[i]);

    for (int v = 0; v < n; ++v)
        std::sort(adj.neighbors.begin() + adj.offset[v], adj.neighbors.begin() + adj.offset[v + 1]);
    return adj;
}

}  // namespace motifgraph
