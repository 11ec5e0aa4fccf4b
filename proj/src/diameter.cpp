#include "motifgraph/diameter.hpp"

#include <algorithm>
#include <queue>

#include "motifgraph/common.hpp"

namespace motifgraph {

namespace {

// BFS into a caller-provided buffer; returns the farthest node (smallest id
// on ties) and its distance.
std::pair<int, std::int32_t> bfs_into(const Adjacency& adj, int source,
                                      std::vector<std::int32_t>& dist,
                                      std::vector<std::int32_t>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    int far = source;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const auto* u = adj.begin(v); u != adj.end(v); ++u) {
            if (dist[*u] < 0) {
                dist[*u] = dist[v] + 1;
                queue.push_back(*u);
                if (dist[*u] > dist[far]) far = *u;
            }
        }
    }
    return {far, dist[far]};
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const Adjacency& adj, int source) {
    std::vector<std::int32_t> dist(adj.num_nodes());
    std::vector<std::int32_t> queue;
    queue.reserve(adj.num_nodes());
    bfs_into(adj, source, dist, queue);
    return dist;
}

void check_connected(const Adjacency& adj) {
    if (adj.num_nodes() == 0) return;
    const auto dist = bfs_distances(adj, 0);
    const std::int64_t reached = std::count_if(dist.begin(), dist.end(),
                                               [](std::int32_t d) { return d >= 0; });
    if (reached == adj.num_nodes()) return;
    int stray = 0;
    while (dist[stray] >= 0) ++stray;
    throw disconnected_error("graph is disconnected: component of node 0 has " +
                             std::to_string(reached) + " nodes, node " + std::to_string(stray) +
                             " lies in another component of " +
                             std::to_string(adj.num_nodes() - reached) + " nodes");
}

std::int64_t diameter_all_pairs(const Adjacency& adj) {
    const int n = adj.num_nodes();
    std::vector<std::int32_t> ecc(n, 0);
#pragma omp parallel
    {
        std::vector<std::int32_t> dist(n), queue;
        queue.reserve(n);
#pragma omp for schedule(static)
        for (int v = 0; v < n; ++v) ecc[v] = bfs_into(adj, v, dist, queue).second;
    }
    return *std::max_element(ecc.begin(), ecc.end());
}

std::int64_t diameter_all_pairs_serial(const Adjacency& adj) {
    const int n = adj.num_nodes();
    std::vector<std::int32_t> dist(n), queue;
    queue.reserve(n);
    std::int64_t diam = 0;
    for (int v = 0; v < n; ++v)
        diam = std::max<std::int64_t>(diam, bfs_into(adj, v, dist, queue).second);
    return diam;
}

std::int64_t diameter_pruned(const Adjacency& adj) {
    const int n = adj.num_nodes();
    std::vector<std::int32_t> dist(n), queue;
    queue.reserve(n);

    // Double sweep for a lower bound and a root near the middle of a long path.
    const auto [a, ecc0] = bfs_into(adj, 0, dist, queue);
    std::vector<std::int32_t> parent(n, -1);
    std::fill(dist.begin(), dist.end(), -1);
    dist[a] = 0;
    queue.clear();
    queue.push_back(a);
    int b = a;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const auto* u = adj.begin(v); u != adj.end(v); ++u) {
            if (dist[*u] < 0) {
                dist[*u] = dist[v] + 1;
                parent[*u] = v;
                queue.push_back(*u);
                if (dist[*u] > dist[b]) b = *u;
            }
        }
    }
    std::int64_t lower = dist[b];
    int mid = b;
    for (std::int32_t step = 0; step < dist[b] / 2; ++step) mid = parent[mid];

    const auto levels = bfs_distances(adj, mid);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return levels[x] != levels[y] ? levels[x] > levels[y] : x < y; });

    for (int v : order) {
        // Nodes at level d cannot see farther than 2d from each other.
        if (2 * static_cast<std::int64_t>(levels[v]) <= lower) break;
        lower = std::max(lower, static_cast<std::int64_t>(bfs_into(adj, v, dist, queue).second));
    }
    return lower;
}

std::int64_t diameter(const Adjacency& adj) {
    require_capacity(adj.num_nodes() <= 1'000'000, "diameter capped at 10^6 nodes");
    check_connected(adj);
    return adj.num_nodes() <= 10'000 ? diameter_all_pairs(adj) : diameter_pruned(adj);
}

std::int64_t diameter(const RealizedGraph& g) { return diameter(build_adjacency(g)); }

}  // namespace motifgraph
