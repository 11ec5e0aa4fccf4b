// Times the OpenMP kernels against their serial reference implementations.
#include <chrono>
#include <cstdio>
#include <functional>

#include "motifgraph/diameter.hpp"
#include "motifgraph/metrics.hpp"
#include "motifgraph/oracle.hpp"
#include "motifgraph/parallel.hpp"
#include "motifgraph/pattern.hpp"

using namespace motifgraph;

namespace {

double time_one(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, const std::function<void()>& serial,
            const std::function<void()>& parallel) {
    const double ts = time_one(serial);
    const double tp = time_one(parallel);
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, ts, tp,
                ts / tp);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", par::max_threads());

    const UnderlyingGraph m1k11 = build(MotifId::M1, 11);
    const Adjacency clustering_adj = build_adjacency(realize_full(m1k11));
    report(
        "clustering (M1 k=11 full)",
        [&] { metrics::clustering_average_serial(clustering_adj); },
        [&] { metrics::clustering_average(clustering_adj); });

    const UnderlyingGraph m5k8 = build(MotifId::M5, 8);
    report(
        "mean degree (M5 k=8, 2000)",
        [&] { metrics::mean_degree_samples_serial(m5k8, 0.5, 7, 2000); },
        [&] { metrics::mean_degree_samples(m5k8, 0.5, 7, 2000); });

    const UnderlyingGraph m1k8 = build(MotifId::M1, 8);
    report(
        "degree histogram (500 runs)",
        [&] { metrics::degree_histogram_samples_serial(m1k8, 0.5, 7, 500); },
        [&] { metrics::degree_histogram_samples(m1k8, 0.5, 7, 500); });

    const auto Ls = ising::linspace(0.01, 0.4, 300);
    const auto ps = ising::linspace(0.0, 1.0, 300);
    report(
        "phase sweep (300x300)", [&] { ising::phase_diagram_serial(Ls, ps); },
        [&] { ising::phase_diagram(Ls, ps); });

    const UnderlyingGraph m3k6 = build(MotifId::M3, 6);
    const Adjacency diam_adj = build_adjacency(realize_bare(m3k6));
    report(
        "diameter all-pairs (2050)", [&] { diameter_all_pairs_serial(diam_adj); },
        [&] { diameter_all_pairs(diam_adj); });

    const UnderlyingGraph m2k3 = build(MotifId::M2, 3);
    const RealizedGraph patterns = realize_full(m2k3);
    report(
        "pattern count (M2 k=3 full)",
        [&] { count_pattern_embeddings_serial(patterns, MotifId::M2); },
        [&] { count_pattern_embeddings(patterns, MotifId::M2); });

    const std::vector<double> grid{-0.4, 0.5};
    report(
        "oracle grid (16 points)",
        [&] { oracle::recursion_check_grid_serial(grid, grid, grid, {0.3, 0.8}); },
        [&] { oracle::recursion_check_grid(grid, grid, grid, {0.3, 0.8}); });
    return 0;
}
