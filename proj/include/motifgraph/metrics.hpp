#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "motifgraph/sampling.hpp"
#include "motifgraph/stats.hpp"

namespace motifgraph::metrics {

// ---- closed-form structural counts ----------------------------------------

std::int64_t node_count(MotifId motif, int level);
std::int64_t basic_edge_count(MotifId motif, int level);
std::int64_t decoration_count(MotifId motif, int level);
double edge_count_expected(MotifId motif, int level, double p);
// 2 E / V with E the expected edge count.
double mean_degree_expected(MotifId motif, int level, double p);
// Limit of the mean degree as the level grows.
double mean_degree_limit(MotifId motif, double p);

// Closed-form count of motif copies inside the bare graph, as reported for
// this family. Known to disagree with exhaustive counting for M3, M4 and M5
// (see pattern_count_bare); the verify report flags the gap.
std::int64_t motif_count_bare_formula(MotifId motif, int level);
// Closed-form count for the fully decorated graph; same caveat.
std::int64_t motif_count_decorated_formula(MotifId motif, int level);

// ---- degree distribution (M1 family) ---------------------------------------

// Node degree of the M1 graph as a mixture: a uniformly random node sits in
// level class l with the class weight, has a fixed bare degree there, and
// gains a Binomial(n, p) number of decorations.
struct MixtureComponent {
    double level_prob = 0.0;
    int base_degree = 0;
    int binomial_n = 0;
};

struct DegreeMixture {
    int level = 0;
    double p = 0.0;
    std::vector<MixtureComponent> components;

    double mean() const;
    int max_degree() const;
    double pmf(int degree) const;
    std::vector<double> pmf_table() const;  // indices 0..max_degree()
};

DegreeMixture degree_mixture_m1(int level, double p);  // level >= 2

// Characteristic function of the mixture, closed form, and its level limit.
std::complex<double> char_function_m1(int level, double p, double t);
std::complex<double> char_function_m1_limit(double p, double t);
// Closed-form variant whose boundary term carries an exponent independent of
// the level; kept only so the verify report can show it drifts from the
// direct mixture sum.
std::complex<double> char_function_m1_variant_exponent(int level, double p, double t);

// ---- clustering -------------------------------------------------------------

// Q(i) = 2 N(i) / (n(i)(n(i)-1)); zero when the degree is below 2.
double clustering_local(const Adjacency& adj, int node);
// Average of Q(i) over all nodes. OpenMP over nodes; the `_serial` twin is
// the reference implementation.
double clustering_average(const Adjacency& adj);
double clustering_average_serial(const Adjacency& adj);

enum class DecorationMode { bare, fully_decorated };

// Level limit of the average clustering, evaluated from the per-level-class
// series with a geometric tail bound below 1e-14. Supported for M1, M3, M5.
double clustering_limit(MotifId motif, DecorationMode mode);

// ---- empirical estimators (counter-based sampling) --------------------------

// Mean degree of `num_samples` independent realizations. Parallel over
// samples; per-sample values land in fixed slots and are combined serially,
// so results do not depend on the thread count.
stats::MeanStderr mean_degree_samples(const UnderlyingGraph& g, double p, std::uint64_t seed,
                                      int num_samples);
stats::MeanStderr mean_degree_samples_serial(const UnderlyingGraph& g, double p,
                                             std::uint64_t seed, int num_samples);

// Degree histogram pooled over all nodes of all sampled realizations.
std::vector<std::int64_t> degree_histogram_samples(const UnderlyingGraph& g, double p,
                                                   std::uint64_t seed, int num_samples);
std::vector<std::int64_t> degree_histogram_samples_serial(const UnderlyingGraph& g, double p,
                                                          std::uint64_t seed, int num_samples);

// Histogram of one uniformly random node's degree per realization:
// independent draws from the exact mixture, suitable for a goodness-of-fit
// test.
std::vector<std::int64_t> degree_draw_histogram(const UnderlyingGraph& g, double p, std::uint64_t seed,
                                       int num_draws);

stats::MeanStderr clustering_average_samples(const UnderlyingGraph& g, double p,
                                             std::uint64_t seed, int num_samples);

// ---- small-world bound -------------------------------------------------------

struct SmallWorldReport {
    std::int64_t diameter = 0;
    double bound = 0.0;      // C * log_{<n_k>} |V_k| with the family constant C
    double ratio = 0.0;      // diameter / bound
    bool satisfied = false;  // ratio within the finite-size allowance
};

// Family constant C of the fully decorated graphs.
double small_world_constant(MotifId motif);
SmallWorldReport small_world_check(MotifId motif, double p, int level);

}  // namespace motifgraph::metrics
