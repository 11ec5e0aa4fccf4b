#include "motifgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "motifgraph/common.hpp"
#include "motifgraph/diameter.hpp"
#include "motifgraph/rng.hpp"

namespace motifgraph::metrics {

namespace {

std::int64_t ipow64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) {
        require_capacity(r <= std::numeric_limits<std::int64_t>::max() / b, "power overflow");
        r *= b;
    }
    return r;
}

// Exact binomial coefficients up to n = 64 fit the 64-bit mantissa.
long double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0L;
    if (n <= 64) {
        long double c = 1.0L;
        for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        return c;
    }
    return std::exp(std::lgamma(static_cast<long double>(n + 1)) -
                    std::lgamma(static_cast<long double>(k + 1)) -
                    std::lgamma(static_cast<long double>(n - k + 1)));
}

double binom_pmf(int n, double p, int k) {
    if (k < 0 || k > n) return 0.0;
    if (p == 0.0) return k == 0 ? 1.0 : 0.0;
    if (p == 1.0) return k == n ? 1.0 : 0.0;
    const long double v = binomial(n, k) * std::pow(static_cast<long double>(p), k) *
                          std::pow(static_cast<long double>(1.0 - p), n - k);
    return static_cast<double>(v);
}

}  // namespace

// ---- closed-form structural counts ----------------------------------------

std::int64_t node_count(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    const int q = get_motif(motif).node_count;
    return (ipow64(q, level) + q) / 2;
}

std::int64_t basic_edge_count(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    const Motif& m = get_motif(motif);
    return m.edge_count() * ipow64(m.node_count, level - 1);
}

std::int64_t decoration_count(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    const Motif& m = get_motif(motif);
    return m.edge_count() * (ipow64(m.node_count, level - 1) - 1) / (m.node_count - 1);
}

double edge_count_expected(MotifId motif, int level, double p) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    return static_cast<double>(basic_edge_count(motif, level)) +
           p * static_cast<double>(decoration_count(motif, level));
}

double mean_degree_expected(MotifId motif, int level, double p) {
    return 2.0 * edge_count_expected(motif, level, p) /
           static_cast<double>(node_count(motif, level));
}

double mean_degree_limit(MotifId motif, double p) {
    const Motif& m = get_motif(motif);
    const double q = m.node_count, r = m.edge_count();
    return 4.0 * r / (q * (q - 1.0)) * (q - 1.0 + p);
}

std::int64_t motif_count_bare_formula(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    if (level == 1) return 1;
    const int q = get_motif(motif).node_count;
    switch (motif) {
        case MotifId::M1:
        case MotifId::M5:
            return (q + 1) * ipow64(q, level - 2);
        case MotifId::M3:
            return 2 * ipow64(4, level - 1);
        case MotifId::M4:
            return ipow64(4, level - 1);
        case MotifId::M2:
            return (26 * ipow64(4, level - 1) - 17) / 3;
    }
    return 0;
}

std::int64_t motif_count_decorated_formula(MotifId motif, int level) {
    require(level >= 1, "level must be >= 1");
    switch (motif) {
        case MotifId::M1:
            return (7 * ipow64(3, level - 1) + 5) / 2;
        case MotifId::M5:
            return 3 * ipow64(4, level - 1) + 2;
        case MotifId::M3:
            return (2 * ipow64(4, level) - 5) / 3;
        case MotifId::M4:
            return (ipow64(4, level) - 1) / 3;
        case MotifId::M2:
            throw std::invalid_argument("no closed-form decorated count for M2");
    }
    return 0;
}

// ---- degree distribution (M1 family) ---------------------------------------

double DegreeMixture::mean() const {
    double m = 0.0;
    for (const auto& c : components) m += c.level_prob * (c.base_degree + c.binomial_n * p);
    return m;
}

int DegreeMixture::max_degree() const {
    int d = 0;
    for (const auto& c : components) d = std::max(d, c.base_degree + c.binomial_n);
    return d;
}

double DegreeMixture::pmf(int degree) const {
    double v = 0.0;
    for (const auto& c : components)
        v += c.level_prob * binom_pmf(c.binomial_n, p, degree - c.base_degree);
    return v;
}

std::vector<double> DegreeMixture::pmf_table() const {
    std::vector<double> t(max_degree() + 1);
    for (int d = 0; d <= max_degree(); ++d) t[d] = pmf(d);
    return t;
}

DegreeMixture degree_mixture_m1(int level, double p) {
    require(level >= 2, "degree mixture defined for level >= 2");
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    DegreeMixture mix;
    mix.level = level;
    mix.p = p;
    const double s = std::pow(3.0, level - 1);
    for (int l = 1; l <= level - 1; ++l)
        mix.components.push_back({2.0 * std::pow(3.0, -l) / (1.0 + 1.0 / s), 4, 4 * (l - 1)});
    mix.components.push_back({2.0 / (s + 1.0), 2, 2 * (level - 1)});
    return mix;
}

std::complex<double> char_function_m1(int level, double p, double t) {
    require(level >= 2, "characteristic function defined for level >= 2");
    using namespace std::complex_literals;
    const std::complex<double> w = 1.0 + p * (std::exp(1i * t) - 1.0);
    const double s = std::pow(3.0, level - 1);
    const std::complex<double> head = 2.0 * std::exp(4i * t) / (1.0 + 1.0 / s) *
                                      (1.0 - std::pow(w, 4 * (level - 1)) / s) /
                                      (3.0 - std::pow(w, 4));
    const std::complex<double> boundary =
        2.0 * std::exp(2i * t) / (s + 1.0) * std::pow(w, 2 * (level - 1));
    return head + boundary;
}

std::complex<double> char_function_m1_limit(double p, double t) {
    using namespace std::complex_literals;
    const std::complex<double> w = 1.0 + p * (std::exp(1i * t) - 1.0);
    return 2.0 * std::exp(4i * t) / (3.0 - std::pow(w, 4));
}

std::complex<double> char_function_m1_variant_exponent(int level, double p, double t) {
    using namespace std::complex_literals;
    const std::complex<double> w = 1.0 + p * (std::exp(1i * t) - 1.0);
    const double s = std::pow(3.0, level - 1);
    // Literal transcription with the level-independent power in the head
    // term; disagrees with the direct mixture sum at finite level.
    const std::complex<double> head = 2.0 * std::exp(4i * t) / (1.0 + 1.0 / s) *
                                      (1.0 - std::pow(w, 4) / s) / (3.0 - std::pow(w, 4));
    const std::complex<double> boundary =
        2.0 * std::exp(2i * t) / (s + 1.0) * std::pow(w, 2 * (level - 1));
    return head + boundary;
}

// ---- clustering -------------------------------------------------------------

namespace {

double clustering_with_scratch(const Adjacency& adj, int v, std::vector<std::uint8_t>& mark) {
    const int d = adj.degree(v);
    if (d < 2) return 0.0;
    for (const auto* u = adj.begin(v); u != adj.end(v); ++u) mark[*u] = 1;
    std::int64_t links = 0;
    for (const auto* u = adj.begin(v); u != adj.end(v); ++u)
        for (const auto* w = adj.begin(*u); w != adj.end(*u); ++w)
            if (*w > *u && mark[*w]) ++links;
    for (const auto* u = adj.begin(v); u != adj.end(v); ++u) mark[*u] = 0;
    return 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
}

}  // namespace

double clustering_local(const Adjacency& adj, int node) {
    std::vector<std::uint8_t> mark(adj.num_nodes(), 0);
    return clustering_with_scratch(adj, node, mark);
}

double clustering_average(const Adjacency& adj) {
    const int n = adj.num_nodes();
    std::vector<double> values(n);
#pragma omp parallel
    {
        std::vector<std::uint8_t> mark(n, 0);
#pragma omp for schedule(static)
        for (int v = 0; v < n; ++v) values[v] = clustering_with_scratch(adj, v, mark);
    }
    // Serial combine in index order keeps the result thread-count independent.
    double sum = 0.0;
    for (double q : values) sum += q;
    return sum / static_cast<double>(n);
}

double clustering_average_serial(const Adjacency& adj) {
    const int n = adj.num_nodes();
    std::vector<std::uint8_t> mark(n, 0);
    double sum = 0.0;
    for (int v = 0; v < n; ++v) sum += clustering_with_scratch(adj, v, mark);
    return sum / static_cast<double>(n);
}

double clustering_limit(MotifId motif, DecorationMode mode) {
    const bool dec = mode == DecorationMode::fully_decorated;
    // Per-level-class value of Q and the class weight q_base^-l * weight_num.
    double weight_num, inv_base;
    std::function<double(int)> q_of_l;
    if (motif == MotifId::M1) {
        weight_num = 2.0;
        inv_base = 1.0 / 3.0;
        q_of_l = dec ? std::function<double(int)>([](int l) { return 2.0 / (4.0 * l - 1.0); })
                     : std::function<double(int)>([](int l) { return l == 1 ? 0.5 : 1.0 / 3.0; });
    } else if (motif == MotifId::M3) {
        if (!dec) return 0.0;  // no triangles anywhere in the bare graph
        weight_num = 1.0;
        inv_base = 0.25;
        q_of_l = [](int l) { return (6.0 * l - 5.0) / (l * (4.0 * l - 1.0)); };
    } else if (motif == MotifId::M5) {
        weight_num = 3.0;
        inv_base = 0.25;
        q_of_l = dec ? std::function<double(int)>([](int l) {
            return l == 1 ? 3.0 / 5.0 : (12.0 * l + 7.0) / (3.0 * l * (6.0 * l - 1.0));
        })
                     : std::function<double(int)>(
                           [](int l) { return l == 1 ? 8.0 / 15.0 : 2.0 / 5.0; });
    } else {
        throw std::invalid_argument("clustering limit available for M1, M3, M5 only");
    }

    long double sum = 0.0L;
    long double weight = weight_num;
    for (int l = 1; l <= 4000; ++l) {
        weight *= inv_base;
        const long double term = weight * q_of_l(l);
        sum += term;
        // Q is non-increasing from l = 2 on, so the tail is geometric.
        if (l >= 2 && term * inv_base / (1.0L - inv_base) < 1e-15L) break;
    }
    return static_cast<double>(sum);
}

// ---- empirical estimators ----------------------------------------------------

namespace {

template <bool Parallel>
stats::MeanStderr mean_degree_impl(const UnderlyingGraph& g, double p, std::uint64_t seed,
                                   int num_samples) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    require(num_samples >= 1, "num_samples must be >= 1");
    const auto m = static_cast<std::int64_t>(g.decorating_edges.size());
    const auto basic = static_cast<std::int64_t>(g.basic_edges.size());
    const double nodes = g.num_nodes();
    std::vector<double> values(num_samples);
#pragma omp parallel for schedule(static) if (Parallel)
    for (int i = 0; i < num_samples; ++i) {
        const std::uint64_t sub = rng::substream(seed, i);
        std::int64_t cnt = 0;
        for (std::int64_t e = 0; e < m; ++e) cnt += rng::uniform01(sub, e) < p;
        values[i] = 2.0 * static_cast<double>(basic + cnt) / nodes;
    }
    return stats::mean_stderr(values);
}

struct DecorationIncidence {
    std::vector<int> bare_degree;
    std::vector<std::int32_t> offset;  // node -> incident decoration ids
    std::vector<std::int32_t> edge_id;
};

DecorationIncidence decoration_incidence(const UnderlyingGraph& g) {
    const int n = g.num_nodes();
    DecorationIncidence inc;
    inc.bare_degree.assign(n, 0);
    for (auto [u, v] : g.basic_edges) {
        ++inc.bare_degree[u];
        ++inc.bare_degree[v];
    }
    inc.offset.assign(n + 1, 0);
    for (auto [u, v] : g.decorating_edges) {
        ++inc.offset[u + 1];
        ++inc.offset[v + 1];
    }
    std::partial_sum(inc.offset.begin(), inc.offset.end(), inc.offset.begin());
    inc.edge_id.resize(inc.offset[n]);
    std::vector<std::int32_t> cursor(inc.offset.begin(), inc.offset.end() - 1);
    for (std::size_t e = 0; e < g.decorating_edges.size(); ++e) {
        auto [u, v] = g.decorating_edges[e];
        inc.edge_id[cursor[u]++] = static_cast<std::int32_t>(e);
        inc.edge_id[cursor[v]++] = static_cast<std::int32_t>(e);
    }
    return inc;
}

template <bool Parallel>
std::vector<std::int64_t> degree_histogram_impl(const UnderlyingGraph& g, double p,
                                                std::uint64_t seed, int num_samples) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    const DecorationIncidence inc = decoration_incidence(g);
    const int n = g.num_nodes();
    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, inc.bare_degree[v] + inc.offset[v + 1] - inc.offset[v]);
    const auto m = static_cast<std::int64_t>(g.decorating_edges.size());

    std::vector<std::int64_t> hist(max_degree + 1, 0);
#pragma omp parallel if (Parallel)
    {
        std::vector<std::int64_t> local(max_degree + 1, 0);
        std::vector<int> extra(n);
#pragma omp for schedule(static)
        for (int i = 0; i < num_samples; ++i) {
            const std::uint64_t sub = rng::substream(seed, i);
            std::fill(extra.begin(), extra.end(), 0);
            for (std::int64_t e = 0; e < m; ++e) {
                if (rng::uniform01(sub, e) < p) {
                    ++extra[g.decorating_edges[e].first];
                    ++extra[g.decorating_edges[e].second];
                }
            }
            for (int v = 0; v < n; ++v) ++local[inc.bare_degree[v] + extra[v]];
        }
#pragma omp critical
        for (int d = 0; d <= max_degree; ++d) hist[d] += local[d];
    }
    return hist;
}

}  // namespace

stats::MeanStderr mean_degree_samples(const UnderlyingGraph& g, double p, std::uint64_t seed,
                                      int num_samples) {
    return mean_degree_impl<true>(g, p, seed, num_samples);
}

stats::MeanStderr mean_degree_samples_serial(const UnderlyingGraph& g, double p,
                                             std::uint64_t seed, int num_samples) {
    return mean_degree_impl<false>(g, p, seed, num_samples);
}

std::vector<std::int64_t> degree_histogram_samples(const UnderlyingGraph& g, double p,
                                                   std::uint64_t seed, int num_samples) {
    return degree_histogram_impl<true>(g, p, seed, num_samples);
}

std::vector<std::int64_t> degree_histogram_samples_serial(const UnderlyingGraph& g, double p,
                                                          std::uint64_t seed, int num_samples) {
    return degree_histogram_impl<false>(g, p, seed, num_samples);
}

std::vector<std::int64_t> degree_draw_histogram(const UnderlyingGraph& g, double p, std::uint64_t seed,
                                       int num_draws) {
    require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    const DecorationIncidence inc = decoration_incidence(g);
    const int n = g.num_nodes();
    const auto m = static_cast<std::int64_t>(g.decorating_edges.size());
    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, inc.bare_degree[v] + inc.offset[v + 1] - inc.offset[v]);

    std::vector<std::int64_t> hist(max_degree + 1, 0);
#pragma omp parallel
    {
        std::vector<std::int64_t> local(max_degree + 1, 0);
#pragma omp for schedule(static)
        for (int i = 0; i < num_draws; ++i) {
            const std::uint64_t sub = rng::substream(seed, i);
            // counter m is reserved for the node pick; 0..m-1 drive the edges
            const int v = static_cast<int>(rng::below(sub, m, n));
            int deg = inc.bare_degree[v];
            for (std::int32_t j = inc.offset[v]; j < inc.offset[v + 1]; ++j)
                deg += rng::uniform01(sub, inc.edge_id[j]) < p;
            ++local[deg];
        }
#pragma omp critical
        for (int d = 0; d <= max_degree; ++d) hist[d] += local[d];
    }
    return hist;
}

stats::MeanStderr clustering_average_samples(const UnderlyingGraph& g, double p,
                                             std::uint64_t seed, int num_samples) {
    require(num_samples >= 1, "num_samples must be >= 1");
    std::vector<double> values(num_samples);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < num_samples; ++i) {
        const RealizedGraph r = sample(g, p, rng::substream(seed, i));
        const Adjacency adj = build_adjacency(r);
        values[i] = clustering_average_serial(adj);
    }
    return stats::mean_stderr(values);
}

// ---- small-world bound -------------------------------------------------------

double small_world_constant(MotifId motif) {
    switch (motif) {
        case MotifId::M1: return std::log(6.0) / std::log(3.0);
        case MotifId::M2: return std::log(6.0) / std::log(4.0);
        case MotifId::M3: return 2.0 * std::log(6.0) / std::log(4.0);
        case MotifId::M4: return std::log(7.0) / std::log(4.0);
        case MotifId::M5: return std::log(8.0) / std::log(4.0);
    }
    return 0.0;
}

SmallWorldReport small_world_check(MotifId motif, double p, int level) {
    require(p == 0.0 || p == 1.0, "small-world check defined for p = 0 or p = 1");
    const UnderlyingGraph g = build(motif, level);
    const RealizedGraph r = p == 0.0 ? realize_bare(g) : realize_full(g);
    SmallWorldReport rep;
    rep.diameter = diameter(r);
    const double base = mean_degree_expected(motif, level, p);
    rep.bound = small_world_constant(motif) * std::log(static_cast<double>(node_count(motif, level))) /
                std::log(base);
    rep.ratio = static_cast<double>(rep.diameter) / rep.bound;
    // The family constant is the limit of diameter / bound, approached from
    // above; 1.5 absorbs the finite-size excess of every decorated level.
    rep.satisfied = rep.ratio <= 1.5;
    return rep;
}

}  // namespace motifgraph::metrics
