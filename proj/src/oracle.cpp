#include "motifgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "motifgraph/common.hpp"

namespace motifgraph::oracle {

namespace {

struct KahanLD {
    long double sum = 0.0L, carry = 0.0L;
    void add(long double v) {
        const long double y = v - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

std::vector<int> internal_of(const UnderlyingGraph& g) { return g.internal_nodes(); }

// Spin of node `v` under internal configuration `config`; boundary nodes are
// fixed, internal node j flips with bit j.
struct SpinLookup {
    std::vector<int> spin;        // resolved for boundary; placeholder for internal
    std::vector<int> bit_of;      // -1 for boundary nodes
    int num_internal = 0;

    SpinLookup(const UnderlyingGraph& g, const BoundaryConfig& b) {
        require(b.spins.size() == g.external.size(), "boundary spin count must equal q");
        for (int s : b.spins) require(s == 1 || s == -1, "boundary spins must be +1 or -1");
        spin.assign(g.num_nodes(), 0);
        bit_of.assign(g.num_nodes(), -1);
        for (std::size_t i = 0; i < g.external.size(); ++i) spin[g.external[i]] = b.spins[i];
        for (int v : internal_of(g)) bit_of[v] = num_internal++;
    }

    int at(int v, std::uint32_t config) const {
        return bit_of[v] < 0 ? spin[v] : ((config >> bit_of[v]) & 1u ? 1 : -1);
    }
};

// Energy of the basic bonds plus field for one internal configuration; the
// field couples once per smallest-pattern copy (internal nodes twice).
long double base_energy(const UnderlyingGraph& g, const IsingParams& params,
                        const SpinLookup& look, std::uint32_t config) {
    long double e = 0.0L;
    for (auto [u, v] : g.basic_edges)
        e += static_cast<long double>(params.K) * look.at(u, config) * look.at(v, config);
    for (int v = 0; v < g.num_nodes(); ++v) {
        const int w = g.is_external(v) ? 1 : 2;
        e += static_cast<long double>(params.h) * w * look.at(v, config);
    }
    return e;
}

}  // namespace

long double partition_conditional(const RealizedGraph& g, const IsingParams& params,
                                  const BoundaryConfig& boundary) {
    const UnderlyingGraph& base = *g.base;
    const SpinLookup look(base, boundary);
    require_capacity(look.num_internal <= 24, "spin enumeration capped at 24 internal nodes");

    std::vector<Edge> deco;
    for (std::size_t e = 0; e < g.present.size(); ++e)
        if (g.present[e]) deco.push_back(base.decorating_edges[e]);

    KahanLD z;
    const std::uint64_t total = std::uint64_t{1} << look.num_internal;
    for (std::uint64_t config = 0; config < total; ++config) {
        const auto c = static_cast<std::uint32_t>(config);
        long double e = base_energy(base, params, look, c);
        for (auto [u, v] : deco)
            e += static_cast<long double>(params.L) * look.at(u, c) * look.at(v, c);
        z.add(std::exp(e));
    }
    return z.sum;
}

long double annealed_partition(const UnderlyingGraph& g, const IsingParams& params,
                               const BoundaryConfig& boundary) {
    require(params.p >= 0.0 && params.p <= 1.0, "p must lie in [0, 1]");
    const auto m = static_cast<int>(g.decorating_edges.size());
    require_capacity(m <= 20, "decoration-subset enumeration capped at 20 edges");
    const SpinLookup look(g, boundary);
    require_capacity(look.num_internal <= 24, "spin enumeration capped at 24 internal nodes");

    std::vector<long double> weight_of(m + 1);
    {
        std::vector<long double> pow_p(m + 1), pow_q(m + 1);
        pow_p[0] = pow_q[0] = 1.0L;
        for (int i = 1; i <= m; ++i) {
            pow_p[i] = pow_p[i - 1] * static_cast<long double>(params.p);
            pow_q[i] = pow_q[i - 1] * static_cast<long double>(1.0 - params.p);
        }
        for (int on = 0; on <= m; ++on) weight_of[on] = pow_p[on] * pow_q[m - on];
    }

    if (look.num_internal > 22) {
        // The per-configuration table would not fit; stream each subset
        // through the plain enumerator instead.
        KahanLD acc;
        const std::uint64_t subsets = std::uint64_t{1} << m;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            const long double w = weight_of[std::popcount(mask)];
            if (w == 0.0L) continue;
            acc.add(w * partition_conditional(realize_subset(g, static_cast<std::uint32_t>(mask)),
                                              params, boundary));
        }
        return acc.sum;
    }

    // Per-configuration base weight and decoration sign mask. A subset then
    // only scales each term by exp(L * (#aligned - #anti)) which takes one of
    // 2m+1 values. The per-subset inner sum adds at most 2^22 positive
    // doubles (relative error well under 1e-12); subset sums are combined
    // with long double compensation.
    const std::uint64_t configs = std::uint64_t{1} << look.num_internal;
    std::vector<double> base(configs);
    std::vector<std::uint32_t> aligned(configs, 0);
    for (std::uint64_t config = 0; config < configs; ++config) {
        const auto c = static_cast<std::uint32_t>(config);
        base[config] = static_cast<double>(std::exp(base_energy(g, params, look, c)));
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.decorating_edges[e];
            if (look.at(u, c) * look.at(v, c) > 0) aligned[config] |= 1u << e;
        }
    }
    std::vector<double> exp_l(2 * m + 1);
    for (int s = -m; s <= m; ++s)
        exp_l[s + m] = static_cast<double>(std::exp(static_cast<long double>(params.L) * s));

    KahanLD acc;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const auto mask32 = static_cast<std::uint32_t>(mask);
        const int on = std::popcount(mask32);
        const long double weight = weight_of[on];
        if (weight == 0.0L) continue;  // degenerate p = 0 or 1
        const double* shifted = exp_l.data() + (m - on);
        double z = 0.0;
        for (std::uint64_t config = 0; config < configs; ++config)
            z += base[config] * shifted[2 * std::popcount(aligned[config] & mask32)];
        acc.add(weight * static_cast<long double>(z));
    }
    return acc.sum;
}

long double CornerValues::by_plus_count(int plus) const {
    switch (plus) {
        case 3: return ppp;
        case 2: return ppm;
        case 1: return pmm;
        case 0: return mmm;
    }
    throw std::invalid_argument("plus count must be 0..3");
}

CornerValues corner_initial(const IsingParams& params) {
    const long double K = params.K, h = params.h;
    return {std::exp(3.0L * (K + h)), std::exp(-K + h), std::exp(-K - h),
            std::exp(3.0L * (K - h))};
}

CornerValues corner_step(const CornerValues& c, const IsingParams& params) {
    const long double u = params.p * std::exp(static_cast<long double>(params.L)) + 1.0L - params.p;
    const long double v =
        params.p * std::exp(-static_cast<long double>(params.L)) + 1.0L - params.p;
    const long double A = c.ppp, B = c.ppm, C = c.pmm, D = c.mmm;
    CornerValues n;
    n.ppp = u * u * u * (A * A * A + 3.0L * A * B * B + 3.0L * B * B * C + C * C * C);
    n.ppm = u * v * v *
            (A * A * B + B * B * B + 2.0L * A * B * C + B * B * D + 2.0L * B * C * C + C * C * D);
    n.pmm = u * v * v *
            (A * B * B + A * C * C + 2.0L * B * B * C + 2.0L * B * C * D + C * C * C + C * D * D);
    n.mmm = u * u * u * (B * B * B + 3.0L * B * C * C + 3.0L * C * C * D + D * D * D);
    return n;
}

CornerValues corners_at_level(int level, const IsingParams& params) {
    require(level >= 1, "level must be >= 1");
    CornerValues c = corner_initial(params);
    for (int l = 2; l <= level; ++l) c = corner_step(c, params);
    return c;
}

double recursion_check(int level, const IsingParams& params) {
    require(level == 2 || level == 3, "recursion check supports levels 2 and 3");
    const UnderlyingGraph g = build(MotifId::M1, level);
    const CornerValues rec = corners_at_level(level, params);

    double worst = 0.0;
    for (int bits = 0; bits < 8; ++bits) {
        BoundaryConfig b;
        b.spins = {(bits & 1) ? 1 : -1, (bits & 2) ? 1 : -1, (bits & 4) ? 1 : -1};
        const int plus = (bits & 1 ? 1 : 0) + (bits & 2 ? 1 : 0) + (bits & 4 ? 1 : 0);
        const long double direct = annealed_partition(g, params, b);
        const long double recursed = rec.by_plus_count(plus);
        worst = std::max(worst, static_cast<double>(std::fabs(direct - recursed) / recursed));
    }
    return worst;
}

namespace {

template <bool Parallel>
GridCheck grid_impl(const std::vector<double>& K_values, const std::vector<double>& L_values,
                    const std::vector<double>& h_values, const std::vector<double>& p_values) {
    struct Cell {
        double e2 = 0.0, e3 = 0.0;
    };
    const std::size_t total =
        K_values.size() * L_values.size() * h_values.size() * p_values.size();
    std::vector<Cell> cells(total);
    const auto np = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (std::int64_t i = 0; i < np; ++i) {
        std::size_t rest = i;
        const double p = p_values[rest % p_values.size()];
        rest /= p_values.size();
        const double h = h_values[rest % h_values.size()];
        rest /= h_values.size();
        const double L = L_values[rest % L_values.size()];
        rest /= L_values.size();
        const double K = K_values[rest];
        const IsingParams params{K, L, h, p};
        cells[i] = {recursion_check(2, params), recursion_check(3, params)};
    }
    GridCheck out;
    for (const Cell& c : cells) {
        out.worst_level2 = std::max(out.worst_level2, c.e2);
        out.worst_level3 = std::max(out.worst_level3, c.e3);
    }
    return out;
}

}  // namespace

GridCheck recursion_check_grid(const std::vector<double>& K_values,
                               const std::vector<double>& L_values,
                               const std::vector<double>& h_values,
                               const std::vector<double>& p_values) {
    return grid_impl<true>(K_values, L_values, h_values, p_values);
}

GridCheck recursion_check_grid_serial(const std::vector<double>& K_values,
                                      const std::vector<double>& L_values,
                                      const std::vector<double>& h_values,
                                      const std::vector<double>& p_values) {
    return grid_impl<false>(K_values, L_values, h_values, p_values);
}

namespace {

RatioRow ratio_from_enumeration(int level, const IsingParams& params) {
    const UnderlyingGraph g = build(MotifId::M1, level);
    const long double A = annealed_partition(g, params, {{1, 1, 1}});
    const long double B = annealed_partition(g, params, {{1, 1, -1}});
    const long double C = annealed_partition(g, params, {{-1, -1, 1}});
    const long double D = annealed_partition(g, params, {{-1, -1, -1}});
    return {level, static_cast<double>(A / C), static_cast<double>(B / C),
            static_cast<double>(D / C), true};
}

}  // namespace

std::vector<RatioRow> ratio_probe(const IsingParams& params, int max_level) {
    require(max_level >= 1, "max_level must be >= 1");
    std::vector<RatioRow> rows;
    for (int l = 1; l <= std::min(max_level, 3); ++l)
        rows.push_back(ratio_from_enumeration(l, params));
    if (max_level > 3) {
        const double t = ising::t_of(params.L, params.p);
        ising::StateTriple s = ising::initial_state(params.K, params.h);
        for (int l = 2; l <= max_level; ++l) {
            s = ising::map_step(s, t);
            if (l > 3) rows.push_back({l, s.x, s.y, s.z, false});
        }
    }
    return rows;
}

double ratio_probe_max_deviation(const IsingParams& params) {
    const double t = ising::t_of(params.L, params.p);
    ising::StateTriple s = ising::initial_state(params.K, params.h);
    double worst = 0.0;
    for (int l = 1; l <= 3; ++l) {
        if (l > 1) s = ising::map_step(s, t);
        const RatioRow direct = ratio_from_enumeration(l, params);
        worst = std::max({worst, std::fabs(direct.x - s.x) / s.x,
                          std::fabs(direct.y - s.y) / s.y, std::fabs(direct.z - s.z) / s.z});
    }
    return worst;
}

}  // namespace motifgraph::oracle
