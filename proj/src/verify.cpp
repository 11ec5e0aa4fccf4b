#include "motifgraph/verify.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "motifgraph/diameter.hpp"
#include "motifgraph/metrics.hpp"
#include "motifgraph/oracle.hpp"
#include "motifgraph/pattern.hpp"
#include "motifgraph/serialize.hpp"

namespace motifgraph::verify {

namespace {

Entry gate(const std::string& name, bool ok, const std::string& detail) {
    return {ok ? Status::pass : Status::fail, name, detail};
}

Entry structural_counts() {
    for (MotifId id : kAllMotifs) {
        for (int k = 1; k <= 6; ++k) {
            const UnderlyingGraph g = build(id, k);
            if (g.num_nodes() != metrics::node_count(id, k) ||
                std::ssize(g.basic_edges) != metrics::basic_edge_count(id, k) ||
                std::ssize(g.decorating_edges) != metrics::decoration_count(id, k))
                return gate("structural-counts", false,
                            motif_name(id) + " level " + std::to_string(k) +
                                " disagrees with the closed forms");
        }
    }
    return gate("structural-counts", true, "node/bond counts match closed forms, levels 1..6");
}

Entry recursion_grid(const Options& options) {
    const int n = std::max(2, options.grid_size);
    const auto axis = [n](double lo, double hi) { return ising::linspace(lo, hi, n); };
    const auto worst = oracle::recursion_check_grid(axis(-0.6, 0.8), axis(-0.5, 0.6),
                                                    axis(-0.3, 0.4), axis(0.15, 0.95));
    std::ostringstream os;
    os << "worst relative gap: level2 " << format_double(worst.worst_level2) << ", level3 "
       << format_double(worst.worst_level3) << " over " << n * n * n * n << " points";
    return gate("recursion-vs-enumeration",
                worst.worst_level2 <= 1e-10 && worst.worst_level3 <= 1e-9, os.str());
}

Entry ratio_probe() {
    double worst = 0.0;
    for (const auto& p : {oracle::IsingParams{0.3, 0.2, 0.1, 0.7},
                          oracle::IsingParams{-0.5, 0.4, -0.2, 0.5},
                          oracle::IsingParams{0.6, -0.7, 0.0, 0.9}})
        worst = std::max(worst, oracle::ratio_probe_max_deviation(p));
    return gate("ratio-probe-vs-map", worst <= 1e-9,
                "worst enumeration/map gap " + format_double(worst));
}

Entry boundary_symmetry() {
    double worst = 0.0;
    const oracle::IsingParams params{0.35, -0.25, 0.15, 0.4};
    for (int level : {2, 3}) {
        const UnderlyingGraph g = build(MotifId::M1, level);
        const long double b1 = oracle::annealed_partition(g, params, {{1, 1, -1}});
        const long double b2 = oracle::annealed_partition(g, params, {{1, -1, 1}});
        const long double b3 = oracle::annealed_partition(g, params, {{-1, 1, 1}});
        worst = std::max({worst, std::fabs(static_cast<double>(b1 / b2) - 1.0),
                          std::fabs(static_cast<double>(b1 / b3) - 1.0)});
    }
    return gate("boundary-permutation-symmetry", worst <= 1e-13,
                "worst asymmetry " + format_double(worst));
}

Entry spin_flip_symmetry() {
    const oracle::IsingParams params{0.8, 0.5, 0.0, 0.6};
    const UnderlyingGraph g = build(MotifId::M1, 3);
    const long double up = oracle::annealed_partition(g, params, {{1, 1, -1}});
    const long double dn = oracle::annealed_partition(g, params, {{-1, -1, 1}});
    const double gap = std::fabs(static_cast<double>(up / dn) - 1.0);
    return gate("spin-flip-symmetry", gap <= 1e-13,
                "field-free flip asymmetry " + format_double(gap));
}

Entry char_function_agreement() {
    double worst = 0.0;
    for (int k : {3, 6, 10}) {
        for (double p : {0.2, 0.5, 0.9}) {
            const auto pmf = metrics::degree_mixture_m1(k, p).pmf_table();
            for (int i = 0; i <= 40; ++i) {
                const double t = -M_PI + 2.0 * M_PI * i / 40;
                std::complex<double> direct{0.0, 0.0};
                for (std::size_t d = 0; d < pmf.size(); ++d)
                    direct += pmf[d] * std::exp(std::complex<double>(0.0, t * d));
                worst = std::max(worst, std::abs(direct - metrics::char_function_m1(k, p, t)));
            }
        }
    }
    return gate("char-function-vs-mixture", worst <= 1e-12,
                "worst closed-form gap " + format_double(worst));
}

Entry mixture_mean_identity() {
    double worst = 0.0;
    for (int k = 2; k <= 12; ++k)
        for (double p : {0.0, 0.3, 0.5, 1.0})
            worst = std::max(worst, std::fabs(metrics::degree_mixture_m1(k, p).mean() -
                                              metrics::mean_degree_expected(MotifId::M1, k, p)));
    return gate("mixture-mean-identity", worst <= 1e-12,
                "worst mean gap " + format_double(worst) + " for levels 2..12");
}

Entry fixed_point_residuals() {
    double worst = 0.0;
    for (double t : {0.5, 1.05, 1.2, 1.5, 1.79}) {
        const auto fp = ising::fixed_points(t);
        if (fp.stable)
            worst = std::max(worst, std::fabs(ising::phi(t, *fp.stable) - *fp.stable) /
                                        std::max(1.0, *fp.stable));
        if (fp.unstable)
            worst = std::max(worst, std::fabs(ising::phi(t, *fp.unstable) - *fp.unstable) /
                                        std::max(1.0, *fp.unstable));
    }
    const bool anchors = std::fabs(ising::psi(ising::L_star()) - 1.0) <= 1e-12 &&
                         std::fabs(*ising::K_star(ising::L_star(), 1.0) - std::log(3.0) / 4) <=
                             1e-12;
    return gate("fixed-point-residuals", worst <= 1e-12 && anchors,
                "worst phi residual " + format_double(worst));
}

Entry flow_trichotomy() {
    const double L = ising::L_star() / 2;
    int mismatches = 0;
    for (int i = 0; i < 8; ++i) {
        const double p = 0.1 + 0.9 * i / 7.0;
        const double Ks = *ising::K_star(L, p);
        for (double dK : {-0.2, -0.02, 0.02, 0.2}) {
            const auto res = ising::classify_flow({Ks + dK, L, 0.0, p});
            const auto want = dK < 0 ? ising::FlowClass::converges_to_low_fp
                                     : ising::FlowClass::diverges;
            mismatches += res.classification != want;
        }
    }
    return gate("flow-trichotomy-spot", mismatches == 0,
                std::to_string(mismatches) + " misclassified cells of 32");
}

// ---- known closed-form discrepancies, reported as WARN ----------------------

std::string count_table(bool decorated) {
    std::ostringstream os;
    for (MotifId id : kAllMotifs) {
        const int k = 2;
        const UnderlyingGraph g = build(id, k);
        const RealizedGraph r = decorated ? realize_full(g) : realize_bare(g);
        const auto exhaustive = count_pattern_embeddings(r, id);
        std::string formula = "-";
        if (!decorated)
            formula = std::to_string(metrics::motif_count_bare_formula(id, k));
        else if (id != MotifId::M2)
            formula = std::to_string(metrics::motif_count_decorated_formula(id, k));
        os << " " << motif_name(id) << " formula " << formula << " vs exhaustive "
           << exhaustive.images << ";";
    }
    return os.str();
}

Entry bare_count_warn() {
    return {Status::warn, "bare-pattern-count-formulas",
            "closed forms reproduce M1 and M2 only (level 2:" + count_table(false) +
                " exhaustive values cross-checked by two independent counters)"};
}

Entry decorated_count_warn() {
    return {Status::warn, "decorated-pattern-count-formulas",
            "published closed forms do not match exhaustive counting (level 2:" +
                count_table(true) + ")"};
}

Entry char_function_exponent_warn() {
    double adopted = 0.0, variant = 0.0;
    const auto pmf = metrics::degree_mixture_m1(6, 0.5).pmf_table();
    for (int i = 0; i <= 40; ++i) {
        const double t = -M_PI + 2.0 * M_PI * i / 40;
        std::complex<double> direct{0.0, 0.0};
        for (std::size_t d = 0; d < pmf.size(); ++d)
            direct += pmf[d] * std::exp(std::complex<double>(0.0, t * d));
        adopted = std::max(adopted, std::abs(direct - metrics::char_function_m1(6, 0.5, t)));
        variant = std::max(variant,
                           std::abs(direct - metrics::char_function_m1_variant_exponent(6, 0.5, t)));
    }
    return {Status::warn, "char-function-boundary-exponent",
            "finite-level closed form adopts level-dependent exponents (gap to direct sum " +
                format_double(adopted) + "); the printed level-independent variant drifts by " +
                format_double(variant) + " at level 6, p=0.5"};
}

Entry decorated_clustering_warn() {
    const UnderlyingGraph m1 = build(MotifId::M1, 10);
    const UnderlyingGraph m5 = build(MotifId::M5, 7);
    const UnderlyingGraph m3 = build(MotifId::M3, 7);
    const double q1 = metrics::clustering_average(build_adjacency(realize_full(m1)));
    const double q5 = metrics::clustering_average(build_adjacency(realize_full(m5)));
    const double q3 = metrics::clustering_average(build_adjacency(realize_full(m3)));
    std::ostringstream os;
    os << "literature limits vs measured decorated averages: M1 0.525897 vs "
       << format_double(q1) << " (level-l links are 6l-2, not 4l); M5 0.554145 vs "
       << format_double(q5) << "; M3 0.1223 vs " << format_double(q3) << " (agrees)";
    return {Status::warn, "decorated-clustering-constants", os.str()};
}

Entry decorated_diameter_warn() {
    std::ostringstream os;
    const std::int64_t table[5][5] = {{2, 3, 4, 5, 6},    // M1: k
                                      {3, 4, 5, 6, 7},    // M2: k+1
                                      {2, 4, 6, 8, 10},   // M3: 2(k-1)
                                      {2, 3, 4, 5, 6},    // M4: k
                                      {2, 3, 4, 5, 6}};   // M5: k
    for (int i = 0; i < 5; ++i) {
        os << " " << motif_name(kAllMotifs[i]) << ":";
        for (int k = 2; k <= 6; ++k) {
            const UnderlyingGraph g = build(kAllMotifs[i], k);
            const std::int64_t measured = diameter(realize_full(g));
            os << " " << measured << (measured == table[i][k - 2] ? "=" : "!") << table[i][k - 2];
        }
        os << ";";
    }
    return {Status::warn, "decorated-diameter-formulas",
            "BFS vs tabulated closed forms, levels 2..6 (measured{=|!}table):" + os.str()};
}

}  // namespace

std::vector<Entry> run(const Options& options) {
    std::vector<Entry> entries;
    entries.push_back(structural_counts());
    entries.push_back(recursion_grid(options));
    entries.push_back(ratio_probe());
    entries.push_back(boundary_symmetry());
    entries.push_back(spin_flip_symmetry());
    entries.push_back(char_function_agreement());
    entries.push_back(mixture_mean_identity());
    entries.push_back(fixed_point_residuals());
    entries.push_back(flow_trichotomy());
    entries.push_back(bare_count_warn());
    entries.push_back(decorated_count_warn());
    entries.push_back(char_function_exponent_warn());
    entries.push_back(decorated_clustering_warn());
    entries.push_back(decorated_diameter_warn());
    return entries;
}

std::string render(const std::vector<Entry>& entries) {
    std::ostringstream os;
    int pass = 0, warn = 0, fail = 0;
    for (const auto& e : entries) {
        const char* tag = e.status == Status::pass ? "PASS" : e.status == Status::warn ? "WARN"
                                                                                       : "FAIL";
        (e.status == Status::pass ? pass : e.status == Status::warn ? warn : fail) += 1;
        os << tag << "  " << e.name << ": " << e.detail << "\n";
    }
    os << pass << " pass, " << warn << " warn, " << fail << " fail\n";
    return os.str();
}

bool has_failure(const std::vector<Entry>& entries) {
    for (const auto& e : entries)
        if (e.status == Status::fail) return true;
    return false;
}

}  // namespace motifgraph::verify
