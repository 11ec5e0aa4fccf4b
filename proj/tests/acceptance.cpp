// Acceptance gate: one check per numbered criterion, each printing a single
// PASS/FAIL line. Run with no arguments for the whole battery or with a
// criterion number. The exit status is the number of failed criteria.
//
// Three criteria compare measured structure against tabulated closed forms
// that provably disagree with the constructed graphs (bare pattern counts for
// M3/M4/M5, decorated clustering constants for M1/M5, decorated diameters for
// M1/M2/M4/M5). Those sub-checks are asserted as stated and fail honestly;
// `oracle-verify` carries the same discrepancies as WARN entries with both
// values side by side.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "motifgraph/diameter.hpp"
#include "motifgraph/metrics.hpp"
#include "motifgraph/oracle.hpp"
#include "motifgraph/pattern.hpp"
#include "motifgraph/serialize.hpp"
#include "motifgraph/verify.hpp"

using namespace motifgraph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome& outcome;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            outcome.pass = false;
            notes << " [FAIL " << what << "]";
        }
    }
    void note(const std::string& what) { notes << " " << what; }
};

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// 1. node / basic / decoration counts, exact, levels 1..8
Outcome criterion_counts() {
    Outcome out;
    Check c{out};
    for (MotifId id : kAllMotifs) {
        const Motif& m = get_motif(id);
        const std::int64_t q = m.node_count, r = m.edge_count();
        for (int k = 1; k <= 8; ++k) {
            const UnderlyingGraph g = build(id, k);
            const bool ok = g.num_nodes() == (ipow(q, k) + q) / 2 &&
                            std::ssize(g.basic_edges) == r * ipow(q, k - 1) &&
                            std::ssize(g.decorating_edges) == r * (ipow(q, k - 1) - 1) / (q - 1);
            c.expect(ok, motif_name(id) + " k=" + std::to_string(k));
        }
    }
    out.detail = "all five families, levels 1..8, zero tolerance" + c.notes.str();
    return out;
}

// 2. expected mean degree: 3-sigma at p=0.5, exact at p in {0,1}
Outcome criterion_mean_degree() {
    Outcome out;
    Check c{out};
    const int k = 6, n = 1000;
    for (MotifId id : kAllMotifs) {
        const UnderlyingGraph g = build(id, k);
        const auto est = metrics::mean_degree_samples(g, 0.5, 20240601, n);
        const double m = static_cast<double>(g.decorating_edges.size());
        const double sigma = 2.0 / g.num_nodes() * std::sqrt(m * 0.25 / n);
        const double gap = std::fabs(est.mean - metrics::mean_degree_expected(id, k, 0.5));
        c.expect(gap <= 3.0 * sigma, motif_name(id) + " p=0.5 gap " + format_double(gap) +
                                         " vs 3sigma " + format_double(3.0 * sigma));
        for (double p : {0.0, 1.0}) {
            const RealizedGraph r = sample(g, p, 1);
            const double measured = 2.0 * static_cast<double>(r.num_edges()) / g.num_nodes();
            c.expect(measured == metrics::mean_degree_expected(id, k, p),
                     motif_name(id) + " p=" + format_double(p));
        }
    }
    out.detail = "level 6, 1000 samples at p=0.5, exact at p in {0,1}" + c.notes.str();
    return out;
}

// 3. degree distribution of the M1 family
Outcome criterion_degree_distribution() {
    Outcome out;
    Check c{out};
    double worst_mean = 0.0;
    for (int k = 2; k <= 12; ++k)
        for (double p : {0.0, 0.3, 0.5, 1.0}) {
            const double table = 4 + 2 * p - 4 * (1 + p) / (std::pow(3.0, k - 1) + 1);
            worst_mean =
                std::max(worst_mean, std::fabs(metrics::degree_mixture_m1(k, p).mean() - table));
        }
    c.expect(worst_mean <= 1e-12, "mixture mean vs table, worst " + format_double(worst_mean));

    const UnderlyingGraph g = build(MotifId::M1, 6);
    auto pmf = metrics::degree_mixture_m1(6, 0.5).pmf_table();
    auto hist = metrics::degree_draw_histogram(g, 0.5, 424242, 10000);
    hist.resize(pmf.size(), 0);
    const auto chi = stats::pearson_chi2(hist, pmf, 10000);
    const double cut = stats::chi2_quantile(0.999, chi.dof);
    c.expect(chi.statistic < cut, "goodness of fit " + format_double(chi.statistic) + " vs " +
                                      format_double(cut));

    const auto full = metrics::degree_histogram_samples(g, 1.0, 1, 1);
    c.expect(std::ssize(full) - 1 == 4 * 6 - 4 && full.back() > 0,
             "max degree at p=1 is 4k-4");
    out.detail = "mixture mean to 1e-12 (k<=12), 10^4-draw fit at 0.999, max degree 4k-4" +
                 c.notes.str();
    return out;
}

// 4. characteristic function: finite level vs limit
Outcome criterion_char_function() {
    Outcome out;
    Check c{out};
    double sup = 0.0;
    for (double p : {0.3, 0.7}) {
        for (int i = 0; i < 100; ++i) {
            const double t = -M_PI + 2.0 * M_PI * i / 99.0;
            sup = std::max(sup, std::abs(metrics::char_function_m1(15, p, t) -
                                         metrics::char_function_m1_limit(p, t)));
        }
        c.expect(std::abs(metrics::char_function_m1(15, p, 0.0) - 1.0) <= 1e-14,
                 "normalization at p=" + format_double(p));
    }
    c.expect(sup < 1e-4, "sup gap " + format_double(sup));
    out.detail = "level 15, 100-point grid on [-pi,pi], sup gap " + format_double(sup) +
                 c.notes.str();
    return out;
}

// 5. clustering constants
Outcome criterion_clustering() {
    Outcome out;
    Check c{out};
    auto average = [](MotifId id, int k, bool full) {
        const UnderlyingGraph g = build(id, k);
        return metrics::clustering_average(build_adjacency(full ? realize_full(g)
                                                                : realize_bare(g)));
    };
    const double m1_bare = average(MotifId::M1, 10, false);
    c.expect(std::fabs(m1_bare - 4.0 / 9) <= 1e-3, "bare M1 k=10: " + format_double(m1_bare));

    const double m1_full = average(MotifId::M1, 12, true);
    c.expect(std::fabs(m1_full - 0.525897) <= 2e-3,
             "decorated M1 k=12 vs literature 0.525897: measured " + format_double(m1_full) +
                 " (known closed-form discrepancy: level-l neighbor links are 6l-2, not 4l)");

    c.expect(average(MotifId::M3, 8, false) == 0.0, "bare M3 exactly 0");

    const double m5_bare = average(MotifId::M5, 8, false);
    c.expect(std::fabs(m5_bare - 0.5) <= 1e-3, "bare M5 k=8: " + format_double(m5_bare));

    const double m5_full = average(MotifId::M5, 8, true);
    c.expect(std::fabs(m5_full - 0.554145) <= 2e-3,
             "decorated M5 k=8 vs literature 0.554145: measured " + format_double(m5_full) +
                 " (known closed-form discrepancy)");

    const double series =
        metrics::clustering_limit(MotifId::M3, metrics::DecorationMode::fully_decorated);
    c.expect(std::fabs(series - 0.1223) <= 5e-5,
             "decorated M3 series vs 0.1223: " + format_double(series));
    out.detail = "six literature constants" + c.notes.str();
    return out;
}

// 6. diameters vs tabulated closed forms
Outcome criterion_diameters() {
    Outcome out;
    Check c{out};
    auto table_full = [](MotifId id, int k) -> std::int64_t {
        switch (id) {
            case MotifId::M1:
            case MotifId::M4:
            case MotifId::M5: return k;
            case MotifId::M2: return k + 1;
            case MotifId::M3: return 2 * (k - 1);
        }
        return 0;
    };
    for (MotifId id : kAllMotifs) {
        const bool doubling = id == MotifId::M1 || id == MotifId::M5;
        for (int k = 1; k <= 6; ++k) {
            const UnderlyingGraph g = build(id, k);
            const std::int64_t bare = diameter(realize_bare(g));
            c.expect(bare == ipow(2, doubling ? k - 1 : k),
                     "bare " + motif_name(id) + " k=" + std::to_string(k) + ": " +
                         std::to_string(bare));
            if (k == 1) continue;  // no decorations exist at level 1; p=1 equals p=0 there
            const std::int64_t full = diameter(realize_full(g));
            c.expect(full == table_full(id, k),
                     "decorated " + motif_name(id) + " k=" + std::to_string(k) + ": measured " +
                         std::to_string(full) + " vs table " + std::to_string(table_full(id, k)));
        }
    }
    out.detail = "bare column holds throughout; decorated column is exact for M3 only "
                 "(known closed-form discrepancy elsewhere)" +
                 c.notes.str();
    return out;
}

// 7. bare pattern counts vs closed forms
Outcome criterion_pattern_counts() {
    Outcome out;
    Check c{out};
    for (MotifId id : kAllMotifs)
        for (int k = 1; k <= 3; ++k) {
            const UnderlyingGraph g = build(id, k);
            const std::uint64_t exhaustive =
                count_pattern_embeddings(realize_bare(g), id).images;
            const auto formula =
                static_cast<std::uint64_t>(metrics::motif_count_bare_formula(id, k));
            c.expect(exhaustive == formula, motif_name(id) + " k=" + std::to_string(k) +
                                                ": exhaustive " + std::to_string(exhaustive) +
                                                " vs closed form " + std::to_string(formula));
        }
    out.detail = "closed forms reproduce exhaustive counts for M1 and M2 only "
                 "(known closed-form discrepancy for M3/M4/M5)" +
                 c.notes.str();
    return out;
}

// 8. enumeration oracle vs level recursion over an 81-point grid
Outcome criterion_oracle() {
    Outcome out;
    Check c{out};
    const auto worst = oracle::recursion_check_grid({-0.6, 0.25, 0.8}, {-0.4, 0.15, 0.5},
                                                    {-0.3, 0.0, 0.4}, {0.2, 0.6, 0.95});
    c.expect(worst.worst_level2 <= 1e-10, "level 2 worst " + format_double(worst.worst_level2));
    c.expect(worst.worst_level3 <= 1e-9, "level 3 worst " + format_double(worst.worst_level3));
    out.detail = "81 points spanning both signs of K and L; worst gaps " +
                 format_double(worst.worst_level2) + " / " + format_double(worst.worst_level3) +
                 c.notes.str();
    return out;
}

// 9. fixed-point algebra
Outcome criterion_fixed_points() {
    Outcome out;
    Check c{out};
    for (double t : {1.05, 1.2, 1.5, 1.79}) {
        const auto fp = ising::fixed_points(t);
        const double r1 =
            std::fabs(ising::phi(t, *fp.stable) - *fp.stable) / std::max(1.0, *fp.stable);
        const double r2 =
            std::fabs(ising::phi(t, *fp.unstable) - *fp.unstable) / std::max(1.0, *fp.unstable);
        c.expect(r1 <= 1e-12 && r2 <= 1e-12, "residuals at t=" + format_double(t));
    }
    const auto tangent = ising::fixed_points(9.0 / 5.0);
    c.expect(std::fabs(*tangent.stable - 3.0) <= 1e-9 &&
                 std::fabs(*tangent.unstable - 3.0) <= 1e-9,
             "double root at t=9/5");
    c.expect(std::fabs(ising::L_star() - 0.25 * std::log(1.8)) <= 1e-15, "L*");
    c.expect(std::fabs(ising::psi(ising::L_star()) - 1.0) <= 1e-12, "psi(L*)=1");
    c.expect(std::fabs(*ising::K_star(ising::L_star(), 1.0) - std::log(3.0) / 4) <= 1e-12,
             "K* at the tangency");
    out.detail = "phi residuals, tangency, threshold line" + c.notes.str();
    return out;
}

// 10. flow trichotomy on a 20x20 grid plus frustrated relaxation
Outcome criterion_flow() {
    Outcome out;
    Check c{out};
    const double L = ising::L_star() / 2;
    int mismatches = 0;
    for (int i = 0; i < 20; ++i) {
        const double p = 0.05 + (1.0 - 0.05) * i / 19.0;
        const double Ks = *ising::K_star(L, p);
        for (int j = 0; j < 20; ++j) {
            const double K = 0.1 + (1.5 - 0.1) * j / 19.0;
            const auto res = ising::classify_flow({K, L, 0.0, p}, 10000, 1e12, 1e-9);
            const auto want = K < Ks ? ising::FlowClass::converges_to_low_fp
                                     : ising::FlowClass::diverges;
            mismatches += res.classification != want;
        }
    }
    c.expect(mismatches == 0, std::to_string(mismatches) + " misclassified cells");

    for (double K : {-1.0, -0.1, 0.1, 1.0}) {
        const auto res = ising::classify_flow({K, -0.3, 0.0, 0.5}, 10000, 1e12, 1e-9);
        const bool ok = res.classification == ising::FlowClass::converges_to_low_fp &&
                        std::fabs(res.trajectory.back().x - *res.stable_fp) <= 1e-9 &&
                        std::fabs(res.trajectory.back().y - 1.0) <= 1e-9 &&
                        std::fabs(res.trajectory.back().z - *res.stable_fp) <= 1e-9;
        c.expect(ok, "frustrated relaxation at K=" + format_double(K));
    }
    out.detail = "20x20 (K, p) grid at L = L*/2 and the L<0 relaxation" + c.notes.str();
    return out;
}

// 11. known discrepancies surface as WARN, not FAIL
Outcome criterion_warnings() {
    Outcome out;
    Check c{out};
    const auto entries = verify::run({2, 0});
    c.expect(!verify::has_failure(entries), "verify report contains no FAIL entries");
    auto find = [&](const std::string& name) -> const verify::Entry* {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    };
    const auto* counts = find("decorated-pattern-count-formulas");
    c.expect(counts && counts->status == verify::Status::warn &&
                 counts->detail.find("formula 13 vs exhaustive 8") != std::string::npos,
             "decorated-count WARN carries 13 vs 8");
    const auto* exponent = find("char-function-boundary-exponent");
    c.expect(exponent && exponent->status == verify::Status::warn,
             "boundary-exponent WARN present");
    out.detail = "verify report marks the tabulated-value gaps WARN" + c.notes.str();
    return out;
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;  // 0 = no stated budget
    std::function<Outcome()> fn;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "structural-counts", 1.0, criterion_counts},
        {2, "mean-degree", 10.0, criterion_mean_degree},
        {3, "degree-distribution", 30.0, criterion_degree_distribution},
        {4, "characteristic-function", 1.0, criterion_char_function},
        {5, "clustering-constants", 120.0, criterion_clustering},
        {6, "diameters", 60.0, criterion_diameters},
        {7, "pattern-counts", 0.0, criterion_pattern_counts},
        {8, "oracle-equivalence", 120.0, criterion_oracle},
        {9, "fixed-point-algebra", 0.0, criterion_fixed_points},
        {10, "flow-trichotomy", 60.0, criterion_flow},
        {11, "discrepancies-as-warnings", 0.0, criterion_warnings},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (const auto& criterion : criteria()) {
        if (only != 0 && criterion.number != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = criterion.fn();
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                             start)
                                   .count();
        if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " [FAIL runtime budget " + format_double(criterion.budget_seconds) +
                              "s exceeded]";
        }
        failures += !outcome.pass;
        std::printf("%s  %2d %s (%.2fs): %s\n", outcome.pass ? "PASS" : "FAIL", criterion.number,
                    criterion.name, elapsed, outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
