// Command-line front end: graph generation, structural analysis, flow and
// phase tools for the decorated hierarchical graph family.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifgraph/common.hpp"
#include "motifgraph/diameter.hpp"
#include "motifgraph/ising.hpp"
#include "motifgraph/metrics.hpp"
#include "motifgraph/parallel.hpp"
#include "motifgraph/rng.hpp"
#include "motifgraph/serialize.hpp"
#include "motifgraph/verify.hpp"

using namespace motifgraph;

namespace {

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
        os << text;
    }
};

std::string csv_cell(std::optional<double> v) { return v ? format_double(*v) : ""; }

struct GenerateArgs {
    std::string motif = "M1";
    int level = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string format = "json";
    OutputTarget out;
};

void run_generate(const GenerateArgs& a) {
    const UnderlyingGraph g = build(parse_motif(a.motif), a.level);
    const RealizedGraph r = sample(g, a.p, a.seed);
    if (a.format == "json") {
        a.out.write(to_json(r) + "\n");
    } else {
        std::ostringstream os;
        write_edgelist(os, r);
        a.out.write(os.str());
    }
}

struct AnalyzeArgs {
    std::string motif = "M1";
    int level = 1;
    double p = 0.0;
    int samples = 1000;
    std::uint64_t seed = 0;
    OutputTarget out;
};

void run_analyze(const AnalyzeArgs& a) {
    const MotifId id = parse_motif(a.motif);
    const UnderlyingGraph g = build(id, a.level);
    std::ostringstream os;
    os << "metric,name,formula_value,empirical_value,stderr\n";
    auto row = [&](const std::string& metric, const std::string& name, std::optional<double> f,
                   std::optional<double> e, std::optional<double> se) {
        os << metric << ',' << name << ',' << csv_cell(f) << ',' << csv_cell(e) << ','
           << csv_cell(se) << "\n";
    };
    row("counts", "nodes", static_cast<double>(metrics::node_count(id, a.level)),
        static_cast<double>(g.num_nodes()), 0.0);
    row("counts", "basic_edges", static_cast<double>(metrics::basic_edge_count(id, a.level)),
        static_cast<double>(g.basic_edges.size()), 0.0);
    row("counts", "decorations", static_cast<double>(metrics::decoration_count(id, a.level)),
        static_cast<double>(g.decorating_edges.size()), 0.0);

    std::vector<double> edges(a.samples), degrees(a.samples);
    for (int i = 0; i < a.samples; ++i) {
        const auto r = sample(g, a.p, rng::substream(a.seed, i));
        edges[i] = static_cast<double>(r.num_edges());
        degrees[i] = 2.0 * edges[i] / g.num_nodes();
    }
    const auto edge_stats = stats::mean_stderr(edges);
    const auto degree_stats = stats::mean_stderr(degrees);
    row("counts", "edges_expected", metrics::edge_count_expected(id, a.level, a.p),
        edge_stats.mean, edge_stats.stderr_of_mean);
    row("degree", "mean", metrics::mean_degree_expected(id, a.level, a.p), degree_stats.mean,
        degree_stats.stderr_of_mean);
    row("degree", "mean_limit", metrics::mean_degree_limit(id, a.p), std::nullopt, std::nullopt);
    row("boundary", "fraction", boundary_fraction(id, a.level).value(), std::nullopt,
        std::nullopt);
    a.out.write(os.str());
}

struct DegreeDistArgs {
    std::string motif = "M1";
    int level = 2;
    double p = 0.5;
    int samples = 1000;
    std::uint64_t seed = 0;
    OutputTarget out;
};

void run_degree_dist(const DegreeDistArgs& a) {
    const MotifId id = parse_motif(a.motif);
    require(id == MotifId::M1, "--motif: closed-form degree distribution available for M1 only");
    const auto mix = metrics::degree_mixture_m1(a.level, a.p);
    const UnderlyingGraph g = build(id, a.level);
    const auto hist = metrics::degree_histogram_samples(g, a.p, a.seed, a.samples);
    const double total = static_cast<double>(a.samples) * g.num_nodes();
    std::ostringstream os;
    os << "degree,prob_exact,prob_empirical\n";
    const int top = std::max<int>(mix.max_degree(), static_cast<int>(hist.size()) - 1);
    for (int d = 0; d <= top; ++d) {
        const double emp = d < std::ssize(hist) ? hist[d] / total : 0.0;
        os << d << ',' << format_double(mix.pmf(d)) << ',' << format_double(emp) << "\n";
    }
    a.out.write(os.str());
}

struct ClusteringArgs {
    std::string motif = "M1";
    int level = 2;
    double p = 0.0;
    int samples = 100;
    std::uint64_t seed = 0;
    OutputTarget out;
};

void run_clustering(const ClusteringArgs& a) {
    const MotifId id = parse_motif(a.motif);
    const UnderlyingGraph g = build(id, a.level);
    std::optional<double> limit;
    if ((a.p == 0.0 || a.p == 1.0) &&
        (id == MotifId::M1 || id == MotifId::M3 || id == MotifId::M5))
        limit = metrics::clustering_limit(id, a.p == 0.0
                                                  ? metrics::DecorationMode::bare
                                                  : metrics::DecorationMode::fully_decorated);
    double mean, se;
    if (a.p == 0.0 || a.p == 1.0) {
        const RealizedGraph r = a.p == 0.0 ? realize_bare(g) : realize_full(g);
        mean = metrics::clustering_average(build_adjacency(r));
        se = 0.0;
    } else {
        const auto est = metrics::clustering_average_samples(g, a.p, a.seed, a.samples);
        mean = est.mean;
        se = est.stderr_of_mean;
    }
    std::ostringstream os;
    os << "metric,name,formula_value,empirical_value,stderr\n";
    os << "clustering,average," << csv_cell(limit) << ',' << format_double(mean) << ','
       << format_double(se) << "\n";
    a.out.write(os.str());
}

struct DiameterArgs {
    std::string motif = "M1";
    int level = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
    OutputTarget out;
};

void run_diameter(const DiameterArgs& a) {
    const MotifId id = parse_motif(a.motif);
    const UnderlyingGraph g = build(id, a.level);
    const RealizedGraph r = sample(g, a.p, a.seed);
    const std::int64_t diam = diameter(r);
    // bare closed forms hold for the whole family; decorated ones only for M3
    std::optional<double> formula;
    if (a.p == 0.0)
        formula = std::pow(2.0, id == MotifId::M1 || id == MotifId::M5 ? a.level - 1 : a.level);
    else if (a.p == 1.0 && id == MotifId::M3 && a.level >= 2)
        formula = 2.0 * (a.level - 1);
    std::ostringstream os;
    os << "metric,name,formula_value,empirical_value,stderr\n";
    os << "diameter,value," << csv_cell(formula) << ',' << diam << ",0\n";
    if (a.p == 0.0 || a.p == 1.0) {
        const auto sw = metrics::small_world_check(id, a.p, a.level);
        os << "smallworld,bound," << format_double(sw.bound) << ",,\n";
        os << "smallworld,ratio,," << format_double(sw.ratio) << ",\n";
        os << "smallworld,satisfied,," << (sw.satisfied ? 1 : 0) << ",\n";
    }
    a.out.write(os.str());
}

struct FlowArgs {
    double K = 0.0, L = 0.0, h = 0.0, p = 0.0;
    int max_iter = 10000;
    double tol = 1e-9;
    double div_threshold = 1e12;
    OutputTarget out;
};

void run_flow(const FlowArgs& a) {
    const auto res =
        ising::classify_flow({a.K, a.L, a.h, a.p}, a.max_iter, a.div_threshold, a.tol);
    nlohmann::ordered_json doc;
    doc["t"] = res.t;
    doc["fixed_points"]["stable"] =
        res.stable_fp ? nlohmann::json(*res.stable_fp) : nlohmann::json(nullptr);
    doc["fixed_points"]["unstable"] =
        res.unstable_fp ? nlohmann::json(*res.unstable_fp) : nlohmann::json(nullptr);
    doc["critical_K"] =
        res.critical_K ? nlohmann::json(*res.critical_K) : nlohmann::json(nullptr);
    doc["classification"] = ising::flow_class_name(res.classification);
    doc["iterations"] = res.trajectory.size() - 1;
    auto& head = doc["trajectory_head"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < res.trajectory.size() && i < 10; ++i)
        head.push_back(nlohmann::ordered_json::array(
            {res.trajectory[i].x, res.trajectory[i].y, res.trajectory[i].z}));
    a.out.write(doc.dump(2) + "\n");
}

struct PhaseArgs {
    double L_min = 0.05, L_max = 0.3;
    int L_steps = 6;
    double p_min = 0.1, p_max = 1.0;
    int p_steps = 10;
    OutputTarget out;
};

void run_phase(const PhaseArgs& a) {
    const auto rows = ising::phase_diagram(ising::linspace(a.L_min, a.L_max, a.L_steps),
                                           ising::linspace(a.p_min, a.p_max, a.p_steps));
    std::ostringstream os;
    os << "L,p,t,psi,K_star,regime\n";
    for (const auto& row : rows)
        os << format_double(row.L) << ',' << format_double(row.p) << ',' << format_double(row.t)
           << ',' << csv_cell(row.psi) << ',' << csv_cell(row.K_star) << ',' << row.regime
           << "\n";
    a.out.write(os.str());
}

struct VerifyArgs {
    int grid_size = 2;
    std::uint64_t seed = 0;
    OutputTarget out;
};

int run_verify(const VerifyArgs& a) {
    const auto entries = verify::run({a.grid_size, a.seed});
    a.out.write(verify::render(entries));
    return verify::has_failure(entries) ? 1 : 0;
}

void add_output_option(CLI::App* cmd, OutputTarget& out) {
    cmd->add_option("--out", out.path, "write to file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decorated hierarchical random graphs: generation, structure, spin flows"};
    // --h is a coupling flag below, so help must not claim -h
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key = value file mirroring the flag names");

    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap")
        ->envname("MOTIFGRAPH_THREADS")
        ->check(CLI::PositiveNumber);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "emit one realization of the random graph");
    cmd_gen->add_option("--motif", gen.motif, "M1..M5")->required();
    cmd_gen->add_option("--level", gen.level, "construction level k >= 1")->required();
    cmd_gen->add_option("--p", gen.p, "decoration probability");
    cmd_gen->add_option("--seed", gen.seed, "sampling seed");
    cmd_gen->add_option("--format", gen.format, "json|edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));
    add_output_option(cmd_gen, gen.out);

    AnalyzeArgs ana;
    auto* cmd_ana = app.add_subcommand("analyze", "structural counts and mean degree");
    cmd_ana->add_option("--motif", ana.motif)->required();
    cmd_ana->add_option("--level", ana.level)->required();
    cmd_ana->add_option("--p", ana.p);
    cmd_ana->add_option("--samples", ana.samples)->check(CLI::PositiveNumber);
    cmd_ana->add_option("--seed", ana.seed);
    add_output_option(cmd_ana, ana.out);

    DegreeDistArgs dd;
    auto* cmd_dd = app.add_subcommand("degree-dist", "exact and sampled degree distribution");
    cmd_dd->add_option("--motif", dd.motif)->required();
    cmd_dd->add_option("--level", dd.level)->required();
    cmd_dd->add_option("--p", dd.p);
    cmd_dd->add_option("--samples", dd.samples)->check(CLI::PositiveNumber);
    cmd_dd->add_option("--seed", dd.seed);
    add_output_option(cmd_dd, dd.out);

    ClusteringArgs cl;
    auto* cmd_cl = app.add_subcommand("clustering", "average clustering, measured and limiting");
    cmd_cl->add_option("--motif", cl.motif)->required();
    cmd_cl->add_option("--level", cl.level)->required();
    cmd_cl->add_option("--p", cl.p);
    cmd_cl->add_option("--samples", cl.samples)->check(CLI::PositiveNumber);
    cmd_cl->add_option("--seed", cl.seed);
    add_output_option(cmd_cl, cl.out);

    DiameterArgs di;
    auto* cmd_di = app.add_subcommand("diameter", "exact diameter and small-world bound");
    cmd_di->add_option("--motif", di.motif)->required();
    cmd_di->add_option("--level", di.level)->required();
    cmd_di->add_option("--p", di.p);
    cmd_di->add_option("--seed", di.seed);
    add_output_option(cmd_di, di.out);

    FlowArgs fl;
    auto* cmd_fl = app.add_subcommand("ising-flow", "iterate and classify the coupling flow");
    cmd_fl->add_option("--K", fl.K, "basic-bond coupling")->required();
    cmd_fl->add_option("--L", fl.L, "decoration coupling")->required();
    cmd_fl->add_option("--h", fl.h, "external field");
    cmd_fl->add_option("--p", fl.p, "decoration probability")->required();
    cmd_fl->add_option("--max-iter", fl.max_iter)->check(CLI::PositiveNumber);
    cmd_fl->add_option("--tol", fl.tol)->check(CLI::PositiveNumber);
    cmd_fl->add_option("--div-threshold", fl.div_threshold)->check(CLI::PositiveNumber);
    add_output_option(cmd_fl, fl.out);

    PhaseArgs ph;
    auto* cmd_ph = app.add_subcommand("ising-phase", "regime sweep over (L, p)");
    cmd_ph->add_option("--L-min", ph.L_min)->required();
    cmd_ph->add_option("--L-max", ph.L_max)->required();
    cmd_ph->add_option("--L-steps", ph.L_steps)->required()->check(CLI::PositiveNumber);
    cmd_ph->add_option("--p-min", ph.p_min)->required();
    cmd_ph->add_option("--p-max", ph.p_max)->required();
    cmd_ph->add_option("--p-steps", ph.p_steps)->required()->check(CLI::PositiveNumber);
    add_output_option(cmd_ph, ph.out);

    VerifyArgs ve;
    auto* cmd_ve = app.add_subcommand("oracle-verify", "cross-validation report");
    cmd_ve->add_option("--grid-size", ve.grid_size, "points per parameter axis")
        ->check(CLI::PositiveNumber);
    cmd_ve->add_option("--seed", ve.seed);
    add_output_option(cmd_ve, ve.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (threads > 0) par::set_threads(threads);
        if (cmd_gen->parsed()) run_generate(gen);
        if (cmd_ana->parsed()) run_analyze(ana);
        if (cmd_dd->parsed()) run_degree_dist(dd);
        if (cmd_cl->parsed()) run_clustering(cl);
        if (cmd_di->parsed()) run_diameter(di);
        if (cmd_fl->parsed()) run_flow(fl);
        if (cmd_ph->parsed()) run_phase(ph);
        if (cmd_ve->parsed()) return run_verify(ve);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
