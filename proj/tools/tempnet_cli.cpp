// Command-line front end: scan, generate, cluster, shuffle, nmi, analytic.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tempnet/core.hpp"
#include "tempnet/evaluation.hpp"
#include "tempnet/io.hpp"
#include "tempnet/louvain.hpp"
#include "tempnet/modularity.hpp"
#include "tempnet/randomization.hpp"
#include "tempnet/selection.hpp"
#include "tempnet/synthesis.hpp"

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

tempnet::GroundTruth read_truth(const std::string& path) {
    tempnet::GroundTruth t;
    t.partition = tempnet::read_partition_file(path);
    return t;
}

int run_scan(const std::string& input, int max_slices, int runs, std::uint64_t seed,
             double attempts_per_edge, int replicates, const std::string& truth_path,
             const std::string& out_prefix, const std::string& format) {
    tempnet::ContactSequence cs = tempnet::parse_contacts_file(input);
    tempnet::ScanConfig cfg;
    cfg.n_max = max_slices;
    cfg.opt.runs = runs;
    cfg.opt.seed = seed;
    cfg.attempts_per_edge = attempts_per_edge;
    cfg.shuffle_replicates = replicates;

    tempnet::GroundTruth truth;
    const tempnet::GroundTruth* truth_ptr = nullptr;
    if (!truth_path.empty()) {
        truth = read_truth(truth_path);
        truth_ptr = &truth;
    }

    tempnet::ScanResult result = tempnet::corrected_scan(cs, cfg, truth_ptr);
    if (format == "json") {
        auto out = open_out(out_prefix + ".json");
        out << tempnet::scan_to_json(result);
    } else {
        auto out = open_out(out_prefix + ".csv");
        tempnet::write_scan_csv(result, out);
    }
    std::cout << "selected: " << result.selected << "\n";
    return 0;
}

int run_generate(const std::string& kind, int reps, int clique_size, double noise, int k,
                 std::uint64_t seed, const std::string& out_prefix) {
    tempnet::SyntheticData data;
    if (kind == "hidden-cliques")
        data = tempnet::gen_hidden_cliques(reps, clique_size, noise, seed);
    else if (kind == "time-cliques")
        data = tempnet::gen_time_separated_cliques(k, clique_size, seed);
    else
        throw std::invalid_argument("unknown kind: " + kind);
    {
        auto out = open_out(out_prefix + ".contacts");
        tempnet::write_contacts(data.contacts, out);
    }
    {
        auto out = open_out(out_prefix + ".truth");
        tempnet::write_partition(data.truth.partition, out);
    }
    return 0;
}

int run_cluster(const std::string& input, int n_slices, int runs, std::uint64_t seed,
                const std::string& out_path) {
    tempnet::ContactSequence cs = tempnet::parse_contacts_file(input);
    tempnet::SliceStack stack = tempnet::slice(cs, n_slices);
    tempnet::OptimizerConfig cfg;
    cfg.runs = runs;
    cfg.seed = seed;
    tempnet::ClusterResult res = tempnet::cluster_best(stack, cfg);
    auto out = open_out(out_path);
    tempnet::write_partition(res.partition, out);
    std::cout << "modularity: " << fmt12(res.quality) << "\n";
    return 0;
}

int run_shuffle(const std::string& input, int n_slices, std::uint64_t seed,
                double attempts_per_edge, const std::string& out_path) {
    tempnet::ContactSequence cs = tempnet::parse_contacts_file(input);
    tempnet::SliceStack stack = tempnet::slice(cs, n_slices);
    tempnet::SliceStack shuffled = tempnet::shuffle_stack(stack, seed, attempts_per_edge);
    auto out = open_out(out_path);
    out << "# u v slice\n";
    for (int s = 0; s < shuffled.n_slices(); ++s)
        for (const auto& [u, v] : shuffled.slice(s).edges())
            out << u << ' ' << v << ' ' << s << '\n';
    return 0;
}

int run_nmi(const std::string& a_path, const std::string& b_path) {
    tempnet::Partition a = tempnet::read_partition_file(a_path);
    tempnet::Partition b = tempnet::read_partition_file(b_path);
    double value;
    if (a.n_slices == b.n_slices) {
        value = tempnet::nmi(a, b);
    } else {
        // bring the coarser partition to the finer granularity by
        // time-interval containment
        tempnet::GroundTruth coarse;
        if (a.n_slices < b.n_slices) {
            coarse.partition = a;
            value = tempnet::nmi_against_truth(b, coarse);
        } else {
            coarse.partition = b;
            value = tempnet::nmi_against_truth(a, coarse);
        }
    }
    std::cout << fmt12(value) << "\n";
    return 0;
}

int run_analytic(const std::string& input, const std::string& partition_path, int max_slices,
                 const std::string& out_path) {
    tempnet::ContactSequence cs = tempnet::parse_contacts_file(input);
    tempnet::SliceStack aggregate = tempnet::slice(cs, 1);
    const tempnet::Snapshot& g = aggregate.slice(0);
    tempnet::Partition p = tempnet::read_partition_file(partition_path);
    if (p.n_vertices != g.n_vertices() || p.n_slices != 1)
        throw std::invalid_argument("partition does not cover all vertices of the aggregate");
    tempnet::ReplicatedModel model = tempnet::ReplicatedModel::from_partition(g, p);
    auto out = open_out(out_path);
    out << "n_slices,analytic,empirical\n";
    for (int S = 1; S <= max_slices; ++S) {
        double analytic = tempnet::replicated_modularity(model, S);
        double empirical = tempnet::modularity_multislice(
            tempnet::gen_replicated(g, S), tempnet::replicate_partition(p, S));
        out << S << ',' << fmt12(analytic) << ',' << fmt12(empirical) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slice-count selection for temporal-network clustering via corrected multi-slice modularity"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "Scan slice counts and report the corrected-modularity maximizer");
    std::string scan_input, scan_truth, scan_out = "scan", scan_format = "csv";
    int scan_max = 30, scan_runs = 10, scan_reps = 1;
    std::uint64_t scan_seed = 42;
    double scan_attempts = 10.0;
    scan->add_option("--input", scan_input, "contact file")->required();
    scan->add_option("--max-slices", scan_max, "largest slice count to try");
    scan->add_option("--runs", scan_runs, "Louvain repetitions per slicing");
    scan->add_option("--seed", scan_seed, "master seed");
    scan->add_option("--attempts-per-edge", scan_attempts, "swap attempts per edge");
    scan->add_option("--replicates", scan_reps, "shuffled replicates averaged into m_r");
    scan->add_option("--truth", scan_truth, "ground-truth file for NMI");
    scan->add_option("--out", scan_out, "output prefix");
    scan->add_option("--format", scan_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic benchmark with ground truth");
    std::string gen_kind, gen_out = "synthetic";
    int gen_reps = 5, gen_csize = 8, gen_k = 5;
    double gen_noise = 0.2;
    std::uint64_t gen_seed = 42;
    gen->add_option("--kind", gen_kind, "hidden-cliques|time-cliques")
        ->required()
        ->check(CLI::IsMember({"hidden-cliques", "time-cliques"}));
    gen->add_option("--reps", gen_reps, "pattern repetitions (hidden-cliques)");
    gen->add_option("--clique-size", gen_csize, "vertices per clique");
    gen->add_option("--noise", gen_noise, "cross-group noise density (hidden-cliques)");
    gen->add_option("--k", gen_k, "number of cliques (time-cliques)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output prefix");

    // cluster
    auto* clu = app.add_subcommand("cluster", "Cluster at one slice count and write the partition");
    std::string clu_input, clu_out = "partition.txt";
    int clu_slices = 1, clu_runs = 10;
    std::uint64_t clu_seed = 42;
    clu->add_option("--input", clu_input, "contact file")->required();
    clu->add_option("--slices", clu_slices, "slice count");
    clu->add_option("--runs", clu_runs, "Louvain repetitions");
    clu->add_option("--seed", clu_seed, "seed");
    clu->add_option("--out", clu_out, "partition file");

    // shuffle
    auto* shf = app.add_subcommand("shuffle", "Degree-preserving per-slice shuffle, written as a sliced dump");
    std::string shf_input, shf_out = "shuffled.txt";
    int shf_slices = 1;
    std::uint64_t shf_seed = 42;
    double shf_attempts = 10.0;
    shf->add_option("--input", shf_input, "contact file")->required();
    shf->add_option("--slices", shf_slices, "slice count");
    shf->add_option("--seed", shf_seed, "seed");
    shf->add_option("--attempts-per-edge", shf_attempts, "swap attempts per edge");
    shf->add_option("--out", shf_out, "output file");

    // nmi
    auto* nm = app.add_subcommand("nmi", "Normalized mutual information of two partition files");
    std::string nmi_a, nmi_b;
    nm->add_option("--a", nmi_a, "first partition file")->required();
    nm->add_option("--b", nmi_b, "second partition file")->required();

    // analytic
    auto* ana = app.add_subcommand("analytic", "Replicated-network closed form vs direct evaluation");
    std::string ana_input, ana_partition, ana_out = "analytic.csv";
    int ana_max = 20;
    ana->add_option("--input", ana_input, "contact file")->required();
    ana->add_option("--partition", ana_partition, "one-slice partition file")->required();
    ana->add_option("--max-slices", ana_max, "largest replication count");
    ana->add_option("--out", ana_out, "output CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (scan->parsed())
            return run_scan(scan_input, scan_max, scan_runs, scan_seed, scan_attempts, scan_reps,
                            scan_truth, scan_out, scan_format);
        if (gen->parsed())
            return run_generate(gen_kind, gen_reps, gen_csize, gen_noise, gen_k, gen_seed, gen_out);
        if (clu->parsed()) return run_cluster(clu_input, clu_slices, clu_runs, clu_seed, clu_out);
        if (shf->parsed()) return run_shuffle(shf_input, shf_slices, shf_seed, shf_attempts, shf_out);
        if (nm->parsed()) return run_nmi(nmi_a, nmi_b);
        if (ana->parsed()) return run_analytic(ana_input, ana_partition, ana_max, ana_out);
    } catch (const tempnet::NoValidSlicing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
