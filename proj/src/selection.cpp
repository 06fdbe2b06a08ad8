#include "tempnet/selection.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "tempnet/evaluation.hpp"
#include "tempnet/modularity.hpp"
#include "tempnet/randomization.hpp"

namespace tempnet {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

ScanResult corrected_scan(const ContactSequence& cs, const ScanConfig& cfg,
                          const GroundTruth* truth) {
    if (cfg.n_max < 1) throw std::invalid_argument("corrected_scan: n_max must be >= 1");
    if (cfg.shuffle_replicates < 1)
        throw std::invalid_argument("corrected_scan: shuffle_replicates must be >= 1");

    ScanResult result;
    for (int i = 1; i <= cfg.n_max; ++i) {
        ScanRecord rec;
        rec.n_slices = i;
        SliceStack stack = slice(cs, i);
        bool empty = false;
        for (int s = 0; s < stack.n_slices(); ++s)
            if (stack.slice(s).m() < 1) {
                rec.skipped = true;
                rec.skip_reason = "empty slice " + std::to_string(s);
                empty = true;
                break;
            }
        if (!empty) {
            // All randomness derives from the master seed with per-i streams:
            // stream 3i for the original clustering, 3i+1 for the shuffles,
            // 3i+2 for the clusterings of the shuffled copies.
            const std::uint64_t base = cfg.opt.seed;
            OptimizerConfig orig_cfg = cfg.opt;
            orig_cfg.seed = derive_seed(base, 3 * static_cast<std::uint64_t>(i));
            ClusterResult best = cluster_best(stack, orig_cfg);
            rec.m_o = best.quality;

            double m_r_sum = 0.0;
            for (int rep = 0; rep < cfg.shuffle_replicates; ++rep) {
                std::uint64_t shuffle_seed =
                    derive_seed(derive_seed(base, 3 * static_cast<std::uint64_t>(i) + 1),
                                static_cast<std::uint64_t>(rep));
                SliceStack shuffled = shuffle_stack(stack, shuffle_seed, cfg.attempts_per_edge);
                OptimizerConfig rand_cfg = cfg.opt;
                rand_cfg.seed =
                    derive_seed(derive_seed(base, 3 * static_cast<std::uint64_t>(i) + 2),
                                static_cast<std::uint64_t>(rep));
                m_r_sum += cluster_best(shuffled, rand_cfg).quality;
            }
            rec.m_r = m_r_sum / static_cast<double>(cfg.shuffle_replicates);
            rec.m_n = rec.m_o - rec.m_r;
            if (truth) rec.nmi = nmi_against_truth(best.partition, *truth);
        }
        result.records.push_back(std::move(rec));
    }
    result.selected = select(result.records);
    return result;
}

int select(const std::vector<ScanRecord>& records) {
    int best = -1;
    double best_mn = 0.0;
    for (const auto& rec : records) {
        if (rec.skipped) continue;
        if (best == -1 || rec.m_n > best_mn) {
            best = rec.n_slices;
            best_mn = rec.m_n;
        }
    }
    if (best == -1) throw NoValidSlicing("no valid slicing: every slice count was skipped");
    return best;
}

void write_scan_csv(const ScanResult& result, std::ostream& out) {
    out << "n_slices,m_o,m_r,m_n,nmi,skipped\n";
    for (const auto& rec : result.records) {
        out << rec.n_slices << ',';
        if (rec.skipped) {
            out << ",,,," << rec.skip_reason << '\n';
        } else {
            out << fmt_double(rec.m_o) << ',' << fmt_double(rec.m_r) << ','
                << fmt_double(rec.m_n) << ',';
            if (rec.nmi) out << fmt_double(*rec.nmi);
            out << ",\n";
        }
    }
}

std::string scan_to_json(const ScanResult& result) {
    nlohmann::json j;
    j["selected"] = result.selected;
    j["records"] = nlohmann::json::array();
    for (const auto& rec : result.records) {
        nlohmann::json r;
        r["n_slices"] = rec.n_slices;
        r["skipped"] = rec.skipped;
        if (rec.skipped) {
            r["skip_reason"] = rec.skip_reason;
        } else {
            r["m_o"] = rec.m_o;
            r["m_r"] = rec.m_r;
            r["m_n"] = rec.m_n;
            if (rec.nmi) r["nmi"] = *rec.nmi;
        }
        j["records"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

ScanResult scan_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ScanResult result;
    result.selected = j.at("selected").get<int>();
    for (const auto& r : j.at("records")) {
        ScanRecord rec;
        rec.n_slices = r.at("n_slices").get<int>();
        rec.skipped = r.at("skipped").get<bool>();
        if (rec.skipped) {
            rec.skip_reason = r.at("skip_reason").get<std::string>();
        } else {
            rec.m_o = r.at("m_o").get<double>();
            rec.m_r = r.at("m_r").get<double>();
            rec.m_n = r.at("m_n").get<double>();
            if (r.contains("nmi")) rec.nmi = r.at("nmi").get<double>();
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

}  // namespace tempnet
