#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tempnet/core.hpp"
#include "tempnet/louvain.hpp"

namespace tempnet {

struct NoValidSlicing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScanRecord {
    int n_slices = 0;
    double m_o = 0.0;
    double m_r = 0.0;
    double m_n = 0.0;
    std::optional<double> nmi;
    bool skipped = false;
    std::string skip_reason;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    int selected = 0;
};

struct ScanConfig {
    int n_max = 30;
    OptimizerConfig opt;              // opt.seed is the master seed of the scan
    double attempts_per_edge = 10.0;
    int shuffle_replicates = 1;       // m_r averaged over this many shuffles
};

// The brute-force procedure: for every i in 1..n_max slice the network, take
// the best Louvain modularity of the original and of a per-slice shuffled
// copy, and record the difference. Slice counts that produce an empty slice
// are marked skipped. When a ground truth is given, the NMI of the original
// clustering is recorded as well.
ScanResult corrected_scan(const ContactSequence& cs, const ScanConfig& cfg,
                          const GroundTruth* truth = nullptr);

// Smallest slice count attaining the maximum corrected modularity among
// non-skipped records. Throws NoValidSlicing when everything was skipped.
int select(const std::vector<ScanRecord>& records);

// CSV with header "n_slices,m_o,m_r,m_n,nmi,skipped"; byte-stable for
// identical inputs.
void write_scan_csv(const ScanResult& result, std::ostream& out);

std::string scan_to_json(const ScanResult& result);
ScanResult scan_from_json(const std::string& text);

}  // namespace tempnet
