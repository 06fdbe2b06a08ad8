#include "tempnet/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tempnet {

double nmi(const Partition& p, const Partition& q) {
    if (p.n_vertices != q.n_vertices || p.n_slices != q.n_slices)
        throw std::invalid_argument("nmi: partitions cover different universes");
    const double n = static_cast<double>(p.size());
    if (p.size() == 0) throw std::invalid_argument("nmi: empty universe");

    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> pc, qc;
    for (size_t i = 0; i < p.size(); ++i) {
        joint[{p.labels[i], q.labels[i]}] += 1.0;
        pc[p.labels[i]] += 1.0;
        qc[q.labels[i]] += 1.0;
    }
    auto entropy = [&](const std::map<int, double>& counts) {
        double h = 0.0;
        for (const auto& [lbl, cnt] : counts) h -= cnt / n * std::log(cnt / n);
        return h;
    };
    const double hp = entropy(pc);
    const double hq = entropy(qc);
    if (hp == 0.0 && hq == 0.0) return 1.0;
    if (hp == 0.0 || hq == 0.0) return 0.0;
    double mi = 0.0;
    for (const auto& [cell, cnt] : joint) {
        double pij = cnt / n;
        mi += pij * std::log(pij / (pc.at(cell.first) / n * qc.at(cell.second) / n));
    }
    double value = 2.0 * mi / (hp + hq);
    return std::clamp(value, 0.0, 1.0);
}

int containing_slice(int f, int fine, int coarse) {
    int c = static_cast<int>(static_cast<double>(coarse) * (static_cast<double>(f) + 0.5) /
                             static_cast<double>(fine));
    return std::clamp(c, 0, coarse - 1);
}

double nmi_against_truth(const Partition& found, const GroundTruth& truth) {
    if (found.n_vertices != truth.partition.n_vertices)
        throw std::invalid_argument("nmi: vertex counts differ from ground truth");
    const int S = found.n_slices;
    const int R = truth.reference_slices();
    const int F = std::max(S, R);
    const int n = found.n_vertices;
    Partition a(n, F), b(n, F);
    for (int f = 0; f < F; ++f) {
        int sf = containing_slice(f, F, S);
        int rf = containing_slice(f, F, R);
        for (int v = 0; v < n; ++v) {
            a.at(v, f) = found.at(v, sf);
            b.at(v, f) = truth.partition.at(v, rf);
        }
    }
    return nmi(a, b);
}

}  // namespace tempnet
