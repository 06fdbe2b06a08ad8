#include "tempnet/modularity.hpp"

#include <unordered_map>

namespace tempnet {

namespace {

// Sum over one slice of (A_ij - k_i k_j / 2m) delta(labels), ordered pairs
// including the diagonal. label(i) is looked up through `at`.
template <typename LabelAt>
double slice_mass(const Snapshot& g, LabelAt at) {
    const double two_m = 2.0 * static_cast<double>(g.m());
    double a_in = 0.0;
    for (const auto& [u, v] : g.edges())
        if (at(u) == at(v)) a_in += 2.0;
    std::unordered_map<int, double> deg_per_comm;
    for (int i = 0; i < g.n_vertices(); ++i)
        deg_per_comm[at(i)] += static_cast<double>(g.degrees()[static_cast<size_t>(i)]);
    double k_in = 0.0;
    for (const auto& [c, k] : deg_per_comm) k_in += k * k / two_m;
    return a_in - k_in;
}

}  // namespace

ReplicatedModel ReplicatedModel::from_partition(const Snapshot& g, const Partition& p) {
    if (p.n_vertices != g.n_vertices() || p.n_slices != 1)
        throw std::invalid_argument("replicated model: partition must cover the snapshot's vertices once");
    if (g.m() < 1) throw std::invalid_argument("replicated model: empty graph");
    ReplicatedModel mdl;
    mdl.m = g.m();
    mdl.a = g.n_vertices();
    const double two_m = 2.0 * static_cast<double>(g.m());
    for (const auto& [u, v] : g.edges())
        if (p.at(u, 0) == p.at(v, 0)) mdl.a_bar += 2.0;
    std::unordered_map<int, double> deg_per_comm;
    for (int i = 0; i < g.n_vertices(); ++i)
        deg_per_comm[p.at(i, 0)] += static_cast<double>(g.degrees()[static_cast<size_t>(i)]);
    for (const auto& [c, k] : deg_per_comm) mdl.k_bar += k * k / two_m;
    return mdl;
}

double modularity_single(const Snapshot& g, const Partition& p) {
    if (g.m() < 1) throw std::invalid_argument("modularity undefined on empty graph");
    if (p.n_vertices != g.n_vertices() || p.n_slices != 1)
        throw std::invalid_argument("modularity: partition does not cover the snapshot");
    auto at = [&](int i) { return p.at(i, 0); };
    return slice_mass(g, at) / (2.0 * static_cast<double>(g.m()));
}

double modularity_multislice(const SliceStack& stack, const Partition& p) {
    if (p.n_vertices != stack.n_vertices() || p.n_slices != stack.n_slices())
        throw std::invalid_argument("modularity: partition does not cover the stack");
    const int S = stack.n_slices();
    double total = 0.0;
    for (int s = 0; s < S; ++s) {
        const Snapshot& g = stack.slice(s);
        if (g.m() < 1)
            throw std::invalid_argument("modularity undefined: empty slice " + std::to_string(s));
        auto at = [&](int i) { return p.at(i, s); };
        total += slice_mass(g, at);
    }
    double kept = 0.0;
    for (int s = 0; s + 1 < S; ++s)
        for (int i = 0; i < stack.n_vertices(); ++i)
            if (p.at(i, s) == p.at(i, s + 1)) kept += 1.0;
    total += 2.0 * stack.coupling() * kept;
    return total / (2.0 * stack.mu());
}

double replicated_modularity(const ReplicatedModel& model, int n_slices) {
    if (n_slices < 1) throw std::invalid_argument("replicated modularity: n_slices must be >= 1");
    const double S = static_cast<double>(n_slices);
    const double a = static_cast<double>(model.a);
    const double m = static_cast<double>(model.m);
    return (S * (model.a_bar - model.k_bar) + 2.0 * a * (S - 1.0)) /
           (2.0 * (a * (S - 1.0) + S * m));
}

}  // namespace tempnet
