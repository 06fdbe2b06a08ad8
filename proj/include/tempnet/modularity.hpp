#pragma once

#include "tempnet/core.hpp"

namespace tempnet {

// Closed-form ingredients for the modularity of a network replicated across
// slices with the same partition on every slice: a_bar is the adjacency mass
// inside communities, k_bar the null-model mass, m the edge count and a the
// number of vertices per slice.
struct ReplicatedModel {
    double a_bar = 0.0;
    double k_bar = 0.0;
    long m = 0;
    int a = 0;

    static ReplicatedModel from_partition(const Snapshot& g, const Partition& p);
};

// Newman modularity of a single snapshot. The ordered double sum includes the
// i = j diagonal, which contributes -k_i^2 / 2m.
double modularity_single(const Snapshot& g, const Partition& p);

// Multi-slice modularity: per-slice modularity terms plus a coupling reward
// for every vertex keeping its community across consecutive slices. The
// coupling enters the numerator once per ordered slice pair (s, s+1) and
// (s+1, s), while mu counts it once per unordered pair, matching the
// replicated-network closed form.
double modularity_multislice(const SliceStack& stack, const Partition& p);

// (S*(a_bar - k_bar) + 2a(S-1)) / (2*(a(S-1) + S*m))
double replicated_modularity(const ReplicatedModel& model, int n_slices);

}  // namespace tempnet
