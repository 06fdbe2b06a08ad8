#pragma once

#include <cstdint>

#include "tempnet/core.hpp"

namespace tempnet {

struct SyntheticData {
    ContactSequence contacts;
    GroundTruth truth;
};

// Two cliques separated by cross-group noise, the pattern repeated `reps`
// times along the time axis. Block r occupies [r, r+1); noise pairs are
// redrawn independently per block. Timestamps are anchored so that slicing
// at S = reps isolates the blocks exactly. Ground truth at reference_S =
// reps labels every vertex by its clique.
SyntheticData gen_hidden_cliques(int reps, int clique_size, double noise_density,
                                 std::uint64_t seed);

// k cliques active in disjoint time blocks; the aggregate is k disjoint
// cliques. Ground truth at reference_S = 1.
SyntheticData gen_time_separated_cliques(int k, int clique_size, std::uint64_t seed);

// S identical copies of g as slices.
SliceStack gen_replicated(const Snapshot& g, int n_slices, double coupling = 1.0);

// Replicates a one-slice partition across S slices (pillar communities).
Partition replicate_partition(const Partition& base, int n_slices);

}  // namespace tempnet
