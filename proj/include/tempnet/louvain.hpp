#pragma once

#include <cstdint>
#include <vector>

#include "tempnet/core.hpp"

namespace tempnet {

struct OptimizerConfig {
    int runs = 10;
    std::uint64_t seed = 42;
    int max_passes = 100;
    double min_gain = 1e-10;
};

struct ClusterResult {
    Partition partition;
    double quality = 0.0;
    // Multi-slice modularity after each pass (local moving + aggregation),
    // starting from the all-singleton value. Non-decreasing within a run.
    std::vector<double> pass_quality;
};

// One seeded run of the two-phase Louvain scheme on the multi-slice quality
// function: local moving over (vertex, slice) nodes in shuffled order taking
// the steepest improving move, then contraction of communities into
// supernodes, repeated until no improvement. The returned quality is
// recomputed from the definition, not from the incremental bookkeeping.
ClusterResult cluster_once(const SliceStack& stack, std::uint64_t seed,
                           const OptimizerConfig& cfg = {});

// Runs with seeds cfg.seed + 0 .. cfg.seed + runs-1 and keeps the best
// quality; ties go to the lowest run index. Every fourth run moves greedily
// as in cluster_once; the remaining runs pick among strictly improving moves
// at random (probability proportional to the gain), which reaches optima the
// greedy rule cannot.
ClusterResult cluster_best(const SliceStack& stack, const OptimizerConfig& cfg = {});

}  // namespace tempnet
