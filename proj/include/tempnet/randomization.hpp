#pragma once

#include <cstdint>

#include "tempnet/core.hpp"

namespace tempnet {

// Degree-preserving randomization: each attempt picks two distinct edges and
// one of the two end pairings uniformly at random, and applies the swap only
// if it creates no self-loop and no already-existing edge. Rejected attempts
// count toward the budget. Graphs with fewer than two edges come back
// unchanged.
Snapshot shuffle_snapshot(const Snapshot& g, std::uint64_t seed, long attempts);

// Shuffles every slice independently with attempts = ceil(attempts_per_edge
// * m_s) and a per-slice derived seed. Vertex set, slice count and coupling
// are unchanged.
SliceStack shuffle_stack(const SliceStack& stack, std::uint64_t seed,
                         double attempts_per_edge = 10.0);

}  // namespace tempnet
