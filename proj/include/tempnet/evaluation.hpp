#pragma once

#include "tempnet/core.hpp"

namespace tempnet {

// Normalized mutual information over the (vertex, slice) items of two
// partitions of the same universe: 2 I(P;Q) / (H(P) + H(Q)) with natural
// logarithms. Both partitions single-community -> 1; exactly one with zero
// entropy -> 0. Mismatched universes throw.
double nmi(const Partition& p, const Partition& q);

// NMI between a found partition and a ground truth whose reference slicing
// may differ. Both are brought to the finer of the two granularities; each
// fine slice reads the label of the interval containing its midpoint.
double nmi_against_truth(const Partition& found, const GroundTruth& truth);

// Index of the slice at granularity `coarse` containing the midpoint of
// slice f at granularity `fine` (both slicings cover the same time span).
int containing_slice(int f, int fine, int coarse);

}  // namespace tempnet
