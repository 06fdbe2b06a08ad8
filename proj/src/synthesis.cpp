#include "tempnet/synthesis.hpp"

#include <random>

namespace tempnet {

namespace {

void finalize(ContactSequence& cs, int n_vertices, double t_max_anchor) {
    if (cs.events.size() < 2)
        throw std::logic_error("generator produced fewer than two events");
    // Pin the span exactly: first event of the first block at t = 0, one
    // event of the last block at t = t_max_anchor. The t_max event clamps
    // into the last slice at any granularity.
    cs.events.front().t = 0.0;
    cs.events.back().t = t_max_anchor;
    cs.n_vertices = n_vertices;
    cs.t_min = 0.0;
    cs.t_max = t_max_anchor;
}

}  // namespace

SyntheticData gen_hidden_cliques(int reps, int clique_size, double noise_density,
                                 std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("gen_hidden_cliques: reps must be >= 1");
    if (clique_size < 2) throw std::invalid_argument("gen_hidden_cliques: clique_size must be >= 2");
    if (noise_density < 0.0 || noise_density > 1.0)
        throw std::invalid_argument("gen_hidden_cliques: noise_density must be in [0,1]");

    const int c = clique_size;
    const int n = 2 * c;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SyntheticData data;
    for (int r = 0; r < reps; ++r) {
        const double base = static_cast<double>(r);
        for (int grp = 0; grp < 2; ++grp) {
            const int off = grp * c;
            for (int i = 0; i < c; ++i)
                for (int j = i + 1; j < c; ++j)
                    data.contacts.events.push_back({off + i, off + j, base + unit(rng)});
        }
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j)
                if (unit(rng) < noise_density)
                    data.contacts.events.push_back({i, c + j, base + unit(rng)});
    }
    finalize(data.contacts, n, static_cast<double>(reps));

    data.truth.partition = Partition(n, reps);
    for (int r = 0; r < reps; ++r)
        for (int v = 0; v < n; ++v)
            data.truth.partition.at(v, r) = v < c ? 0 : 1;
    return data;
}

SyntheticData gen_time_separated_cliques(int k, int clique_size, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("gen_time_separated_cliques: k must be >= 1");
    if (clique_size < 2)
        throw std::invalid_argument("gen_time_separated_cliques: clique_size must be >= 2");

    const int c = clique_size;
    const int n = k * c;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SyntheticData data;
    // Ten jittered full-clique bursts per block keep every clique complete in
    // every slice that touches its block, for any slicing up to ten per block.
    const int bursts = 10;
    for (int g = 0; g < k; ++g) {
        const double base = static_cast<double>(g);
        const int off = g * c;
        for (int b = 0; b < bursts; ++b) {
            const double t = base + (b + unit(rng)) / bursts;
            for (int i = 0; i < c; ++i)
                for (int j = i + 1; j < c; ++j)
                    data.contacts.events.push_back({off + i, off + j, t});
        }
    }
    finalize(data.contacts, n, static_cast<double>(k));

    data.truth.partition = Partition(n, 1);
    for (int v = 0; v < n; ++v) data.truth.partition.at(v, 0) = v / c;
    return data;
}

SliceStack gen_replicated(const Snapshot& g, int n_slices, double coupling) {
    if (n_slices < 1) throw std::invalid_argument("gen_replicated: n_slices must be >= 1");
    if (g.m() < 1) throw std::invalid_argument("gen_replicated: empty graph");
    std::vector<Snapshot> slices(static_cast<size_t>(n_slices), g);
    return SliceStack::from_slices(std::move(slices), coupling);
}

Partition replicate_partition(const Partition& base, int n_slices) {
    if (base.n_slices != 1) throw std::invalid_argument("replicate_partition: base must have one slice");
    Partition p(base.n_vertices, n_slices);
    for (int s = 0; s < n_slices; ++s)
        for (int v = 0; v < base.n_vertices; ++v)
            p.at(v, s) = base.at(v, 0);
    return p;
}

}  // namespace tempnet
