#include "tempnet/randomization.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

namespace tempnet {

namespace {

std::uint64_t edge_key(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(v);
}

}  // namespace

Snapshot shuffle_snapshot(const Snapshot& g, std::uint64_t seed, long attempts) {
    if (g.m() < 2 || attempts <= 0) return g;
    const int n = g.n_vertices();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) present.insert(edge_key(n, u, v));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick_first(0, edges.size() - 1);
    std::uniform_int_distribution<size_t> pick_second(0, edges.size() - 2);
    std::uniform_int_distribution<int> pick_pairing(0, 1);

    for (long att = 0; att < attempts; ++att) {
        size_t e1 = pick_first(rng);
        size_t e2 = pick_second(rng);
        if (e2 >= e1) ++e2;
        auto [a, b] = edges[e1];
        auto [c, d] = edges[e2];
        // pairing 0: (a,c)(b,d); pairing 1: (a,d)(b,c)
        if (pick_pairing(rng) == 1) std::swap(c, d);
        if (a == c || b == d) continue;
        std::uint64_t k1 = edge_key(n, a, c);
        std::uint64_t k2 = edge_key(n, b, d);
        if (k1 == k2 || present.count(k1) || present.count(k2)) continue;
        present.erase(edge_key(n, edges[e1].first, edges[e1].second));
        present.erase(edge_key(n, edges[e2].first, edges[e2].second));
        present.insert(k1);
        present.insert(k2);
        edges[e1] = {a, c};
        edges[e2] = {b, d};
    }
    return Snapshot::from_edges(n, std::move(edges));
}

SliceStack shuffle_stack(const SliceStack& stack, std::uint64_t seed, double attempts_per_edge) {
    if (attempts_per_edge < 0) throw std::invalid_argument("shuffle_stack: negative attempts_per_edge");
    std::vector<Snapshot> out;
    out.reserve(static_cast<size_t>(stack.n_slices()));
    for (int s = 0; s < stack.n_slices(); ++s) {
        const Snapshot& g = stack.slice(s);
        long attempts = static_cast<long>(std::ceil(attempts_per_edge * static_cast<double>(g.m())));
        out.push_back(shuffle_snapshot(g, derive_seed(seed, static_cast<std::uint64_t>(s)), attempts));
    }
    return SliceStack::from_slices(std::move(out), stack.coupling());
}

}  // namespace tempnet
