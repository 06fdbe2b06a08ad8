#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "tempnet/modularity.hpp"
#include "tempnet/synthesis.hpp"

using namespace tempnet;

TEST_CASE("generators are deterministic under seed") {
    SyntheticData a = gen_hidden_cliques(5, 8, 0.2, 42);
    SyntheticData b = gen_hidden_cliques(5, 8, 0.2, 42);
    REQUIRE(a.contacts.events.size() == b.contacts.events.size());
    for (size_t i = 0; i < a.contacts.events.size(); ++i) {
        CHECK(a.contacts.events[i].u == b.contacts.events[i].u);
        CHECK(a.contacts.events[i].v == b.contacts.events[i].v);
        CHECK(a.contacts.events[i].t == b.contacts.events[i].t);
    }
    SyntheticData c = gen_hidden_cliques(5, 8, 0.2, 43);
    bool differs = a.contacts.events.size() != c.contacts.events.size();
    for (size_t i = 1; !differs && i < a.contacts.events.size(); ++i)
        differs = a.contacts.events[i].t != c.contacts.events[i].t;
    CHECK(differs);
}

TEST_CASE("hidden cliques: slicing at S = reps isolates complete cliques per block") {
    const int reps = 5, c = 8;
    SyntheticData data = gen_hidden_cliques(reps, c, 0.2, 7);
    CHECK(data.contacts.n_vertices == 2 * c);
    CHECK(data.contacts.t_min == 0.0);
    CHECK(data.contacts.t_max == static_cast<double>(reps));
    CHECK(data.truth.reference_slices() == reps);

    SliceStack st = slice(data.contacts, reps);
    for (int s = 0; s < reps; ++s) {
        const Snapshot& g = st.slice(s);
        for (int grp = 0; grp < 2; ++grp)
            for (int i = 0; i < c; ++i)
                for (int j = i + 1; j < c; ++j)
                    CHECK(g.has_edge(grp * c + i, grp * c + j));
    }
}

TEST_CASE("hidden cliques: per-slice cross-edge count is binomial") {
    const int reps = 4, c = 8;
    const double density = 0.2;
    const double trials = 50;
    double total = 0.0;
    long slices_seen = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SyntheticData data = gen_hidden_cliques(reps, c, density, seed);
        SliceStack st = slice(data.contacts, reps);
        for (int s = 0; s < reps; ++s) {
            long cross = 0;
            for (const auto& [u, v] : st.slice(s).edges())
                if ((u < c) != (v < c)) ++cross;
            total += static_cast<double>(cross);
            ++slices_seen;
        }
    }
    const double n_pairs = static_cast<double>(c) * c;
    const double mean = total / static_cast<double>(slices_seen);
    const double expected = n_pairs * density;
    const double sigma = std::sqrt(n_pairs * density * (1 - density) /
                                   static_cast<double>(slices_seen));
    CHECK(std::abs(mean - expected) <= 3.0 * sigma);
    (void)trials;
}

TEST_CASE("noise-free hidden cliques are two disjoint cliques per block") {
    SyntheticData data = gen_hidden_cliques(3, 4, 0.0, 1);
    SliceStack st = slice(data.contacts, 3);
    for (int s = 0; s < 3; ++s) CHECK(st.slice(s).m() == 2 * 6);
}

TEST_CASE("time-separated cliques aggregate to k disjoint cliques") {
    const int k = 5, c = 8;
    SyntheticData data = gen_time_separated_cliques(k, c, 11);
    CHECK(data.contacts.n_vertices == k * c);
    CHECK(data.truth.reference_slices() == 1);
    SliceStack agg = slice(data.contacts, 1);
    CHECK(agg.slice(0).m() == k * c * (c - 1) / 2);
    for (const auto& [u, v] : agg.slice(0).edges()) CHECK(u / c == v / c);
    // slicing at S = k isolates one clique per slice
    SliceStack st = slice(data.contacts, k);
    for (int s = 0; s < k; ++s) {
        CHECK(st.slice(s).m() == c * (c - 1) / 2);
        for (const auto& [u, v] : st.slice(s).edges()) CHECK(u / c == s);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gen_hidden_cliques(0, 8, 0.2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_hidden_cliques(5, 1, 0.2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_hidden_cliques(5, 8, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_time_separated_cliques(0, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_replicated(oracle::two_cliques(2), 0), std::invalid_argument);
}

TEST_CASE("gen_replicated: S copies, closed-form agreement for two 4-cliques") {
    Snapshot g = oracle::two_cliques(4);
    SliceStack one = gen_replicated(g, 1);
    CHECK(one.n_slices() == 1);
    CHECK(one.slice(0).edges() == g.edges());

    Partition base(8, 1);
    for (int v = 0; v < 8; ++v) base.at(v, 0) = v / 4;
    ReplicatedModel model = ReplicatedModel::from_partition(g, base);
    CHECK(model.a_bar == doctest::Approx(24.0));
    CHECK(model.k_bar == doctest::Approx(12.0));
    CHECK(model.m == 12);
    CHECK(model.a == 8);

    SliceStack st = gen_replicated(g, 3);
    Partition p = replicate_partition(base, 3);
    CHECK(modularity_multislice(st, p) ==
          doctest::Approx(replicated_modularity(model, 3)).epsilon(1e-13));

    for (int S = 2; S <= 20; ++S) {
        SliceStack stack = gen_replicated(g, S);
        Partition rp = replicate_partition(base, S);
        CHECK(std::abs(modularity_multislice(stack, rp) - replicated_modularity(model, S)) <=
              1e-12);
    }
}
