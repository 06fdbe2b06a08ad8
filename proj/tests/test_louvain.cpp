#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tempnet/louvain.hpp"
#include "tempnet/modularity.hpp"
#include "tempnet/synthesis.hpp"

using namespace tempnet;

namespace {

double exhaustive_optimum_single(const Snapshot& g) {
    double best = -1e300;
    oracle::for_each_partition(g.n_vertices(), [&](const std::vector<int>& labels) {
        Partition p(g.n_vertices(), 1);
        p.labels = labels;
        best = std::max(best, oracle::brute_single(g, p));
    });
    return best;
}

double exhaustive_optimum_stack(const SliceStack& st) {
    const int flat = st.n_vertices() * st.n_slices();
    double best = -1e300;
    oracle::for_each_partition(flat, [&](const std::vector<int>& labels) {
        Partition p(st.n_vertices(), st.n_slices());
        p.labels = labels;
        best = std::max(best, oracle::brute_multislice(st, p));
    });
    return best;
}

int count_communities(const Partition& p) {
    std::set<int> labels(p.labels.begin(), p.labels.end());
    return static_cast<int>(labels.size());
}

}  // namespace

TEST_CASE("a single clique stays one community with Q = 0") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    SliceStack st = SliceStack::from_slices({Snapshot::from_edges(5, edges)});
    ClusterResult res = cluster_once(st, 1);
    CHECK(count_communities(res.partition) == 1);
    CHECK(res.quality == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("two disjoint 4-cliques are found exactly") {
    SliceStack st = SliceStack::from_slices({oracle::two_cliques(4)});
    for (std::uint64_t seed : {1, 2, 3}) {
        ClusterResult res = cluster_once(st, seed);
        CHECK(res.quality == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(count_communities(res.partition) == 2);
        CHECK(res.partition.at(0, 0) == res.partition.at(3, 0));
        CHECK(res.partition.at(0, 0) != res.partition.at(4, 0));
    }
}

TEST_CASE("two identical slices give pillar communities matching the closed form") {
    Snapshot g = oracle::two_cliques(4);
    SliceStack st = gen_replicated(g, 2);
    ClusterResult res = cluster_best(st, {.runs = 10, .seed = 5});
    Partition base(8, 1);
    for (int v = 0; v < 8; ++v) base.at(v, 0) = v / 4;
    ReplicatedModel model = ReplicatedModel::from_partition(g, base);
    CHECK(res.quality == doctest::Approx(replicated_modularity(model, 2)).epsilon(1e-12));
    // pillar structure: same community across slices
    for (int v = 0; v < 8; ++v) CHECK(res.partition.at(v, 0) == res.partition.at(v, 1));
    CHECK(count_communities(res.partition) == 2);
}

TEST_CASE("reported quality equals independent re-evaluation") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Snapshot g0 = oracle::random_graph(7, 0.4, rng);
        Snapshot g1 = oracle::random_graph(7, 0.4, rng);
        SliceStack st = SliceStack::from_slices({g0, g1});
        ClusterResult res = cluster_once(st, rng());
        CHECK(res.quality ==
              doctest::Approx(modularity_multislice(st, res.partition)).epsilon(1e-9));
        CHECK(res.quality == doctest::Approx(oracle::brute_multislice(st, res.partition))
                                 .epsilon(1e-9));
    }
}

TEST_CASE("quality is monotone across passes") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        Snapshot g0 = oracle::random_graph(8, 0.35, rng);
        Snapshot g1 = oracle::random_graph(8, 0.35, rng);
        SliceStack st = SliceStack::from_slices({g0, g1});
        ClusterResult res = cluster_once(st, rng());
        for (size_t k = 1; k < res.pass_quality.size(); ++k)
            CHECK(res.pass_quality[k] >= res.pass_quality[k - 1] - 1e-12);
        CHECK(res.quality >= res.pass_quality.front() - 1e-12);
    }
}

TEST_CASE("determinism: identical inputs give identical outputs") {
    std::mt19937_64 rng(41);
    Snapshot g0 = oracle::random_graph(10, 0.3, rng);
    Snapshot g1 = oracle::random_graph(10, 0.3, rng);
    SliceStack st = SliceStack::from_slices({g0, g1});
    OptimizerConfig cfg{.runs = 5, .seed = 99};
    ClusterResult a = cluster_best(st, cfg);
    ClusterResult b = cluster_best(st, cfg);
    CHECK(a.quality == b.quality);
    CHECK(a.partition.labels == b.partition.labels);
}

TEST_CASE("cluster_best dominates cluster_once and runs=1 matches it") {
    std::mt19937_64 rng(43);
    Snapshot g = oracle::random_graph(9, 0.35, rng);
    SliceStack st = SliceStack::from_slices({g});
    ClusterResult once = cluster_once(st, 7);
    ClusterResult one_run = cluster_best(st, {.runs = 1, .seed = 7});
    CHECK(once.quality == one_run.quality);
    CHECK(once.partition.labels == one_run.partition.labels);
    ClusterResult ten = cluster_best(st, {.runs = 10, .seed = 7});
    CHECK(ten.quality >= once.quality);
}

TEST_CASE("global optimum on small single-slice graphs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // 4..7 vertices
        Snapshot g = oracle::random_graph(n, 0.45, rng);
        SliceStack st = SliceStack::from_slices({g});
        double opt = exhaustive_optimum_single(g);
        ClusterResult res = cluster_best(st, {.runs = 20, .seed = rng()});
        CHECK(res.quality == doctest::Approx(opt).epsilon(1e-10));
    }
}

TEST_CASE("global optimum on small two-slice stacks") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        Snapshot g0 = oracle::random_graph(4, 0.5, rng);
        Snapshot g1 = oracle::random_graph(4, 0.5, rng);
        SliceStack st = SliceStack::from_slices({g0, g1});
        double opt = exhaustive_optimum_stack(st);
        ClusterResult res = cluster_best(st, {.runs = 20, .seed = rng()});
        CHECK(res.quality == doctest::Approx(opt).epsilon(1e-10));
    }
}

TEST_CASE("empty slices are rejected up front") {
    Snapshot g = oracle::two_cliques(2);
    Snapshot empty = Snapshot::from_edges(4, {});
    SliceStack st = SliceStack::from_slices({g, empty});
    CHECK_THROWS_WITH_AS(cluster_once(st, 1), doctest::Contains("slice 1"), std::invalid_argument);
}
