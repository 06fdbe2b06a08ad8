#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tempnet/evaluation.hpp"

using namespace tempnet;

TEST_CASE("identical partitions score 1") {
    Partition p(4, 1);
    p.labels = {0, 0, 1, 1};
    CHECK(nmi(p, p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("a constant partition against singletons scores 0") {
    Partition p(4, 1, 0);
    Partition q(4, 1);
    q.labels = {0, 1, 2, 3};
    CHECK(nmi(p, q) == 0.0);
    CHECK(nmi(q, p) == 0.0);
}

TEST_CASE("both single-community scores 1 by convention") {
    Partition p(3, 1, 0);
    Partition q(3, 1, 7);
    CHECK(nmi(p, q) == 1.0);
}

TEST_CASE("independent checkerboard labels score 0") {
    Partition p(4, 1), q(4, 1);
    p.labels = {0, 0, 1, 1};
    q.labels = {0, 1, 0, 1};
    CHECK(nmi(p, q) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("mismatched universes throw") {
    Partition p(4, 1, 0);
    Partition q(4, 2, 0);
    CHECK_THROWS_AS(nmi(p, q), std::invalid_argument);
}

TEST_CASE("symmetry, label-permutation invariance and range") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        int S = 1 + static_cast<int>(rng() % 3);
        Partition p = oracle::random_partition(n, S, 4, rng);
        Partition q = oracle::random_partition(n, S, 4, rng);
        double v = nmi(p, q);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        CHECK(v == doctest::Approx(nmi(q, p)).epsilon(1e-12));
        Partition q2 = q;
        for (auto& l : q2.labels) l = 5 - l;
        CHECK(v == doctest::Approx(nmi(p, q2)).epsilon(1e-12));
    }
}

TEST_CASE("cross-granularity comparison maps by time containment") {
    // truth at 2 slices, found at 4: fine slices 0,1 sit inside coarse 0
    GroundTruth truth;
    truth.partition = Partition(2, 2);
    truth.partition.labels = {0, 1, 1, 0};  // slice 0: (0,1), slice 1: (1,0)
    Partition found(2, 4);
    for (int f = 0; f < 4; ++f) {
        int coarse = f / 2;
        found.at(0, f) = truth.partition.at(0, coarse);
        found.at(1, f) = truth.partition.at(1, coarse);
    }
    CHECK(nmi_against_truth(found, truth) == doctest::Approx(1.0).epsilon(1e-12));

    // coarser found than truth
    Partition coarse_found(2, 1);
    coarse_found.labels = {0, 1};
    GroundTruth fine_truth;
    fine_truth.partition = Partition(2, 3);
    fine_truth.partition.labels = {0, 1, 0, 1, 0, 1};
    CHECK(nmi_against_truth(coarse_found, fine_truth) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("containing_slice midpoints") {
    CHECK(containing_slice(0, 4, 2) == 0);
    CHECK(containing_slice(1, 4, 2) == 0);
    CHECK(containing_slice(2, 4, 2) == 1);
    CHECK(containing_slice(3, 4, 2) == 1);
    CHECK(containing_slice(0, 1, 1) == 0);
    CHECK(containing_slice(5, 6, 6) == 5);
}
