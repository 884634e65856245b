#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/corpus.hpp"
#include "coverbound/cover.hpp"
#include "coverbound/errors.hpp"
#include "coverbound/oracle.hpp"
#include "coverbound/spectra.hpp"

using namespace coverbound;

TEST_CASE("path spectral radius and eigenvector") {
    CHECK(path_lambda1(1) == 0.0);
    CHECK(path_lambda1(2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(path_lambda1(3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(path_lambda1(3) == doctest::Approx(oracle::dense_eigs(oracle::dense_adjacency(path_graph(3))).values[0]));

    auto x2 = path_top_eigenvector(2);
    CHECK(x2[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(x2[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
    auto x3 = path_top_eigenvector(3);
    CHECK(x3[1] / x3[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(x3[2] == doctest::Approx(x3[0]));
    auto dense = oracle::dense_eigs(oracle::dense_adjacency(path_graph(3)), 1e-14, true);
    CHECK(std::abs(dense.vectors[0][0]) == doctest::Approx(x3[0]));
}

TEST_CASE("lambda1 examples") {
    CHECK(lambda1(AdjacencyOperator(complete_graph(4))).value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lambda1(AdjacencyOperator(cycle_graph(6))).value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lambda1(TreeOperator(unravel(cycle_graph(6), 0, 2))).value ==
          doctest::Approx(path_lambda1(5)).epsilon(1e-12));
    auto single = WeightedGraph::from_edges(1, std::vector<Edge>{});
    CHECK(lambda1(AdjacencyOperator(single)).value == 0.0);
}

TEST_CASE("lambda2 examples") {
    CHECK(lambda2(complete_graph(4)).value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(lambda2(cycle_graph(6)).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lambda2(petersen_graph()).value == doctest::Approx(1.0).epsilon(1e-9));
    auto split = WeightedGraph::from_edges(4, std::vector<Edge>{{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(lambda2(split), PreconditionError);
}

TEST_CASE("rayleigh quotient") {
    auto g = complete_graph(5);
    AdjacencyOperator a(g);
    std::vector<double> ones(5, 1.0);
    CHECK(rayleigh(a, ones) == doctest::Approx(4.0));
    auto top = lambda1(a);
    CHECK(rayleigh(a, top.vector) == doctest::Approx(top.value).epsilon(1e-12));
    CHECK_THROWS_AS(rayleigh(a, std::vector<double>(5, 0.0)), PreconditionError);

    SplitMix64 rng(77);
    auto h = testing::random_graph(40, 0.2, 8, 0.5, 3.0);
    AdjacencyOperator ah(h);
    const double l1 = lambda1(ah).value;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> f(40);
        for (double& x : f) x = rng.uniform(-1.0, 1.0);
        CHECK(rayleigh(ah, f) <= l1 + 1e-9);
    }
}

TEST_CASE("sparse lambda1 agrees with dense Jacobi") {
    std::uint64_t seed = 300;
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 5 + 6 * static_cast<std::size_t>(i);
        auto g = testing::random_graph(n, std::min(0.9, 4.0 / static_cast<double>(n) + 0.05), seed++, 0.1, 5.0);
        const auto dense = oracle::dense_eigs(oracle::dense_adjacency(g));
        CHECK(std::abs(lambda1(AdjacencyOperator(g)).value - dense.values.front()) <= 1e-8);
    }
}

TEST_CASE("shift handles spectra dominated by the negative end") {
    // Complete bipartite graphs have -lambda1 as an eigenvalue; a star's
    // spectrum is symmetric. The returned value must be the largest one.
    std::vector<Edge> star;
    for (Vertex i = 1; i < 9; ++i) star.push_back({0, i, 1.0});
    auto g = WeightedGraph::from_edges(9, star);
    CHECK(lambda1(AdjacencyOperator(g)).value == doctest::Approx(std::sqrt(8.0)).epsilon(1e-10));
    auto c7 = cycle_graph(7);
    const auto dense = oracle::dense_eigs(oracle::dense_adjacency(c7));
    CHECK(lambda1(AdjacencyOperator(c7)).value == doctest::Approx(dense.values.front()).epsilon(1e-10));
}

TEST_CASE("cycle unraveled balls are paths") {
    for (std::size_t n : {5, 8, 13})
        for (std::uint32_t r = 1; r <= 6; ++r)
            CHECK(std::abs(lambda1(TreeOperator(unravel(cycle_graph(n), 0, r))).value - path_lambda1(2 * r + 1)) <=
                  1e-10);
}

TEST_CASE("lambda2 < lambda1 on connected regular graphs") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = random_regular_graph(60, 4, seed);
        const double l1 = lambda1(AdjacencyOperator(g)).value;
        const double l2 = lambda2(g).value;
        CHECK(l2 < l1 - 1e-6);
        const auto dense = oracle::dense_eigs(oracle::dense_adjacency(g));
        CHECK(std::abs(l2 - dense.values[1]) <= 1e-8);
    }
    auto wg = weighted_regular_graph(40, 5, 0.5, 2.0, 3);
    const auto dense = oracle::dense_eigs(oracle::dense_adjacency(wg));
    CHECK(std::abs(lambda2(wg).value - dense.values[1]) <= 1e-8);
    auto irregular = testing::random_graph(30, 0.3, 12, 0.5, 2.0);
    REQUIRE(is_connected(irregular));
    const auto di = oracle::dense_eigs(oracle::dense_adjacency(irregular));
    CHECK(std::abs(lambda2(irregular).value - di.values[1]) <= 1e-8);
}
