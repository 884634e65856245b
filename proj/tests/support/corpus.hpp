#pragma once

#include <string>
#include <vector>

#include "coverbound/generators.hpp"
#include "coverbound/graph.hpp"
#include "coverbound/rng.hpp"

namespace coverbound::testing {

struct CorpusGraph {
    std::string name;
    WeightedGraph graph;
};

/// Cycles, complete graphs, Petersen, random regular and weighted-regular
/// graphs with n <= 200. Every graph has minimum degree >= 2 and is regular.
inline std::vector<CorpusGraph> regular_corpus() {
    std::vector<CorpusGraph> out;
    for (std::size_t n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    for (std::size_t n = 3; n <= 8; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
    out.push_back({"petersen", petersen_graph()});
    const std::size_t rr[][2] = {{10, 3}, {20, 3}, {50, 3}, {100, 3}, {200, 3}, {12, 4}, {30, 4}, {80, 4},
                                 {150, 4}, {200, 4}, {16, 5}, {40, 5}, {120, 5}, {20, 6}, {60, 6},
                                 {200, 6}, {30, 7}, {100, 8}, {50, 9}, {64, 10}};
    std::uint64_t seed = 101;
    for (auto [n, d] : rr)
        out.push_back({"rr" + std::to_string(n) + "d" + std::to_string(d), random_regular_graph(n, d, seed++)});
    const std::size_t wr[][2] = {{10, 3}, {24, 3}, {60, 3}, {200, 3}, {12, 4}, {40, 4}, {100, 4}, {200, 4},
                                 {20, 5}, {80, 5}, {30, 6}, {150, 6}, {50, 8}, {100, 8}, {60, 10}};
    for (auto [n, d] : wr)
        out.push_back({"wr" + std::to_string(n) + "d" + std::to_string(d),
                       weighted_regular_graph(n, d, 0.5, 2.0, seed++)});
    return out;
}

/// G(n, p) with weights uniform in [wmin, wmax]; may be disconnected.
inline WeightedGraph random_graph(std::size_t n, double p, std::uint64_t seed, double wmin = 1.0,
                                  double wmax = 1.0) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.push_back({u, v, wmin == wmax ? wmin : rng.uniform(wmin, wmax)});
    return WeightedGraph::from_edges(n, edges);
}

/// Positive values in [0.25, 4) for every directed edge.
inline std::vector<double> random_table(std::size_t size, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> out(size);
    for (double& x : out) x = rng.uniform(0.25, 4.0);
    return out;
}

}  // namespace coverbound::testing
