#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "coverbound/graph.hpp"

namespace coverbound {

enum class Family { cycle, path, complete, petersen, random_regular, weighted_regular };

Family parse_family(std::string_view name);
std::string to_string(Family family);

struct GeneratorSpec {
    Family family = Family::cycle;
    std::size_t n = 0;
    std::size_t d = 0;
    double weight_min = 1.0;
    double weight_max = 1.0;
    std::uint64_t seed = 0;
    /// Required max relative weighted-degree deviation for weighted-regular output.
    double balance_tol = 1e-10;
    std::size_t max_restarts = 1000;
    std::size_t max_sweeps = 100'000;
};

/// Deterministic given the spec. Random-regular graphs use the pairing model,
/// pairing random unmatched points and rejecting pairs that would create a
/// loop or a repeated edge, restarting when no valid pair remains.
/// Weighted-regular graphs draw weights uniformly from
/// [weight_min, weight_max] on a random-regular skeleton, then rescale each
/// edge by sqrt((wbar / w_u) (wbar / w_v)) until every weighted degree is
/// within balance_tol of the mean, continuing while the deviation still
/// shrinks (down to rounding level).
WeightedGraph generate(const GeneratorSpec& spec);

WeightedGraph cycle_graph(std::size_t n);
WeightedGraph path_graph(std::size_t n);
WeightedGraph complete_graph(std::size_t n);
WeightedGraph petersen_graph();
WeightedGraph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed);
WeightedGraph weighted_regular_graph(std::size_t n, std::size_t d, double weight_min, double weight_max,
                                     std::uint64_t seed);

/// Max over vertices of |w_v - mean| / mean.
double max_relative_degree_deviation(const WeightedGraph& g);

}  // namespace coverbound
