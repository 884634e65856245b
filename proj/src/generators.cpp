#include "coverbound/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "coverbound/errors.hpp"
#include "coverbound/numeric.hpp"
#include "coverbound/rng.hpp"

namespace coverbound {

Family parse_family(std::string_view name) {
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "complete") return Family::complete;
    if (name == "petersen") return Family::petersen;
    if (name == "random-regular") return Family::random_regular;
    if (name == "weighted-regular") return Family::weighted_regular;
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

std::string to_string(Family family) {
    switch (family) {
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::complete: return "complete";
        case Family::petersen: return "petersen";
        case Family::random_regular: return "random-regular";
        case Family::weighted_regular: return "weighted-regular";
    }
    return "unknown";
}

WeightedGraph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 1.0});
    return WeightedGraph::from_edges(n, edges);
}

WeightedGraph path_graph(std::size_t n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), 1.0});
    return WeightedGraph::from_edges(n, edges);
}

WeightedGraph complete_graph(std::size_t n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    return WeightedGraph::from_edges(n, edges);
}

WeightedGraph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1.0});             // outer 5-cycle
        edges.push_back({i, i + 5, 1.0});                   // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5, 1.0});     // inner pentagram
    }
    return WeightedGraph::from_edges(10, edges);
}

namespace {

std::vector<Edge> random_regular_edges(std::size_t n, std::size_t d, std::uint64_t seed,
                                       std::size_t max_restarts) {
    if (d >= n) throw InputError("random-regular needs d < n");
    if ((n * d) % 2 != 0) throw InputError("random-regular needs n * d even");
    SplitMix64 rng(seed);

    for (std::size_t attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<Vertex> points;
        points.reserve(n * d);
        for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
        std::set<std::pair<Vertex, Vertex>> present;
        std::vector<Edge> edges;
        bool stuck = false;

        while (!points.empty() && !stuck) {
            bool paired = false;
            for (int tries = 0; tries < 64 && !paired; ++tries) {
                const std::size_t i = rng.below(points.size());
                const std::size_t j = rng.below(points.size());
                const Vertex a = points[i], b = points[j];
                if (i == j || a == b || present.count({std::min(a, b), std::max(a, b)})) continue;
                present.insert({std::min(a, b), std::max(a, b)});
                edges.push_back({std::min(a, b), std::max(a, b), 1.0});
                // Remove the larger index first so the smaller stays valid.
                for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
                    points[k] = points.back();
                    points.pop_back();
                }
                paired = true;
            }
            if (paired) continue;
            // Random probing failed; check exhaustively whether any valid pair is left.
            stuck = true;
            for (std::size_t i = 0; i < points.size() && stuck; ++i)
                for (std::size_t j = i + 1; j < points.size() && stuck; ++j) {
                    const Vertex a = points[i], b = points[j];
                    if (a != b && !present.count({std::min(a, b), std::max(a, b)})) stuck = false;
                }
        }
        if (!stuck) return edges;
    }
    throw InputError("random-regular: rejection cap of " + std::to_string(max_restarts) + " restarts exceeded");
}

void balance_weights(std::size_t n, std::vector<Edge>& edges, const GeneratorSpec& spec) {
    std::vector<double> deg(n);
    auto deviation = [&] {
        std::fill(deg.begin(), deg.end(), 0.0);
        for (const Edge& e : edges) {
            deg[e.u] += e.weight;
            deg[e.v] += e.weight;
        }
        KahanSum total;
        for (double x : deg) total += x;
        const double mean = total.value() / static_cast<double>(n);
        double worst = 0.0;
        for (double x : deg) worst = std::max(worst, std::abs(x - mean) / mean);
        return std::make_pair(worst, mean);
    };

    auto [dev, mean] = deviation();
    double best = dev;
    int stale = 0;
    for (std::size_t sweep = 0; sweep < spec.max_sweeps; ++sweep) {
        if (dev <= spec.balance_tol && (dev <= 1e-15 || stale >= 3)) return;
        for (Edge& e : edges) e.weight *= std::sqrt((mean / deg[e.u]) * (mean / deg[e.v]));
        std::tie(dev, mean) = deviation();
        if (dev < best) {
            best = dev;
            stale = 0;
        } else {
            ++stale;
        }
    }
    if (dev > spec.balance_tol)
        throw ConvergenceError("degree balancing did not converge in " + std::to_string(spec.max_sweeps) +
                                   " sweeps",
                               dev);
}

}  // namespace

WeightedGraph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::random_regular;
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    return generate(spec);
}

WeightedGraph weighted_regular_graph(std::size_t n, std::size_t d, double weight_min, double weight_max,
                                     std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::weighted_regular;
    spec.n = n;
    spec.d = d;
    spec.weight_min = weight_min;
    spec.weight_max = weight_max;
    spec.seed = seed;
    return generate(spec);
}

WeightedGraph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::cycle: return cycle_graph(spec.n);
        case Family::path: return path_graph(spec.n);
        case Family::complete: return complete_graph(spec.n);
        case Family::petersen: return petersen_graph();
        case Family::random_regular: {
            auto edges = random_regular_edges(spec.n, spec.d, spec.seed, spec.max_restarts);
            return WeightedGraph::from_edges(spec.n, edges);
        }
        case Family::weighted_regular: {
            if (!(spec.weight_min > 0.0 && spec.weight_max >= spec.weight_min))
                throw InputError("weighted-regular needs 0 < weight_min <= weight_max");
            auto edges = random_regular_edges(spec.n, spec.d, spec.seed, spec.max_restarts);
            // Separate stream for weights so the skeleton matches random-regular with the same seed.
            SplitMix64 rng(spec.seed ^ 0x5bd1e9955bd1e995ULL);
            for (Edge& e : edges) e.weight = rng.uniform(spec.weight_min, spec.weight_max);
            balance_weights(spec.n, edges, spec);
            return WeightedGraph::from_edges(spec.n, edges);
        }
    }
    throw InputError("unknown family");
}

double max_relative_degree_deviation(const WeightedGraph& g) {
    const auto deg = weighted_degrees(g);
    KahanSum total;
    for (double x : deg) total += x;
    const double mean = total.value() / static_cast<double>(deg.size());
    double worst = 0.0;
    for (double x : deg) worst = std::max(worst, std::abs(x - mean) / mean);
    return worst;
}

}  // namespace coverbound
