#include "coverbound/cover.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "coverbound/errors.hpp"
#include "coverbound/numeric.hpp"

namespace coverbound {

std::vector<std::size_t> UnraveledBall::level_sizes() const {
    std::vector<std::size_t> sizes(radius_ + 1, 0);
    for (std::size_t i = 0; i < level_count(); ++i)
        sizes[i] = level_offsets_[i + 1] - level_offsets_[i];
    return sizes;
}

std::vector<Vertex> UnraveledBall::walk(NodeId i, const DirectedEdges& edges) const {
    std::vector<Vertex> out(nodes_[i].depth + 1);
    for (NodeId cur = i; cur != root(); cur = nodes_[cur].parent)
        out[nodes_[cur].depth] = edges[nodes_[cur].edge].head;
    out[0] = center_;
    return out;
}

UnraveledBall unravel(const WeightedGraph& g, const DirectedEdges& edges, Vertex v,
                      std::uint32_t r, std::size_t node_budget) {
    if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (node_budget == 0) throw BudgetExceeded(0, 1, node_budget);
    node_budget = std::min<std::size_t>(node_budget, kNone);

    std::vector<BallNode> nodes{{kNone, 0, kNone, 0.0}};
    std::vector<std::size_t> offsets{0, 1};

    for (std::uint32_t depth = 1; depth <= r; ++depth) {
        const std::size_t begin = offsets[depth - 1];
        const std::size_t end = offsets[depth];
        std::size_t next = 0;
        for (std::size_t i = begin; i < end; ++i) {
            next += depth == 1 ? g.degree(v) : edges.prolongations(nodes[i].edge).size();
        }
        if (next == 0) break;
        if (nodes.size() + next > node_budget)
            throw BudgetExceeded(depth, nodes.size() + next, node_budget);

        nodes.reserve(nodes.size() + next);
        for (std::size_t i = begin; i < end; ++i) {
            const auto parent = static_cast<NodeId>(i);
            auto children = depth == 1 ? edges.out_edges(v) : edges.prolongations(nodes[i].edge);
            for (EdgeId e : children) nodes.push_back({parent, depth, e, edges[e].weight});
        }
        offsets.push_back(nodes.size());
    }
    return UnraveledBall(v, r, std::move(nodes), std::move(offsets));
}

UnraveledBall unravel(const WeightedGraph& g, Vertex v, std::uint32_t r, std::size_t node_budget) {
    return unravel(g, DirectedEdges(g), v, r, node_budget);
}

InducedSubgraph ball(const WeightedGraph& g, Vertex v, std::uint32_t r) {
    const auto dist = bfs_distances(g, v);
    std::vector<Vertex> subset;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (dist[u] <= r) subset.push_back(u);
    return induced_subgraph(g, subset);
}

InducedSubgraph residual(const WeightedGraph& g, Vertex v, std::uint32_t r) {
    const auto dist = bfs_distances(g, v);
    std::vector<Vertex> subset;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (dist[u] == kNone || dist[u] > r + 1) subset.push_back(u);
    return induced_subgraph(g, subset);
}

InducedSubgraph peel_core(const InducedSubgraph& h, double theta) {
    const WeightedGraph& g = h.graph;
    const std::size_t n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<double> degree(n);

    auto recompute = [&](Vertex u) {
        KahanSum s;
        for (const Neighbor& nb : g.neighbors(u))
            if (alive[nb.vertex]) s += nb.weight;
        degree[u] = s.value();
    };

    using Entry = std::pair<double, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (Vertex u = 0; u < n; ++u) {
        recompute(u);
        heap.emplace(degree[u], u);
    }
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (!alive[u] || d != degree[u]) continue;
        if (d >= theta) break;
        alive[u] = 0;
        for (const Neighbor& nb : g.neighbors(u)) {
            if (!alive[nb.vertex]) continue;
            recompute(nb.vertex);
            heap.emplace(degree[nb.vertex], nb.vertex);
        }
    }

    std::vector<Vertex> keep;
    for (Vertex u = 0; u < n; ++u)
        if (alive[u]) keep.push_back(h.vertices[u]);
    // Rebuild against the local graph, then map back to parent ids.
    std::vector<Vertex> local;
    for (Vertex u = 0; u < n; ++u)
        if (alive[u]) local.push_back(u);
    InducedSubgraph core = induced_subgraph(g, local);
    core.vertices = std::move(keep);
    return core;
}

std::vector<Edge> tree_edges(const UnraveledBall& ball) {
    std::vector<Edge> out;
    out.reserve(ball.size() > 0 ? ball.size() - 1 : 0);
    for (NodeId i = 1; i < ball.size(); ++i) out.push_back({ball[i].parent, i, ball[i].weight});
    return out;
}

}  // namespace coverbound
