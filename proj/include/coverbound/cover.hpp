#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coverbound/graph.hpp"

namespace coverbound {

using NodeId = std::uint32_t;

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// One non-backtracking walk from the center, stored as a tree node. The walk
/// itself is recovered by following parents; `edge` is the directed edge that
/// extends the parent walk (kNone at the root).
struct BallNode {
    NodeId parent;
    std::uint32_t depth;
    EdgeId edge;
    double weight;
};

/// The tree of all non-backtracking walks of length <= radius starting at
/// `center`, i.e. the radius ball around the center in the universal cover.
///
/// Nodes are in breadth-first order, so level i occupies the contiguous range
/// [level_offset(i), level_offset(i+1)). Children of a node appear in
/// increasing order of their extending edge id.
class UnraveledBall {
public:
    UnraveledBall(Vertex center, std::uint32_t radius, std::vector<BallNode> nodes,
                  std::vector<std::size_t> level_offsets)
        : center_(center), radius_(radius), nodes_(std::move(nodes)),
          level_offsets_(std::move(level_offsets)) {}

    Vertex center() const noexcept { return center_; }
    std::uint32_t radius() const noexcept { return radius_; }
    NodeId root() const noexcept { return 0; }

    std::size_t size() const noexcept { return nodes_.size(); }
    std::span<const BallNode> nodes() const noexcept { return nodes_; }
    const BallNode& operator[](NodeId i) const { return nodes_[i]; }

    /// Number of levels actually populated (<= radius + 1).
    std::size_t level_count() const noexcept { return level_offsets_.size() - 1; }
    std::size_t level_offset(std::size_t depth) const { return level_offsets_[depth]; }
    /// Sizes of levels 0..radius; trailing levels may be zero when walks die out.
    std::vector<std::size_t> level_sizes() const;

    /// The vertex sequence of the walk represented by node i.
    std::vector<Vertex> walk(NodeId i, const DirectedEdges& edges) const;

private:
    Vertex center_;
    std::uint32_t radius_;
    std::vector<BallNode> nodes_;
    std::vector<std::size_t> level_offsets_;
};

/// Builds G~(v, r) breadth-first. Before materializing each level the exact
/// level size is computed from the previous one, and BudgetExceeded is thrown
/// if the running total would pass node_budget.
UnraveledBall unravel(const WeightedGraph& g, const DirectedEdges& edges, Vertex v,
                      std::uint32_t r, std::size_t node_budget = kDefaultNodeBudget);
UnraveledBall unravel(const WeightedGraph& g, Vertex v, std::uint32_t r,
                      std::size_t node_budget = kDefaultNodeBudget);

/// Induced subgraph on the vertices within unweighted distance r of v.
InducedSubgraph ball(const WeightedGraph& g, Vertex v, std::uint32_t r);

/// Induced subgraph on V(G) minus the vertices of ball(g, v, r + 1).
InducedSubgraph residual(const WeightedGraph& g, Vertex v, std::uint32_t r);

/// The maximal induced subgraph of h in which every vertex has weighted degree
/// >= theta, found by repeatedly deleting low-degree vertices. Degrees of
/// survivors are recomputed from scratch after each neighbor deletion so the
/// result does not depend on floating-point update order.
InducedSubgraph peel_core(const InducedSubgraph& h, double theta);

/// Adjacency of an unraveled ball as `parent child weight` rows.
std::vector<Edge> tree_edges(const UnraveledBall& ball);

}  // namespace coverbound
