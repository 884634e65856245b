#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coverbound {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = ~std::uint32_t{0};

struct Edge {
    Vertex u;
    Vertex v;
    double weight;
};

struct Neighbor {
    Vertex vertex;
    double weight;
};

/// Simple undirected graph with positive edge weights.
///
/// Storage is CSR: the neighbors of v are sorted by vertex id and occupy
/// positions [offset(v), offset(v+1)) of one flat array. Position in that array
/// doubles as the id of the directed edge (v, neighbor), so directed edges are
/// ordered lexicographically by (tail, head).
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates and builds a graph. Throws InputError on a loop, a duplicate
    /// edge, a non-positive or non-finite weight, or an out-of-range endpoint.
    /// Labels default to the decimal vertex ids.
    static WeightedGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                                    std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Undirected edges with u < v, sorted by (u, v).
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Neighbor> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t offset(Vertex v) const { return offsets_[v]; }
    std::span<const Neighbor> adjacency() const noexcept { return adjacency_; }

    const std::string& label(Vertex v) const { return labels_[v]; }
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<Vertex> find_label(std::string_view label) const;

    std::optional<double> edge_weight(Vertex u, Vertex v) const;
    /// Position of v in u's neighbor list (i.e. the directed edge id of (u, v)).
    std::optional<std::size_t> adjacency_index(Vertex u, Vertex v) const;

    bool contains(Vertex v) const noexcept { return v < vertex_count(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
};

/// Parses the edge-list format: `<u> <v> <weight>` per line, `#` comments,
/// blank lines ignored. When every label is a non-negative integer, labels are
/// numbered in numeric order; otherwise in order of first appearance.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph_file(const std::string& path);

/// Edges sorted by (u, v), weights with 17 significant digits.
std::string serialize_graph(const WeightedGraph& g);

double weighted_degree(const WeightedGraph& g, Vertex v);
std::vector<double> weighted_degrees(const WeightedGraph& g);

/// Returns w when every weighted degree is within rel_tol * w of the mean w.
std::optional<double> regularity(const WeightedGraph& g, double rel_tol = 1e-9);

double average_combinatorial_degree(const WeightedGraph& g);
std::size_t min_combinatorial_degree(const WeightedGraph& g);
std::size_t max_combinatorial_degree(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

/// Unweighted BFS distances from v; kNone for unreachable vertices.
std::vector<std::uint32_t> bfs_distances(const WeightedGraph& g, Vertex v);

struct DirectedEdge {
    EdgeId id;
    Vertex tail;
    Vertex head;
    double weight;
    EdgeId twin;
};

/// The directed edge set W1(G) together with the prolongation relation
/// e1 -> e2 (head(e1) == tail(e2) and e2 != twin(e1)).
///
/// Prolongation pairs are stored flat in CSR order; slot indices into that
/// flat array are how Markov chains store their transition probabilities.
class DirectedEdges {
public:
    explicit DirectedEdges(const WeightedGraph& g);

    std::size_t size() const noexcept { return edges_.size(); }
    const DirectedEdge& operator[](EdgeId e) const { return edges_[e]; }
    std::span<const DirectedEdge> all() const noexcept { return edges_; }

    /// Ids of the directed edges leaving v, ascending.
    std::span<const EdgeId> out_edges(Vertex v) const {
        return {out_ids_.data() + vertex_offsets_[v], out_ids_.data() + vertex_offsets_[v + 1]};
    }

    /// Sorted ids e2 with e -> e2.
    std::span<const EdgeId> prolongations(EdgeId e) const {
        return {targets_.data() + slot_offsets_[e], targets_.data() + slot_offsets_[e + 1]};
    }
    std::size_t first_slot(EdgeId e) const { return slot_offsets_[e]; }
    std::size_t slot_count() const noexcept { return targets_.size(); }

    /// Flat slot of the pair (e1, e2), or nullopt when e2 does not prolong e1.
    std::optional<std::size_t> slot(EdgeId e1, EdgeId e2) const;

    std::optional<EdgeId> find(Vertex tail, Vertex head) const;
    std::size_t vertex_count() const noexcept { return vertex_offsets_.size() - 1; }

private:
    std::vector<DirectedEdge> edges_;
    std::vector<std::size_t> vertex_offsets_;
    std::vector<EdgeId> out_ids_;
    std::vector<Vertex> heads_;
    std::vector<std::size_t> slot_offsets_;
    std::vector<EdgeId> targets_;
};

inline DirectedEdges directed_edges(const WeightedGraph& g) { return DirectedEdges(g); }

/// A vertex subset of a parent graph with the inherited edges. `graph` is
/// indexed locally; `vertices[i]` is the parent id of local vertex i (ascending).
struct InducedSubgraph {
    std::vector<Vertex> vertices;
    WeightedGraph graph;

    bool empty() const noexcept { return vertices.empty(); }
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> subset);

}  // namespace coverbound
