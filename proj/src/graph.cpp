#include "coverbound/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "coverbound/errors.hpp"
#include "coverbound/numeric.hpp"

namespace coverbound {

WeightedGraph WeightedGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                                        std::vector<std::string> labels) {
    if (vertex_count >= kNone) throw InputError("too many vertices");
    if (labels.empty()) {
        labels.reserve(vertex_count);
        for (std::size_t i = 0; i < vertex_count; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != vertex_count) throw InputError("label count does not match vertex count");

    WeightedGraph g;
    g.labels_ = std::move(labels);
    for (Vertex i = 0; i < g.labels_.size(); ++i) {
        if (!g.label_index_.emplace(g.labels_[i], i).second)
            throw InputError("duplicate vertex label '" + g.labels_[i] + "'");
    }

    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (e.u == e.v) throw InputError("loop at vertex " + g.labels_[e.u]);
        if (!std::isfinite(e.weight) || e.weight <= 0.0)
            throw InputError("non-positive or non-finite weight on edge " + g.labels_[e.u] + " " +
                             g.labels_[e.v]);
        g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v)
            throw InputError("duplicate edge " + g.labels_[g.edges_[i].u] + " " +
                             g.labels_[g.edges_[i].v]);
    }

    std::vector<std::size_t> deg(vertex_count, 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adjacency_[fill[e.u]++] = {e.v, e.weight};
        g.adjacency_[fill[e.v]++] = {e.u, e.weight};
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1],
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
    return g;
}

std::optional<Vertex> WeightedGraph::find_label(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> WeightedGraph::adjacency_index(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return std::nullopt;
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Neighbor& n, Vertex x) { return n.vertex < x; });
    if (it == nbrs.end() || it->vertex != v) return std::nullopt;
    return offsets_[u] + static_cast<std::size_t>(it - nbrs.begin());
}

std::optional<double> WeightedGraph::edge_weight(Vertex u, Vertex v) const {
    auto idx = adjacency_index(u, v);
    if (!idx) return std::nullopt;
    return adjacency_[*idx].weight;
}

namespace {

bool is_plain_integer(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(const std::string& s) {
    std::string_view sv(s);
    while (sv.size() > 1 && sv.front() == '0') sv.remove_prefix(1);
    return sv;
}

struct RawEdge {
    std::string u;
    std::string v;
    double weight;
    std::size_t line;
};

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::vector<RawEdge> raw;
    std::vector<std::string> order;
    std::unordered_map<std::string, std::size_t> first_seen;
    std::map<std::pair<std::string, std::string>, std::size_t> seen_pairs;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, w, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b >> w) || (fields >> extra))
            throw InputError("expected '<u> <v> <weight>'", lineno);

        double weight = 0.0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
        if (ec != std::errc() || ptr != w.data() + w.size())
            throw InputError("malformed weight '" + w + "'", lineno);
        if (!std::isfinite(weight) || weight <= 0.0)
            throw InputError("non-positive or non-finite weight '" + w + "'", lineno);
        if (a == b) throw InputError("loop at vertex '" + a + "'", lineno);

        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (auto [it, fresh] = seen_pairs.emplace(key, lineno); !fresh)
            throw InputError("duplicate edge " + a + " " + b + " (first on line " +
                                 std::to_string(it->second) + ")",
                             lineno);
        for (const std::string* s : {&a, &b}) {
            if (first_seen.emplace(*s, order.size()).second) order.push_back(*s);
        }
        raw.push_back({std::move(a), std::move(b), weight, lineno});
    }

    if (std::all_of(order.begin(), order.end(), is_plain_integer)) {
        std::sort(order.begin(), order.end(), [](const std::string& x, const std::string& y) {
            auto sx = strip_zeros(x), sy = strip_zeros(y);
            if (sx.size() != sy.size()) return sx.size() < sy.size();
            if (sx != sy) return sx < sy;
            return x < y;
        });
    }
    std::unordered_map<std::string, Vertex> index;
    for (Vertex i = 0; i < order.size(); ++i) index.emplace(order[i], i);

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const RawEdge& r : raw) edges.push_back({index.at(r.u), index.at(r.v), r.weight});
    const std::size_t n = order.size();
    return WeightedGraph::from_edges(n, edges, std::move(order));
}

WeightedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
    std::string out;
    char buf[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof buf, "%.17g", e.weight);
        out += g.label(e.u);
        out += ' ';
        out += g.label(e.v);
        out += ' ';
        out += buf;
        out += '\n';
    }
    return out;
}

double weighted_degree(const WeightedGraph& g, Vertex v) {
    if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    KahanSum s;
    for (const Neighbor& n : g.neighbors(v)) s += n.weight;
    return s.value();
}

std::vector<double> weighted_degrees(const WeightedGraph& g) {
    std::vector<double> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = weighted_degree(g, v);
    return out;
}

std::optional<double> regularity(const WeightedGraph& g, double rel_tol) {
    if (g.vertex_count() == 0) return std::nullopt;
    const auto degrees = weighted_degrees(g);
    KahanSum total;
    for (double d : degrees) total += d;
    const double mean = total.value() / static_cast<double>(degrees.size());
    if (mean <= 0.0) return std::nullopt;
    for (double d : degrees)
        if (std::abs(d - mean) > rel_tol * mean) return std::nullopt;
    return mean;
}

double average_combinatorial_degree(const WeightedGraph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("average degree of an empty graph");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

std::size_t min_combinatorial_degree(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return 0;
    std::size_t best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

std::size_t max_combinatorial_degree(const WeightedGraph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::uint32_t> bfs_distances(const WeightedGraph& g, Vertex v) {
    if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    std::vector<std::uint32_t> dist(g.vertex_count(), kNone);
    std::deque<Vertex> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (const Neighbor& n : g.neighbors(u)) {
            if (dist[n.vertex] == kNone) {
                dist[n.vertex] = dist[u] + 1;
                queue.push_back(n.vertex);
            }
        }
    }
    return dist;
}

bool is_connected(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kNone; });
}

DirectedEdges::DirectedEdges(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.adjacency().size();
    edges_.resize(m);
    heads_.resize(m);
    out_ids_.resize(m);
    vertex_offsets_.resize(n + 1);
    for (Vertex v = 0; v <= n; ++v) vertex_offsets_[v] = v < n ? g.offset(v) : m;
    std::iota(out_ids_.begin(), out_ids_.end(), EdgeId{0});

    for (Vertex u = 0; u < n; ++u) {
        const auto nbrs = g.neighbors(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const auto id = static_cast<EdgeId>(g.offset(u) + k);
            const auto twin = static_cast<EdgeId>(*g.adjacency_index(nbrs[k].vertex, u));
            edges_[id] = {id, u, nbrs[k].vertex, nbrs[k].weight, twin};
            heads_[id] = nbrs[k].vertex;
        }
    }

    slot_offsets_.assign(m + 1, 0);
    for (EdgeId e = 0; e < m; ++e) slot_offsets_[e + 1] = slot_offsets_[e] + g.degree(edges_[e].head) - 1;
    targets_.reserve(slot_offsets_.back());
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId e2 : out_edges(edges_[e].head))
            if (e2 != edges_[e].twin) targets_.push_back(e2);
    }
}

std::optional<std::size_t> DirectedEdges::slot(EdgeId e1, EdgeId e2) const {
    if (e1 >= size() || e2 >= size()) return std::nullopt;
    const DirectedEdge& a = edges_[e1];
    if (edges_[e2].tail != a.head || e2 == a.twin) return std::nullopt;
    // Prolongations of e1 are the out-edges of head(e1) minus twin(e1), in id order.
    std::size_t pos = e2 - vertex_offsets_[a.head];
    if (e2 > a.twin) --pos;
    return slot_offsets_[e1] + pos;
}

std::optional<EdgeId> DirectedEdges::find(Vertex tail, Vertex head) const {
    if (tail >= vertex_count()) return std::nullopt;
    auto first = heads_.begin() + static_cast<std::ptrdiff_t>(vertex_offsets_[tail]);
    auto last = heads_.begin() + static_cast<std::ptrdiff_t>(vertex_offsets_[tail + 1]);
    auto it = std::lower_bound(first, last, head);
    if (it == last || *it != head) return std::nullopt;
    return static_cast<EdgeId>(it - heads_.begin());
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> subset) {
    InducedSubgraph out;
    out.vertices.assign(subset.begin(), subset.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());

    std::vector<Vertex> local(g.vertex_count(), kNone);
    for (Vertex i = 0; i < out.vertices.size(); ++i) {
        if (!g.contains(out.vertices[i])) throw PreconditionError("subset vertex out of range");
        local[out.vertices[i]] = i;
    }
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    labels.reserve(out.vertices.size());
    for (Vertex v : out.vertices) {
        labels.push_back(g.label(v));
        for (const Neighbor& n : g.neighbors(v))
            if (v < n.vertex && local[n.vertex] != kNone)
                edges.push_back({local[v], local[n.vertex], n.weight});
    }
    out.graph = WeightedGraph::from_edges(out.vertices.size(), edges, std::move(labels));
    return out;
}

}  // namespace coverbound
