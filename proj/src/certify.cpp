#include "coverbound/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coverbound/numeric.hpp"
#include "coverbound/parallel.hpp"
#include "coverbound/rng.hpp"

namespace coverbound {

std::string to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::theorem_vector: return "theorem-vector";
        case CertificateKind::case1_vector: return "case1-vector";
        case CertificateKind::lambda2_witness: return "lambda2-witness";
        case CertificateKind::lemma42_pair: return "lemma42-pair";
    }
    return "unknown";
}

std::string to_string(CertificationError::Reason reason) {
    switch (reason) {
        case CertificationError::Reason::applicability_violated: return "applicability-violated";
        case CertificationError::Reason::no_qualifying_vertex: return "no-qualifying-vertex";
        case CertificationError::Reason::empty_core: return "empty-core";
        case CertificationError::Reason::verification_failed: return "verification-failed";
    }
    return "unknown";
}

namespace {

void require_radius(int r) {
    if (r < 1) throw PreconditionError("radius r must be a positive integer");
}

std::string walk_label(const WeightedGraph& g, std::span<const Vertex> walk) {
    std::string s;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i) s += '-';
        s += g.label(walk[i]);
    }
    return s;
}

/// Accumulates the proof vector over all walks from one start vertex.
struct ForestWalker {
    const WeightedGraph& g;
    const DirectedEdges& edges;
    const ChainSpec& chain;
    std::span<const double> gv;
    std::span<const double> x;  // x[i-1] multiplies walks of length i
    std::size_t budget;
    bool keep;

    KahanSum ff, faf;
    std::vector<KahanSum> levels;
    std::vector<Vertex> path;
    std::vector<std::pair<std::string, double>> entries;
    std::size_t nodes = 0;

    void visit(EdgeId e, std::size_t depth, double prob, double f) {
        if (++nodes > budget) throw BudgetExceeded(depth, nodes, budget);
        ff += f * f;
        levels[depth - 1] += f * f;
        path.push_back(edges[e].head);
        if (keep && f != 0.0) entries.emplace_back(walk_label(g, path), f);
        if (depth < x.size()) {
            const auto next = edges.prolongations(e);
            const auto probs = chain.row(e);
            for (std::size_t k = 0; k < next.size(); ++k) {
                const double p2 = prob * probs[k];
                const double f2 = x[depth] * gv[next[k]] * std::sqrt(p2);
                faf += 2.0 * edges[next[k]].weight * f * f2;
                visit(next[k], depth + 1, p2, f2);
            }
        }
        path.pop_back();
    }
};

}  // namespace

Certificate build_theorem_vector(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn, int r,
                                 const CertifyOptions& options) {
    require_radius(r);
    if (min_combinatorial_degree(g) < 2) throw PreconditionError("minimum degree below 2");
    const DirectedEdges& edges = chain.states();
    if (edges.size() != g.adjacency().size()) throw PreconditionError("chain is not assigned to this graph");

    const auto gv = fn.evaluate(g, edges);
    const auto pi = chain.pi();
    const auto x = path_top_eigenvector(static_cast<std::size_t>(r) + 1);
    const std::size_t n = g.vertex_count();

    std::vector<ForestWalker> walkers;
    walkers.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        walkers.push_back({g, edges, chain, gv, x, options.budget, options.keep_vector, {}, {}, {}, {}, {}, 0});
        walkers.back().levels.resize(x.size());
    }
    parallel_for(n, options.threads, [&](std::size_t v) {
        ForestWalker& w = walkers[v];
        // The root carries f = 0, so it contributes nothing to either form.
        w.path.push_back(static_cast<Vertex>(v));
        w.nodes = 1;
        for (EdgeId e : edges.out_edges(static_cast<Vertex>(v)))
            w.visit(e, 1, pi[e], x[0] * gv[e] * std::sqrt(pi[e]));
    });

    KahanSum ff, faf;
    std::vector<KahanSum> levels(x.size());
    Certificate cert{CertificateKind::theorem_vector};
    for (auto& w : walkers) {
        ff += w.ff.value();
        faf += w.faf.value();
        for (std::size_t i = 0; i < x.size(); ++i) levels[i] += w.levels[i].value();
        for (auto& entry : w.entries) cert.entries.push_back(std::move(entry));
    }
    if (!(ff.value() > 0.0)) throw PreconditionError("theorem vector is zero (g vanishes on the support of pi)");

    const double rhs = general_rhs(g, chain, fn);
    KahanSum denom;
    for (EdgeId e = 0; e < edges.size(); ++e) denom += gv[e] * gv[e] * pi[e];

    cert.rayleigh = faf.value() / ff.value();
    cert.bound = path_lambda1(x.size()) * rhs;
    cert.slack = cert.rayleigh - cert.bound;
    cert.meta = {r, chain.name(), fn.name(), regularity(g), average_combinatorial_degree(g)};
    for (auto& l : levels) cert.level_sq_norms.push_back(l.value());
    cert.details = {{"general_rhs", rhs},
                    {"path_lambda1", path_lambda1(x.size())},
                    {"g_sq_pi", denom.value()},
                    {"norm_sq", ff.value()},
                    {"quadratic_form", faf.value()}};
    cert.verified = std::abs(cert.slack) <= kTheoremTol * std::max(1.0, std::abs(cert.bound));
    return cert;
}

std::vector<double> cover_spectral_radii(const WeightedGraph& g, int r, const CertifyOptions& options) {
    if (r < 0) throw PreconditionError("radius must be non-negative");
    const DirectedEdges edges(g);
    std::vector<double> out(g.vertex_count());
    parallel_for(g.vertex_count(), options.threads, [&](std::size_t v) {
        const auto tree = unravel(g, edges, static_cast<Vertex>(v), static_cast<std::uint32_t>(r), options.budget);
        out[v] = lambda1(TreeOperator(tree), options.solver).value;
    });
    return out;
}

ExistenceResult existence_against(std::vector<double> per_vertex, int r, double rhs) {
    require_radius(r);
    if (per_vertex.empty()) throw PreconditionError("empty graph");
    const auto best = std::max_element(per_vertex.begin(), per_vertex.end());  // first maximum
    const double lhs = *best / path_lambda1(static_cast<std::size_t>(r) + 1);
    const auto vertex = static_cast<Vertex>(best - per_vertex.begin());
    return {vertex, lhs, rhs, std::move(per_vertex), lhs >= rhs - kTheoremTol};
}

ExistenceResult theorem_existence_check(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn,
                                        int r, const CertifyOptions& options) {
    require_radius(r);
    const double rhs = general_rhs(g, chain, fn);
    return existence_against(cover_spectral_radii(g, r, options), r, rhs);
}

Certificate case1_vector(const WeightedGraph& g, EdgeId e, int r, const CertifyOptions& options) {
    require_radius(r);
    const DirectedEdges edges(g);
    if (e >= edges.size()) throw PreconditionError("directed edge id out of range");
    const auto w = regularity(g);
    if (!w) throw PreconditionError("case 1 vector needs a regular graph");

    const Vertex v = edges[e].tail;
    const auto tree = unravel(g, edges, v, static_cast<std::uint32_t>(r), options.budget);
    const NodeId child = 1 + static_cast<NodeId>(e - edges.out_edges(v).front());
    std::vector<double> f(tree.size(), 0.0);
    f[tree.root()] = 1.0;
    f[child] = 1.0;

    Certificate cert{CertificateKind::case1_vector, v};
    cert.rayleigh = rayleigh(TreeOperator(tree), f);
    cert.bound = mu() * *w;
    cert.slack = cert.rayleigh - cert.bound;
    cert.meta = {r, "", "", *w, average_combinatorial_degree(g)};
    cert.details = {{"edge_weight", edges[e].weight}, {"tree_nodes", static_cast<double>(tree.size())}};
    if (options.keep_vector) {
        cert.entries.emplace_back(g.label(v), 1.0);
        const Vertex walk[] = {v, edges[e].head};
        cert.entries.emplace_back(walk_label(g, walk), 1.0);
    }
    cert.verified = std::abs(cert.rayleigh - edges[e].weight) <= kIdentityTol * std::max(1.0, edges[e].weight) &&
                    cert.slack >= -kIdentityTol;
    return cert;
}

Lemma42Result verify_lemma42(const WeightedGraph& g, Vertex v, int r, const CertifyOptions& options) {
    require_radius(r);
    const auto sub = ball(g, v, static_cast<std::uint32_t>(r));
    const auto tree = unravel(g, v, static_cast<std::uint32_t>(r), options.budget);
    const double lhs = lambda1(AdjacencyOperator(sub.graph), options.solver).value;
    const double rhs = lambda1(TreeOperator(tree), options.solver).value;
    return {lhs, rhs, sub.vertices.size(), tree.size(), lhs >= rhs - kTheoremTol};
}

Certificate lambda2_certificate(const WeightedGraph& g, int r, const CertifyOptions& options) {
    using Reason = CertificationError::Reason;
    require_radius(r);
    const std::size_t n = g.vertex_count();
    if (n < 2 || !is_connected(g)) throw PreconditionError("lambda2 certificate needs a connected graph");
    if (min_combinatorial_degree(g) < 2) throw PreconditionError("lambda2 certificate needs minimum degree >= 2");
    const auto reg = regularity(g);
    if (!reg) throw PreconditionError("lambda2 certificate needs a regular graph");
    const double w = *reg;
    const double d = average_combinatorial_degree(g);

    const BoundValue weak = weak_rhs(w, d);
    if (!weak.applicable())
        throw CertificationError(Reason::applicability_violated,
                                 "average degree " + std::to_string(d) + " is below both the standard (" +
                                     std::to_string(threshold_degree()) + ") and refined (1/t0) thresholds");
    const double bound = path_lambda1(static_cast<std::size_t>(r) + 1) * weak.value;
    const double theta = 2.0 * weak.value;

    const auto radii = cover_spectral_radii(g, r, options);
    std::vector<Vertex> qualifying;
    for (Vertex v = 0; v < n; ++v)
        if (radii[v] >= bound - kTheoremTol) qualifying.push_back(v);
    if (qualifying.empty())
        throw CertificationError(Reason::no_qualifying_vertex,
                                 "no vertex has lambda1 of its unraveled ball above " + std::to_string(bound));
    std::stable_sort(qualifying.begin(), qualifying.end(),
                     [&](Vertex a, Vertex b) { return radii[a] > radii[b]; });

    std::vector<char> has_core(n, 0);
    parallel_for(n, options.threads, [&](std::size_t v) {
        has_core[v] = !peel_core(residual(g, static_cast<Vertex>(v), static_cast<std::uint32_t>(r)), theta).empty();
    });
    const auto core_count = static_cast<std::size_t>(std::count(has_core.begin(), has_core.end(), 1));

    auto chosen = std::find_if(qualifying.begin(), qualifying.end(), [&](Vertex v) { return has_core[v]; });
    if (chosen == qualifying.end())
        throw CertificationError(Reason::empty_core,
                                 "no qualifying vertex leaves a subgraph with minimum weighted degree " +
                                     std::to_string(theta) + " outside G(v, r+1)");
    const Vertex v = *chosen;
    const auto ur = static_cast<std::uint32_t>(r);

    const auto sub = ball(g, v, ur);
    const auto top = lambda1(AdjacencyOperator(sub.graph), options.solver);
    std::vector<double> f1(n, 0.0);
    for (std::size_t i = 0; i < sub.vertices.size(); ++i) f1[sub.vertices[i]] = std::abs(top.vector[i]);

    const auto core = peel_core(residual(g, v, ur), theta);
    std::vector<double> f2(n, 0.0);
    for (Vertex u : core.vertices) f2[u] = 1.0;

    const AdjacencyOperator adj(g);
    std::vector<double> af2(n);
    adj.apply(f2, af2);
    const double cross = dot(f1, af2);

    KahanSum s1;
    for (double x : f1) s1 += x;
    const double c1 = static_cast<double>(core.vertices.size());
    const double c2 = -s1.value();
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = s1.value() == 0.0 ? f1[i] : c1 * f1[i] + c2 * f2[i];
    const double fnorm = norm2(f);
    for (double& x : f) x /= fnorm;
    KahanSum total;
    for (double x : f) total += x;
    const double orthogonality = std::abs(total.value());

    Certificate cert{CertificateKind::lambda2_witness, v};
    cert.rayleigh = rayleigh(adj, f);
    cert.bound = bound;
    cert.slack = cert.rayleigh - bound;
    cert.meta = {r, "", "", w, d};
    const double lam2 = lambda2(g, options.solver).value;
    cert.details = {{"lambda2", lam2},
                    {"cover_lambda1", radii[v]},
                    {"ball_lambda1", rayleigh(adj, f1)},
                    {"core_rayleigh", rayleigh(adj, f2)},
                    {"core_threshold", theta},
                    {"ball_vertices", static_cast<double>(sub.vertices.size())},
                    {"core_vertices", static_cast<double>(core.vertices.size())},
                    {"c1", s1.value() == 0.0 ? 1.0 : c1},
                    {"c2", s1.value() == 0.0 ? 0.0 : c2},
                    {"orthogonality", orthogonality},
                    {"cross_term", cross},
                    {"qualifying_vertices", static_cast<double>(qualifying.size())},
                    {"core_hypothesis_vertices", static_cast<double>(core_count)},
                    {"core_hypothesis_all", core_count == n ? 1.0 : 0.0}};
    if (options.keep_vector)
        for (Vertex u = 0; u < n; ++u)
            if (f[u] != 0.0) cert.entries.emplace_back(g.label(u), f[u]);
    cert.verified = orthogonality <= 1e-10 && cross == 0.0 && cert.rayleigh >= bound - kEigenTol &&
                    cert.rayleigh <= lam2 + kEigenTol;
    return cert;
}

RatioIdentityReport verify_ratio_identity(const WeightedGraph& g, const ChainSpec& chain, std::size_t sample_walks,
                                          std::uint64_t seed) {
    const DirectedEdges& edges = chain.states();
    if (edges.size() != g.adjacency().size()) throw PreconditionError("chain is not assigned to this graph");
    const auto pi = chain.pi();
    SplitMix64 rng(seed);
    RatioIdentityReport report;

    auto pick = [&](std::span<const double> probs) {
        const double u = rng.uniform();
        double cum = 0.0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            cum += probs[k];
            if (u < cum) return k;
        }
        return probs.size() - 1;
    };

    for (std::size_t s = 0; s < sample_walks; ++s) {
        const std::size_t length = 2 + rng.below(4);
        EdgeId e = static_cast<EdgeId>(pick(pi));
        std::vector<Vertex> walk{edges[e].tail, edges[e].head};
        EdgeId prev = e;
        for (std::size_t i = 1; i < length; ++i) {
            prev = e;
            e = edges.prolongations(e)[pick(chain.row(e))];
            walk.push_back(edges[e].head);
        }
        const double full = walk_probability(chain, walk);
        const double shorter = walk_probability(chain, std::span(walk).first(walk.size() - 1));
        const double p = chain.transition(prev, e);
        const double err = shorter > 0.0 && p > 0.0 ? std::abs(full / shorter - p) / p : 1.0;
        ++report.walks_checked;
        report.max_relative_error = std::max(report.max_relative_error, err);
        if (err > kIdentityTol) {
            ++report.failures;
            report.failed_walks.push_back(walk);
        }
    }
    return report;
}

}  // namespace coverbound
