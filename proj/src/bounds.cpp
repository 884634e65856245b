#include "coverbound/bounds.hpp"

#include <cmath>

#include "coverbound/errors.hpp"
#include "coverbound/numeric.hpp"
#include "coverbound/spectra.hpp"

namespace coverbound {

EdgeFunction EdgeFunction::one() { return EdgeFunction(Kind::one, "one"); }

EdgeFunction EdgeFunction::inverse_sqrt_complement() {
    return EdgeFunction(Kind::inverse_sqrt_complement, "inv-sqrt-complement");
}

EdgeFunction EdgeFunction::table(std::vector<double> values, std::string name) {
    return EdgeFunction(Kind::table, std::move(name), std::move(values));
}

std::vector<double> EdgeFunction::evaluate(const WeightedGraph& g, const DirectedEdges& edges) const {
    std::vector<double> out(edges.size());
    switch (kind_) {
        case Kind::one:
            std::fill(out.begin(), out.end(), 1.0);
            break;
        case Kind::inverse_sqrt_complement: {
            const auto degrees = weighted_degrees(g);
            for (EdgeId e = 0; e < edges.size(); ++e) {
                const double complement = degrees[edges[e].head] - edges[e].weight;
                if (!(complement > 0.0))
                    throw PreconditionError("inverse-sqrt-complement needs w_e < w on every edge");
                out[e] = 1.0 / std::sqrt(complement);
            }
            break;
        }
        case Kind::table:
            if (values_.size() != edges.size())
                throw PreconditionError("edge function table has " + std::to_string(values_.size()) +
                                        " entries for " + std::to_string(edges.size()) + " directed edges");
            out = values_;
            break;
    }
    for (double x : out)
        if (!std::isfinite(x)) throw PreconditionError("edge function is not finite");
    return out;
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::general: return "general";
        case BoundKind::strong_regular: return "strong";
        case BoundKind::simple_regular: return "simple";
        case BoundKind::weak_regular: return "weak";
        case BoundKind::alon_boppana: return "alon-boppana";
        case BoundKind::universal_cover: return "universal-cover";
    }
    return "unknown";
}

bool BoundValue::applicable() const {
    if (applicability.empty()) return true;
    for (const auto& a : applicability)
        if (a.satisfied) return true;
    return false;
}

namespace {

void require_regular(const WeightedGraph& g, double w) {
    const auto reg = regularity(g);
    if (!reg || std::abs(*reg - w) > 1e-9 * w)
        throw PreconditionError("graph is not " + std::to_string(w) + "-regular");
    if (min_combinatorial_degree(g) < 2) throw PreconditionError("minimum degree below 2");
}

}  // namespace

double general_rhs(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn) {
    const DirectedEdges& edges = chain.states();
    if (edges.size() != g.adjacency().size())
        throw PreconditionError("chain is not assigned to this graph");
    const auto gv = fn.evaluate(g, edges);
    const auto pi = chain.pi();

    KahanSum num, den;
    for (EdgeId e1 = 0; e1 < edges.size(); ++e1) {
        den += gv[e1] * gv[e1] * pi[e1];
        const auto next = edges.prolongations(e1);
        const auto probs = chain.row(e1);
        for (std::size_t k = 0; k < next.size(); ++k)
            num += edges[next[k]].weight * gv[e1] * gv[next[k]] * pi[e1] * std::sqrt(probs[k]);
    }
    if (den.value() == 0.0) throw PreconditionError("g vanishes on the support of pi");
    return num.value() / den.value();
}

double strong_rhs(const WeightedGraph& g, double w, const EdgeFunction& fn) {
    require_regular(g, w);
    const DirectedEdges edges(g);
    const auto gv = fn.evaluate(g, edges);
    KahanSum num, den;
    for (EdgeId e1 = 0; e1 < edges.size(); ++e1) {
        const double w1 = edges[e1].weight;
        den += gv[e1] * gv[e1] * w1 * (w - w1);
        const double lead = gv[e1] * w1 * std::sqrt(w - w1);
        for (EdgeId e2 : edges.prolongations(e1)) {
            const double w2 = edges[e2].weight;
            num += lead * gv[e2] * w2 * std::sqrt(w2);
        }
    }
    if (den.value() == 0.0) throw PreconditionError("g vanishes on every edge");
    return num.value() / den.value();
}

double simple_rhs(const WeightedGraph& g, double w) {
    require_regular(g, w);
    KahanSum s;
    for (const Neighbor& n : g.adjacency()) s += profile(n.weight, w);
    return s.value() / (w * static_cast<double>(g.vertex_count()));
}

double universal_cover_rhs(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn) {
    return 2.0 * general_rhs(g, chain, fn);
}

double mu() { return (3.0 - std::sqrt(3.0)) / 4.0; }

double threshold_degree() {
    const double m = mu();
    const double d = 2.0 * (1.0 + std::sqrt(1.0 - m * m)) / (m * m);
    if (std::abs(2.0 * std::sqrt(d - 1.0) / d - m) > 1e-12)
        throw ConvergenceError("threshold degree does not solve 2 sqrt(d-1)/d = mu",
                               2.0 * std::sqrt(d - 1.0) / d - m);
    return d;
}

bool weak_applicable(double d) { return d >= 2.0 && 2.0 * std::sqrt(d - 1.0) / d <= mu(); }

BoundValue weak_rhs(double w, double d) {
    if (!(d >= 2.0)) throw PreconditionError("weak bound needs d >= 2");
    if (!(w > 0.0)) throw PreconditionError("weak bound needs w > 0");
    static const RefinedConstants refined = refined_constants();
    BoundValue out{BoundKind::weak_regular, w * std::sqrt(d - 1.0) / d, {w, d, std::nullopt, "", ""}, {}};
    out.applicability.push_back({"standard: 2*sqrt(d-1)/d <= mu", weak_applicable(d)});
    out.applicability.push_back({"refined: d >= 1/t0", d >= 1.0 / refined.t0});
    return out;
}

double alon_boppana_rhs(double w, double d, int r) {
    if (!(d >= 2.0)) throw PreconditionError("Alon-Boppana bound needs d >= 2");
    if (r < 1) throw PreconditionError("Alon-Boppana bound needs r >= 1");
    return path_lambda1(static_cast<std::size_t>(r) + 1) * w * std::sqrt(d - 1.0) / d;
}

double profile(double y, double w) { return y * std::sqrt(y) * std::sqrt(w - y); }

double profile_derivative(double y, double w) {
    return 1.5 * std::sqrt(y) * std::sqrt(w - y) - 0.5 * y * std::sqrt(y) / std::sqrt(w - y);
}

TangentLine tangent_line(double t, double w) {
    if (!(t > 0.0 && t < 1.0)) throw PreconditionError("tangent point t must lie in (0, 1)");
    const double y = t * w;
    const double slope = profile_derivative(y, w);
    return {slope, profile(y, w) - slope * y};
}

RefinedConstants refined_constants(double tol) {
    if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
    auto gap = [](double t) {
        const double x = 2.0 * std::sqrt(t * (1.0 - t));
        return tangent_line(t, 1.0)(x) - profile(x, 1.0);
    };
    double lo = 1e-6, hi = mu() - 1e-6;
    double flo = gap(lo);
    if ((flo < 0.0) == (gap(hi) < 0.0)) throw ConvergenceError("no sign change in tangency bracket", flo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = gap(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double t0 = 0.5 * (lo + hi);
    const double x0 = 2.0 * std::sqrt(t0 * (1.0 - t0));
    const double residual = std::abs(gap(t0));
    if (residual > tol) throw ConvergenceError("tangency residual above tolerance", residual);
    if (!(t0 < mu() && mu() < x0)) throw ConvergenceError("tangency root violates t0 < mu < x0", t0);
    return {t0, x0, residual};
}

double h_eval(double y, double t0, double w) {
    const double x0w = 2.0 * std::sqrt(t0 * (1.0 - t0)) * w;
    if (y < 0.0 || y > x0w * (1.0 + 1e-12))
        throw PreconditionError("h is defined on [0, x0 w] only");
    if (y <= t0 * w) return profile(y, w);
    return tangent_line(t0, w)(y);
}

}  // namespace coverbound
