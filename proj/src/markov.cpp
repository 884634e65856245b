#include "coverbound/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coverbound/errors.hpp"
#include "coverbound/numeric.hpp"
#include "coverbound/rng.hpp"

namespace coverbound {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kClosedFormTol = 1e-12;

void require_min_degree_two(const WeightedGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2)
            throw PreconditionError("vertex " + g.label(v) + " has degree " +
                                    std::to_string(g.degree(v)) +
                                    " (< 2): the chain would have an absorbing state");
    }
}

std::vector<double> weighted_transitions(const DirectedEdges& edges) {
    std::vector<double> p(edges.slot_count());
    for (EdgeId e = 0; e < edges.size(); ++e) {
        const auto next = edges.prolongations(e);
        // Sum of prolongation weights equals w(head(e)) - w(e).
        KahanSum denom;
        for (EdgeId e2 : next) denom += edges[e2].weight;
        if (!(denom.value() > 0.0)) throw PreconditionError("zero transition denominator");
        for (std::size_t k = 0; k < next.size(); ++k)
            p[edges.first_slot(e) + k] = edges[next[k]].weight / denom.value();
    }
    return p;
}

std::size_t sample_index(std::span<const double> probs, double u) {
    double cum = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        cum += probs[k];
        if (u < cum) return k;
    }
    // Rounding left u above the final partial sum: take the last positive entry.
    for (std::size_t k = probs.size(); k-- > 0;)
        if (probs[k] > 0.0) return k;
    return probs.size() - 1;
}

}  // namespace

ChainSpec::ChainSpec(std::shared_ptr<const DirectedEdges> states, std::vector<double> transitions,
                     std::string name, std::optional<std::vector<double>> stationary)
    : states_(std::move(states)), transitions_(std::move(transitions)), name_(std::move(name)) {
    if (!states_) throw PreconditionError("chain without state space");
    if (transitions_.size() != states_->slot_count())
        throw PreconditionError("transition table does not match the prolongation relation");
    for (EdgeId e = 0; e < states_->size(); ++e) {
        KahanSum s;
        for (double p : row(e)) {
            if (!std::isfinite(p) || p < 0.0) throw PreconditionError("negative transition probability");
            s += p;
        }
        if (std::abs(s.value() - 1.0) > kRowSumTol)
            throw PreconditionError("row " + std::to_string(e) + " sums to " +
                                    std::to_string(s.value()) + ", not 1");
    }
    if (stationary) *this = with_stationary(std::move(*stationary));
}

double ChainSpec::transition(EdgeId from, EdgeId to) const {
    auto s = states_->slot(from, to);
    return s ? transitions_[*s] : 0.0;
}

std::span<const double> ChainSpec::pi() const {
    if (!stationary_) throw PreconditionError("chain '" + name_ + "' has no stationary distribution");
    return *stationary_;
}

ChainSpec ChainSpec::with_stationary(std::vector<double> pi) const {
    if (pi.size() != states_->size()) throw PreconditionError("stationary vector has wrong size");
    KahanSum s;
    for (double x : pi) {
        if (!std::isfinite(x) || x < 0.0) throw PreconditionError("negative stationary mass");
        s += x;
    }
    if (std::abs(s.value() - 1.0) > 1e-10) throw PreconditionError("stationary vector does not sum to 1");
    ChainSpec copy = *this;
    copy.stationary_ = std::move(pi);
    return copy;
}

ChainSpec uniform_nb_chain(const WeightedGraph& g) {
    require_min_degree_two(g);
    auto edges = std::make_shared<const DirectedEdges>(g);
    std::vector<double> p(edges->slot_count());
    for (EdgeId e = 0; e < edges->size(); ++e) {
        const auto n = edges->prolongations(e).size();
        std::fill_n(p.begin() + static_cast<std::ptrdiff_t>(edges->first_slot(e)), n,
                    1.0 / static_cast<double>(n));
    }
    std::vector<double> pi(edges->size(), 1.0 / static_cast<double>(edges->size()));
    return ChainSpec(std::move(edges), std::move(p), "uniform", std::move(pi));
}

ChainSpec weighted_nb_chain(const WeightedGraph& g) {
    require_min_degree_two(g);
    auto edges = std::make_shared<const DirectedEdges>(g);
    ChainSpec chain(edges, weighted_transitions(*edges), "weighted");
    if (auto w = regularity(g)) return chain.with_stationary(closed_form_stationary(g, *w));
    auto result = stationary_iterative(chain);
    return chain.with_stationary(std::move(result.distribution));
}

std::vector<double> closed_form_stationary(const WeightedGraph& g, double w) {
    const auto reg = regularity(g);
    if (!reg || std::abs(*reg - w) > 1e-9 * w)
        throw PreconditionError("closed-form stationary distribution needs a w-regular graph");
    require_min_degree_two(g);

    auto edges = std::make_shared<const DirectedEdges>(g);
    std::vector<double> pi(edges->size());
    KahanSum total;
    for (EdgeId e = 0; e < edges->size(); ++e) {
        const double we = (*edges)[e].weight;
        pi[e] = we * (w - we);
        if (!(pi[e] > 0.0)) throw PreconditionError("edge weight not below w");
        total += pi[e];
    }
    for (double& x : pi) x /= total.value();

    ChainSpec chain(edges, weighted_transitions(*edges), "weighted");
    const double res = stationary_residual_max(chain, pi);
    if (res > kClosedFormTol)
        throw ConvergenceError("closed-form distribution is not a fixed point of the weighted chain", res);
    return pi;
}

std::vector<double> left_multiply(const ChainSpec& chain, std::span<const double> pi) {
    const DirectedEdges& edges = chain.states();
    std::vector<double> out(edges.size(), 0.0);
    for (EdgeId e = 0; e < edges.size(); ++e) {
        const auto next = edges.prolongations(e);
        const auto probs = chain.row(e);
        for (std::size_t k = 0; k < next.size(); ++k) out[next[k]] += pi[e] * probs[k];
    }
    return out;
}

double stationary_residual_l1(const ChainSpec& chain, std::span<const double> pi) {
    const auto next = left_multiply(chain, pi);
    KahanSum s;
    for (std::size_t i = 0; i < next.size(); ++i) s += std::abs(next[i] - pi[i]);
    return s.value();
}

double stationary_residual_max(const ChainSpec& chain, std::span<const double> pi) {
    const auto next = left_multiply(chain, pi);
    double worst = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) worst = std::max(worst, std::abs(next[i] - pi[i]));
    return worst;
}

StationaryResult stationary_iterative(const ChainSpec& chain, const StationaryOptions& options) {
    const std::size_t n = chain.states().size();
    if (n == 0) throw PreconditionError("chain has no states");
    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    double damping = 0.0;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_iter = 0;
    double res = best;

    for (std::size_t it = 0; it < options.max_iter; ++it) {
        auto next = left_multiply(chain, pi);
        KahanSum r;
        for (std::size_t i = 0; i < n; ++i) r += std::abs(next[i] - pi[i]);
        res = r.value();
        if (res <= options.tol) return {std::move(pi), res, it, damping > 0.0};

        if (res < best) {
            best = res;
            best_iter = it;
        } else if (damping == 0.0 && options.allow_damping && it - best_iter >= options.stall_window) {
            damping = options.damping;
        }
        if (damping > 0.0)
            for (std::size_t i = 0; i < n; ++i) next[i] = (1.0 - damping) * next[i] + damping * pi[i];

        KahanSum mass;
        for (double x : next) mass += x;
        for (double& x : next) x /= mass.value();
        pi = std::move(next);
    }
    throw ConvergenceError("stationary iteration did not converge in " +
                               std::to_string(options.max_iter) + " iterations",
                           res);
}

double walk_probability(const ChainSpec& chain, std::span<const Vertex> walk) {
    if (walk.size() < 2) throw PreconditionError("walk must have length >= 1");
    const DirectedEdges& edges = chain.states();
    const auto pi = chain.pi();

    auto edge_of = [&](std::size_t j) {
        auto e = edges.find(walk[j], walk[j + 1]);
        if (!e)
            throw PreconditionError("walk step " + std::to_string(j) + " is not an edge");
        return *e;
    };

    EdgeId prev = edge_of(0);
    double prob = pi[prev];
    for (std::size_t j = 1; j + 1 < walk.size(); ++j) {
        if (walk[j + 1] == walk[j - 1])
            throw PreconditionError("walk backtracks at step " + std::to_string(j));
        const EdgeId cur = edge_of(j);
        prob *= chain.transitions()[*edges.slot(prev, cur)];
        prev = cur;
    }
    return prob;
}

std::vector<double> sample_edge_frequencies(const ChainSpec& chain, std::size_t steps,
                                            std::size_t burn_in, std::uint64_t seed) {
    if (steps == 0) return {};
    const DirectedEdges& edges = chain.states();
    SplitMix64 rng(seed);

    EdgeId state = static_cast<EdgeId>(sample_index(chain.pi(), rng.uniform()));
    auto step = [&] {
        const auto next = edges.prolongations(state);
        state = next[sample_index(chain.row(state), rng.uniform())];
    };
    for (std::size_t i = 0; i < burn_in; ++i) step();

    std::vector<std::size_t> visits(edges.size(), 0);
    for (std::size_t i = 0; i < steps; ++i) {
        step();
        ++visits[state];
    }
    std::vector<double> freq(edges.size());
    for (std::size_t e = 0; e < freq.size(); ++e)
        freq[e] = static_cast<double>(visits[e]) / static_cast<double>(steps);
    return freq;
}

}  // namespace coverbound
