#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coverbound/graph.hpp"

namespace coverbound {

/// A stationary Markov chain on W1(G) whose transitions are supported on the
/// prolongation relation. Transition probabilities are stored per prolongation
/// slot (see DirectedEdges::slot), so the support condition holds by layout.
///
/// The constructor validates non-negativity, row sums (within 1e-12), and,
/// when given, that the stationary vector is a probability distribution.
class ChainSpec {
public:
    ChainSpec(std::shared_ptr<const DirectedEdges> states, std::vector<double> transitions,
              std::string name, std::optional<std::vector<double>> stationary = std::nullopt);

    const DirectedEdges& states() const noexcept { return *states_; }
    const std::shared_ptr<const DirectedEdges>& shared_states() const noexcept { return states_; }
    const std::string& name() const noexcept { return name_; }

    /// Probabilities aligned with states().prolongations(e).
    std::span<const double> row(EdgeId e) const {
        return {transitions_.data() + states_->first_slot(e),
                transitions_.data() + states_->first_slot(e + 1)};
    }
    std::span<const double> transitions() const noexcept { return transitions_; }

    /// p(from, to); zero when `to` does not prolong `from`.
    double transition(EdgeId from, EdgeId to) const;

    const std::optional<std::vector<double>>& stationary() const noexcept { return stationary_; }
    /// The stationary vector; throws PreconditionError when it was never set.
    std::span<const double> pi() const;

    ChainSpec with_stationary(std::vector<double> pi) const;

private:
    std::shared_ptr<const DirectedEdges> states_;
    std::vector<double> transitions_;
    std::string name_;
    std::optional<std::vector<double>> stationary_;
};

/// Next edge uniform among the deg(head) - 1 prolongations; pi uniform.
ChainSpec uniform_nb_chain(const WeightedGraph& g);

/// p(e1, e2) = w(e2) / (w(head(e1)) - w(e1)). The stationary vector comes from
/// closed_form_stationary when the graph is regular, otherwise from
/// stationary_iterative.
ChainSpec weighted_nb_chain(const WeightedGraph& g);

/// pi_e = w_e (w - w_e) / S for a w-regular graph, verified to be a fixed point
/// of the weighted chain within 1e-12 before returning.
std::vector<double> closed_form_stationary(const WeightedGraph& g, double w);

/// pi P for a row vector pi over W1(G).
std::vector<double> left_multiply(const ChainSpec& chain, std::span<const double> pi);
double stationary_residual_l1(const ChainSpec& chain, std::span<const double> pi);
double stationary_residual_max(const ChainSpec& chain, std::span<const double> pi);

struct StationaryOptions {
    double tol = 1e-10;
    std::size_t max_iter = 100'000;
    /// Laziness used once oscillation is detected.
    double damping = 0.05;
    /// Oscillation = residual not decreasing across this many iterations.
    std::size_t stall_window = 50;
    bool allow_damping = true;
};

struct StationaryResult {
    std::vector<double> distribution;
    double residual;  ///< ||pi P - pi||_1 at exit
    std::size_t iterations;
    bool damped;
};

/// Power iteration from the uniform distribution. When the residual stalls
/// (periodic chains) it switches to the lazy chain (1 - a) P + a I, which has
/// the same stationary vectors and no periodicity.
StationaryResult stationary_iterative(const ChainSpec& chain, const StationaryOptions& options = {});

/// pi((v0,v1)) * prod p((v_{j-2},v_{j-1}), (v_{j-1},v_j)). Throws
/// PreconditionError on a backtrack or a non-edge.
double walk_probability(const ChainSpec& chain, std::span<const Vertex> walk);

/// Visit frequencies over `steps` transitions after `burn_in`, starting from a
/// state drawn from pi. Empty when steps == 0.
std::vector<double> sample_edge_frequencies(const ChainSpec& chain, std::size_t steps,
                                            std::size_t burn_in, std::uint64_t seed);

}  // namespace coverbound
