#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverbound/graph.hpp"
#include "coverbound/markov.hpp"

namespace coverbound {

/// A real function on W1(G): constant one, the inverse square root of the
/// complement (w(head(e)) - w_e)^(-1/2), or an explicit table indexed by
/// directed edge id. On a w-regular graph the complement is w - w_e.
class EdgeFunction {
public:
    static EdgeFunction one();
    static EdgeFunction inverse_sqrt_complement();
    static EdgeFunction table(std::vector<double> values, std::string name = "table");

    const std::string& name() const noexcept { return name_; }

    /// Values on every directed edge; throws PreconditionError on a
    /// non-finite value or a table of the wrong size.
    std::vector<double> evaluate(const WeightedGraph& g, const DirectedEdges& edges) const;

private:
    enum class Kind { one, inverse_sqrt_complement, table };
    EdgeFunction(Kind kind, std::string name, std::vector<double> values = {})
        : kind_(kind), name_(std::move(name)), values_(std::move(values)) {}

    Kind kind_;
    std::string name_;
    std::vector<double> values_;
};

enum class BoundKind { general, strong_regular, simple_regular, weak_regular, alon_boppana, universal_cover };

std::string to_string(BoundKind kind);

struct Applicability {
    std::string condition;
    bool satisfied;
};

struct BoundInputs {
    std::optional<double> w;
    std::optional<double> d;
    std::optional<int> r;
    std::string chain;
    std::string g;
};

struct BoundValue {
    BoundKind kind;
    double value;
    BoundInputs inputs;
    std::vector<Applicability> applicability;

    /// True when at least one listed condition is satisfied (the bounds accept
    /// alternative sufficient conditions) or none are listed.
    bool applicable() const;
};

/// Ratio of sum_{e1 -> e2} w(e2) g(e1) g(e2) pi(e1) sqrt(p(e1,e2)) to
/// sum_e g(e)^2 pi(e), with compensated sums.
double general_rhs(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn);

/// The weighted-chain instance written out for a w-regular graph:
/// sum g1 g2 w1 w2^{3/2} (w - w1)^{1/2} over sum g^2 w (w - w).
double strong_rhs(const WeightedGraph& g, double w, const EdgeFunction& fn);

/// sum_e w_e^{3/2} (w - w_e)^{1/2} / (w |V|).
double simple_rhs(const WeightedGraph& g, double w);

/// 2 * general_rhs: the limit of the unraveled-ball bound as r grows.
double universal_cover_rhs(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn);

/// (3 - sqrt 3) / 4, the inflection point (divided by w) of y^{3/2}(w - y)^{1/2}.
double mu();

/// Larger root of mu^2 d^2 - 4 d + 4 = 0: the least d >= 2 with 2 sqrt(d-1)/d <= mu.
double threshold_degree();

/// 2 sqrt(d - 1) / d <= mu.
bool weak_applicable(double d);

/// w sqrt(d - 1) / d, with standard (d above threshold_degree) and refined
/// (d >= 1/t0) applicability recorded.
BoundValue weak_rhs(double w, double d);

/// lambda_1(P_{r+1}) * w sqrt(d - 1) / d.
double alon_boppana_rhs(double w, double d, int r);

/// y^{3/2} (w - y)^{1/2} on [0, w].
double profile(double y, double w);
double profile_derivative(double y, double w);

struct TangentLine {
    double slope;
    double intercept;
    double operator()(double y) const noexcept { return slope * y + intercept; }
};

/// Tangent of profile(., w) at y = t w.
TangentLine tangent_line(double t, double w);

struct RefinedConstants {
    double t0;
    double x0;
    double residual;
};

/// Solves the tangency system at w = 1: the tangent at t meets the profile
/// again at x(t) = 2 sqrt(t (1 - t)). Bisection on (1e-6, mu - 1e-6).
RefinedConstants refined_constants(double tol = 1e-14);

/// The convex minorant built from the profile on [0, t0 w] and its tangent at
/// t0 w on (t0 w, x0 w].
double h_eval(double y, double t0, double w);

}  // namespace coverbound
