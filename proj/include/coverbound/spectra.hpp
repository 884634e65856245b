#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coverbound/cover.hpp"
#include "coverbound/graph.hpp"

namespace coverbound {

/// A real symmetric linear map given by its action on vectors.
class SymmetricOperator {
public:
    virtual ~SymmetricOperator() = default;
    virtual std::size_t dimension() const = 0;
    /// y = A x; y is overwritten.
    virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
    /// Maximum absolute row sum, an upper bound on the spectral radius.
    virtual double row_sum_bound() const = 0;
};

/// Weighted adjacency matrix of a graph. The graph must outlive the operator.
class AdjacencyOperator final : public SymmetricOperator {
public:
    explicit AdjacencyOperator(const WeightedGraph& g);
    std::size_t dimension() const override { return graph_->vertex_count(); }
    void apply(std::span<const double> x, std::span<double> y) const override;
    double row_sum_bound() const override { return bound_; }

private:
    const WeightedGraph* graph_;
    double bound_;
};

/// Weighted adjacency of an unraveled ball (parent-child edges only). The ball
/// must outlive the operator.
class TreeOperator final : public SymmetricOperator {
public:
    explicit TreeOperator(const UnraveledBall& ball);
    std::size_t dimension() const override { return ball_->size(); }
    void apply(std::span<const double> x, std::span<double> y) const override;
    double row_sum_bound() const override { return bound_; }

private:
    const UnraveledBall* ball_;
    double bound_;
};

struct EigenResult {
    double value = 0.0;
    std::vector<double> vector;  ///< unit length
    double residual = 0.0;       ///< ||A v - value v||_2
    std::size_t matvecs = 0;
};

struct SolverOptions {
    /// Convergence when the residual is at most tol * ||A|| (row-sum estimate).
    double tol = 1e-10;
    std::size_t max_matvecs = 50'000;
    /// Krylov basis size before an explicit restart.
    std::size_t max_basis = 200;
    /// Cap on basis_size * dimension doubles held at once.
    std::size_t max_basis_doubles = 50'000'000;
};

/// lambda_1(P_n) = 2 cos(pi / (n + 1)).
double path_lambda1(std::size_t n);

/// Unit vector with entries proportional to sin(i pi / (n + 1)), i = 1..n.
std::vector<double> path_top_eigenvector(std::size_t n);

/// Deterministic start vector 1 + frac(i * 2654435761 / 2^32).
std::vector<double> start_vector(std::size_t n);

/// Largest eigenvalue by restarted Lanczos with full reorthogonalization on
/// the shifted operator A + cI, c = row_sum_bound(). Throws ConvergenceError
/// past the matvec cap.
EigenResult lambda1(const SymmetricOperator& op, const SolverOptions& options = {});

/// Largest eigenvalue of op restricted to the orthogonal complement of the
/// given orthonormal vectors.
EigenResult lambda1_deflated(const SymmetricOperator& op, std::span<const std::vector<double>> deflate,
                             const SolverOptions& options = {});

/// Second largest adjacency eigenvalue of a connected graph (multiplicity
/// counted, so it equals lambda_1 for a repeated top eigenvalue). Regular
/// graphs deflate the all-ones vector; other graphs deflate the computed top
/// eigenvector.
EigenResult lambda2(const WeightedGraph& g, const SolverOptions& options = {});

/// <f, A f> / <f, f>. Throws PreconditionError on a zero vector.
double rayleigh(const SymmetricOperator& op, std::span<const double> f);

}  // namespace coverbound
