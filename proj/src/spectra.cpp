#include "coverbound/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "coverbound/errors.hpp"
#include "coverbound/numeric.hpp"

namespace coverbound {

AdjacencyOperator::AdjacencyOperator(const WeightedGraph& g) : graph_(&g), bound_(0.0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) bound_ = std::max(bound_, weighted_degree(g, v));
}

void AdjacencyOperator::apply(std::span<const double> x, std::span<double> y) const {
    const WeightedGraph& g = *graph_;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        double s = 0.0;
        for (const Neighbor& n : g.neighbors(v)) s += n.weight * x[n.vertex];
        y[v] = s;
    }
}

TreeOperator::TreeOperator(const UnraveledBall& ball) : ball_(&ball), bound_(0.0) {
    std::vector<double> rows(ball.size(), 0.0);
    for (NodeId i = 1; i < ball.size(); ++i) {
        rows[i] += ball[i].weight;
        rows[ball[i].parent] += ball[i].weight;
    }
    for (double r : rows) bound_ = std::max(bound_, r);
}

void TreeOperator::apply(std::span<const double> x, std::span<double> y) const {
    const auto nodes = ball_->nodes();
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const BallNode& node = nodes[i];
        y[i] += node.weight * x[node.parent];
        y[node.parent] += node.weight * x[i];
    }
}

double path_lambda1(std::size_t n) {
    if (n == 0) throw PreconditionError("path must have at least one vertex");
    if (n == 1) return 0.0;
    return 2.0 * std::cos(std::numbers::pi / static_cast<double>(n + 1));
}

std::vector<double> path_top_eigenvector(std::size_t n) {
    if (n == 0) throw PreconditionError("path must have at least one vertex");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::sin(static_cast<double>(i + 1) * std::numbers::pi / static_cast<double>(n + 1));
    const double norm = norm2(x);
    for (double& xi : x) xi /= norm;
    return x;
}

std::vector<double> start_vector(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t h = (static_cast<std::uint64_t>(i) * 2654435761ULL) & 0xffffffffULL;
        v[i] = 1.0 + static_cast<double>(h) / 4294967296.0;
    }
    return v;
}

namespace {

void axpy(double a, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void project_out(std::span<const std::vector<double>> basis, std::span<double> v) {
    for (const auto& b : basis) axpy(-dot(b, v), b, v);
}

bool normalize(std::span<double> v) {
    const double n = norm2(v);
    if (!(n > 0.0) || !std::isfinite(n)) return false;
    for (double& x : v) x /= n;
    return true;
}

EigenResult lanczos_top(const SymmetricOperator& op, std::span<const std::vector<double>> deflate,
                        const SolverOptions& options) {
    const std::size_t n = op.dimension();
    if (n == 0) throw PreconditionError("eigenproblem of dimension 0");
    if (deflate.size() >= n) throw PreconditionError("deflation leaves an empty subspace");
    const std::size_t effective = n - deflate.size();

    const double shift = op.row_sum_bound();
    const double scale = std::max(shift, std::numeric_limits<double>::min());
    const double target = options.tol * scale;

    EigenResult result;
    std::vector<double> v = start_vector(n);
    project_out(deflate, v);
    if (!normalize(v)) {
        for (std::size_t i = 0; i < n; ++i) v[i] = std::sin(1.0 + 3.0 * static_cast<double>(i));
        project_out(deflate, v);
        if (!normalize(v)) throw PreconditionError("cannot build a start vector");
    }

    if (shift == 0.0) {
        result.vector = v;
        return result;
    }

    std::vector<double> scratch(n);
    auto apply_shifted = [&](std::span<const double> x, std::span<double> y) {
        op.apply(x, y);
        axpy(shift, x, y);
        project_out(deflate, y);
        ++result.matvecs;
    };

    const std::size_t by_memory = std::max<std::size_t>(2, options.max_basis_doubles / n);
    const std::size_t basis_cap =
        std::max<std::size_t>(1, std::min({options.max_basis, effective, by_memory}));

    double last_residual = std::numeric_limits<double>::infinity();
    for (;;) {
        std::vector<std::vector<double>> basis{v};
        std::vector<double> alpha, beta;
        Eigen::VectorXd ritz;
        std::vector<double> w(n);

        for (std::size_t j = 0;; ++j) {
            apply_shifted(basis[j], w);
            const double a = dot(w, basis[j]);
            axpy(-a, basis[j], w);
            if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : basis) axpy(-dot(w, q), q, w);
            project_out(deflate, w);
            const double b = norm2(w);
            alpha.push_back(a);

            const std::size_t k = j + 1;
            const bool exhausted = b <= 1e-13 * scale || k >= basis_cap;
            const bool out_of_budget = result.matvecs >= options.max_matvecs;
            if (k <= 10 || k % 5 == 0 || exhausted || out_of_budget) {
                Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k);
                Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), k - 1);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
                tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
                ritz = tri.eigenvectors().col(k - 1);
                const double estimate = b * std::abs(ritz(k - 1));
                if (exhausted || out_of_budget || estimate <= 0.5 * target) break;
            }
            beta.push_back(b);
            basis.emplace_back(w.size());
            for (std::size_t i = 0; i < n; ++i) basis.back()[i] = w[i] / b;
        }

        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < static_cast<std::size_t>(ritz.size()); ++i) axpy(ritz(i), basis[i], y);
        project_out(deflate, y);
        normalize(y);

        op.apply(y, scratch);
        ++result.matvecs;
        project_out(deflate, scratch);
        const double value = dot(y, scratch);
        axpy(-value, y, scratch);
        const double residual = norm2(scratch);

        if (residual <= target || residual < last_residual || result.vector.empty()) {
            result.value = value;
            result.vector = y;
            result.residual = residual;
        }
        if (residual <= target) return result;
        if (result.matvecs >= options.max_matvecs)
            throw ConvergenceError("Lanczos did not converge within " +
                                       std::to_string(options.max_matvecs) + " matrix-vector products",
                                   residual);
        last_residual = std::min(last_residual, residual);
        v = std::move(y);
    }
}

}  // namespace

EigenResult lambda1(const SymmetricOperator& op, const SolverOptions& options) {
    return lanczos_top(op, {}, options);
}

EigenResult lambda1_deflated(const SymmetricOperator& op, std::span<const std::vector<double>> deflate,
                             const SolverOptions& options) {
    return lanczos_top(op, deflate, options);
}

EigenResult lambda2(const WeightedGraph& g, const SolverOptions& options) {
    if (g.vertex_count() < 2) throw PreconditionError("lambda2 needs at least two vertices");
    if (!is_connected(g)) throw PreconditionError("lambda2 needs a connected graph");
    AdjacencyOperator op(g);
    std::vector<std::vector<double>> deflate;
    if (regularity(g, 1e-12)) {
        deflate.emplace_back(g.vertex_count(), 1.0 / std::sqrt(static_cast<double>(g.vertex_count())));
    } else {
        deflate.push_back(lambda1(op, options).vector);
    }
    return lanczos_top(op, deflate, options);
}

double rayleigh(const SymmetricOperator& op, std::span<const double> f) {
    if (f.size() != op.dimension()) throw PreconditionError("vector dimension mismatch");
    const double ff = dot(f, f);
    if (!(ff > 0.0)) throw PreconditionError("Rayleigh quotient of the zero vector");
    std::vector<double> af(f.size());
    op.apply(f, af);
    return dot(f, af) / ff;
}

}  // namespace coverbound
