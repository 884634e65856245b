#pragma once

// Brute-force references used to validate the fast paths at small scale.
// Nothing here calls into cover.hpp or the Lanczos solver.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "coverbound/cover.hpp"
#include "coverbound/graph.hpp"

namespace coverbound::oracle {

struct WalkEnumeration {
    std::vector<std::size_t> counts;                       ///< walks of length 0..r
    std::vector<std::vector<std::vector<Vertex>>> walks;   ///< grouped by length; empty unless kept
};

/// All non-backtracking walks of length <= r from v by plain recursion over
/// adjacency lists. Throws BudgetExceeded past `budget` walks.
WalkEnumeration enumerate_nb_walks(const WeightedGraph& g, Vertex v, std::size_t r,
                                   std::size_t budget = 1'000'000, bool keep_walks = true);

/// Every non-backtracking walk of exactly length k in g (all start vertices).
std::vector<std::vector<Vertex>> all_nb_walks(const WeightedGraph& g, std::size_t k,
                                              std::size_t budget = 1'000'000);

/// Row-major symmetric matrix.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

DenseMatrix dense_adjacency(const WeightedGraph& g);
DenseMatrix dense_adjacency(const UnraveledBall& ball);

struct DenseSpectrum {
    std::vector<double> values;                 ///< descending
    std::vector<std::vector<double>> vectors;   ///< vectors[k] pairs with values[k]; empty unless kept
};

inline constexpr std::size_t kMaxDenseDimension = 2000;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// tol * ||A||_F.
DenseSpectrum dense_eigs(DenseMatrix a, double tol = 1e-10, bool keep_vectors = false);

struct JensenGap {
    double lhs;  ///< sum fn(x_i)
    double rhs;  ///< n fn(mean)
    bool holds;  ///< lhs >= rhs - 1e-12 * max(1, |rhs|)
};

/// Compares sum fn(x_i) against n fn(mean x) for values inside [lo, hi].
JensenGap jensen_gap(std::span<const double> values, const std::function<double(double)>& fn,
                     double lo, double hi);

}  // namespace coverbound::oracle
