#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverbound/bounds.hpp"
#include "coverbound/cover.hpp"
#include "coverbound/errors.hpp"
#include "coverbound/graph.hpp"
#include "coverbound/markov.hpp"
#include "coverbound/spectra.hpp"

namespace coverbound {

enum class CertificateKind { theorem_vector, case1_vector, lambda2_witness, lemma42_pair };

std::string to_string(CertificateKind kind);

struct CertificateMeta {
    std::optional<int> r;
    std::string chain;
    std::string g;
    std::optional<double> w;
    std::optional<double> d;
};

/// An explicit test vector with its Rayleigh quotient and the bound it
/// witnesses. `entries` holds the nonzero coordinates (node or vertex label,
/// value) when the vector was kept; `details` carries construction-specific
/// scalars (ball sizes, coefficients, cross-checks).
struct Certificate {
    CertificateKind kind;
    std::optional<Vertex> vertex;
    std::vector<std::pair<std::string, double>> entries;
    double rayleigh = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    CertificateMeta meta;
    std::vector<std::pair<std::string, double>> details;
    /// Per-level squared norms sum_{w in W_i} f(w)^2 (theorem vectors only).
    std::vector<double> level_sq_norms;
    bool verified = false;
};

struct CertifyOptions {
    std::size_t budget = kDefaultNodeBudget;
    unsigned threads = 0;
    bool keep_vector = false;
    SolverOptions solver{};
};

/// Tolerances used when deciding whether a certificate verifies.
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kTheoremTol = 1e-9;
inline constexpr double kEigenTol = 1e-8;

/// The proof vector on the forest of unraveled balls of radius r + 1:
/// f(w) = x_i g(last edge of w) sqrt(Pr(Y_i = w)) on walks of length i >= 1,
/// zero at the roots, with x the top eigenvector of P_{r+1}. The forest is
/// never materialized; <f, f> and <f, A f> are accumulated per start vertex.
/// `bound` is lambda_1(P_{r+1}) * general_rhs and `verified` means
/// |rayleigh - bound| <= 1e-9 (relative to max(1, |bound|)).
Certificate build_theorem_vector(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn,
                                 int r, const CertifyOptions& options = {});

/// lambda_1(G~(v, r)) for every vertex v.
std::vector<double> cover_spectral_radii(const WeightedGraph& g, int r, const CertifyOptions& options = {});

struct ExistenceResult {
    Vertex vertex;                    ///< argmax, smallest id on ties
    double lhs;                       ///< max_v lambda_1(G~(v, r)) / lambda_1(P_{r+1})
    double rhs;
    std::vector<double> per_vertex;   ///< lambda_1(G~(v, r))
    bool holds;                       ///< lhs >= rhs - 1e-9
};

/// Compares precomputed per-vertex radii against rhs.
ExistenceResult existence_against(std::vector<double> per_vertex, int r, double rhs);

ExistenceResult theorem_existence_check(const WeightedGraph& g, const ChainSpec& chain, const EdgeFunction& fn,
                                        int r, const CertifyOptions& options = {});

/// Indicator of {(v), (v, u)} on G~(v, r) for e = (v, u); its Rayleigh quotient
/// is w_e. Bound is mu * w; `verified` when w_e >= mu w.
Certificate case1_vector(const WeightedGraph& g, EdgeId e, int r, const CertifyOptions& options = {});

struct Lemma42Result {
    double lhs;  ///< lambda_1(G(v, r))
    double rhs;  ///< lambda_1(G~(v, r))
    std::size_t ball_vertices;
    std::size_t cover_nodes;
    bool holds;  ///< lhs >= rhs - 1e-9
};

Lemma42Result verify_lemma42(const WeightedGraph& g, Vertex v, int r, const CertifyOptions& options = {});

class CertificationError : public Error {
public:
    enum class Reason { applicability_violated, no_qualifying_vertex, empty_core, verification_failed };

    CertificationError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

std::string to_string(CertificationError::Reason reason);

/// Witness for lambda_2(G) >= lambda_1(P_{r+1}) w sqrt(d-1)/d on a connected
/// w-regular graph: f = c1 f1 + c2 f2 orthogonal to the all-ones vector, with
/// f1 the Perron vector of the ball G(v, r) and f2 the indicator of the peeled
/// core of G minus G(v, r+1) at threshold 2 w sqrt(d-1)/d. The vertex with the
/// largest lambda_1(G~(v, r)) among those that qualify and have a nonempty
/// core is used. Also reports in `details` how many vertices satisfy the
/// core hypothesis and a cross-check against lambda2(G).
Certificate lambda2_certificate(const WeightedGraph& g, int r, const CertifyOptions& options = {});

struct RatioIdentityReport {
    std::size_t walks_checked = 0;
    std::size_t failures = 0;
    double max_relative_error = 0.0;
    std::vector<std::vector<Vertex>> failed_walks;
};

/// Samples walks of length 2..5 from the chain and checks
/// Pr(Y_i = w) / Pr(Y_{i-1} = w^-) = p(w'', w') to 1e-12 relative.
RatioIdentityReport verify_ratio_identity(const WeightedGraph& g, const ChainSpec& chain, std::size_t sample_walks,
                                          std::uint64_t seed);

}  // namespace coverbound
