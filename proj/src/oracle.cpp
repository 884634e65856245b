#include "coverbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coverbound/errors.hpp"

namespace coverbound::oracle {

namespace {

struct Enumerator {
    const WeightedGraph& g;
    std::size_t r;
    std::size_t budget;
    bool keep;
    WalkEnumeration& out;
    std::vector<Vertex> walk;
    std::size_t total = 0;

    void visit() {
        const std::size_t len = walk.size() - 1;
        if (++total > budget) throw BudgetExceeded(len, total, budget);
        ++out.counts[len];
        if (keep) out.walks[len].push_back(walk);
        if (len == r) return;
        const Vertex last = walk.back();
        for (const Neighbor& n : g.neighbors(last)) {
            if (len >= 1 && n.vertex == walk[len - 1]) continue;
            walk.push_back(n.vertex);
            visit();
            walk.pop_back();
        }
    }
};

}  // namespace

WalkEnumeration enumerate_nb_walks(const WeightedGraph& g, Vertex v, std::size_t r, std::size_t budget,
                                   bool keep_walks) {
    if (!g.contains(v)) throw PreconditionError("vertex out of range");
    WalkEnumeration out;
    out.counts.assign(r + 1, 0);
    if (keep_walks) out.walks.resize(r + 1);
    Enumerator e{g, r, budget, keep_walks, out, {v}};
    e.visit();
    return out;
}

std::vector<std::vector<Vertex>> all_nb_walks(const WeightedGraph& g, std::size_t k, std::size_t budget) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto e = enumerate_nb_walks(g, v, k, budget, true);
        for (auto& w : e.walks[k]) out.push_back(std::move(w));
        if (out.size() > budget) throw BudgetExceeded(k, out.size(), budget);
    }
    return out;
}

DenseMatrix dense_adjacency(const WeightedGraph& g) {
    DenseMatrix m{g.vertex_count(), std::vector<double>(g.vertex_count() * g.vertex_count(), 0.0)};
    for (const Edge& e : g.edges()) {
        m(e.u, e.v) = e.weight;
        m(e.v, e.u) = e.weight;
    }
    return m;
}

DenseMatrix dense_adjacency(const UnraveledBall& ball) {
    DenseMatrix m{ball.size(), std::vector<double>(ball.size() * ball.size(), 0.0)};
    for (NodeId i = 1; i < ball.size(); ++i) {
        m(i, ball[i].parent) = ball[i].weight;
        m(ball[i].parent, i) = ball[i].weight;
    }
    return m;
}

DenseSpectrum dense_eigs(DenseMatrix a, double tol, bool keep_vectors) {
    const std::size_t n = a.n;
    if (n > kMaxDenseDimension) throw PreconditionError("dense oracle limited to n <= 2000");
    std::vector<double> v;
    if (keep_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }

    double frob = 0.0;
    for (double x : a.a) frob += x * x;
    frob = std::sqrt(frob);
    const double target = tol * std::max(frob, 1e-300);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation annihilating a(p, q) (Golub & Van Loan, sym.schur2).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                if (keep_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v[k * n + p], vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    if (off_norm() > target) throw ConvergenceError("Jacobi sweeps did not converge", off_norm());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    DenseSpectrum out;
    for (std::size_t k : order) {
        out.values.push_back(a(k, k));
        if (keep_vectors) {
            std::vector<double> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
            out.vectors.push_back(std::move(col));
        }
    }
    return out;
}

JensenGap jensen_gap(std::span<const double> values, const std::function<double(double)>& fn, double lo,
                     double hi) {
    if (values.empty()) throw PreconditionError("Jensen gap of an empty sample");
    double lhs = 0.0, mean = 0.0;
    for (double x : values) {
        if (x < lo || x > hi) throw PreconditionError("value outside the convexity domain");
        lhs += fn(x);
        mean += x;
    }
    mean /= static_cast<double>(values.size());
    const double rhs = static_cast<double>(values.size()) * fn(mean);
    return {lhs, rhs, lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs))};
}

}  // namespace coverbound::oracle
