// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance [criterion...] [--cli <path to coverbound executable>]
// With no criterion arguments every criterion runs. Exit status is 0 when all
// selected criteria pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../support/corpus.hpp"
#include "coverbound/bounds.hpp"
#include "coverbound/certify.hpp"
#include "coverbound/cli.hpp"
#include "coverbound/cover.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/markov.hpp"
#include "coverbound/oracle.hpp"
#include "coverbound/spectra.hpp"

using namespace coverbound;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

// Pinned tolerances and limits.
constexpr double kMuTol = 1e-6;
constexpr double kT0Tol = 5e-4;
constexpr double kX0Tol = 5e-4;
constexpr double kInvT0Tol = 1e-3;
constexpr double kTangentTol = 1e-4;
constexpr double kThresholdTol = 1e-12;
constexpr double kConstantsSeconds = 1.0;

constexpr double kTheoremTolAbs = 1e-9;
constexpr double kTheoremSeconds = 60.0;
constexpr double kExistenceTol = 1e-9;
constexpr double kSimpleExactTol = 1e-12;

constexpr double kOracleEigTol = 1e-8;
constexpr double kOracleSeconds = 120.0;

constexpr double kFixedPointTol = 1e-12;
constexpr double kIterativeTol = 1e-10;
constexpr double kWalkTotalTol = 1e-10;
constexpr std::size_t kMonteCarloSteps = 1'000'000;

constexpr double kLemmaTol = 1e-9;
constexpr double kLemmaEqualityTol = 1e-10;
constexpr int kLemmaTrials = 500;

constexpr double kLambda2Tol = 1e-8;
constexpr double kAlonBoppanaSeconds = 300.0;

constexpr double kConvexTol = 1e-12;
constexpr int kGrid = 512;
constexpr int kJensenTrials = 1000;

constexpr double kMonotoneTol = 1e-10;
constexpr double kTreeLimitTol = 0.05;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail.clear();
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& text) {
        if (!detail.empty()) detail += "; ";
        detail += text;
    }
};

std::string fmt(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "coverbound_acceptance";
    fs::create_directories(dir);
    return dir;
}

struct CliResult {
    int code;
    std::string out;
};

CliResult cli_in_process(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

CliResult cli_process(const std::string& exe, const std::vector<std::string>& args) {
    std::string cmd = shell_quote(exe);
    for (const auto& a : args) cmd += ' ' + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot start " + exe);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double detail_of(const Certificate& c, const std::string& key) {
    for (const auto& [k, v] : c.details)
        if (k == key) return v;
    return std::nan("");
}

// 1 -------------------------------------------------------------------------
Outcome constants_reproduction() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    auto r = cli_in_process({"constants", "--json"});
    const double elapsed = seconds_since(start);
    if (r.code != 0) o.fail("constants exit code " + std::to_string(r.code));
    const auto res = Json::parse(r.out)["results"];
    auto expect = [&](const char* key, double want, double tol) {
        const double got = res[key].get<double>();
        if (std::abs(got - want) > tol) o.fail(std::string(key) + " = " + fmt(got) + ", want " + fmt(want));
    };
    expect("mu", 0.3169873, kMuTol);
    expect("t0", 0.1389, kT0Tol);
    expect("x0", 0.6917, kX0Tol);
    expect("inv_t0", 7.1980, kInvT0Tol);
    expect("tangent_slope", 0.49087, kTangentTol);
    expect("tangent_intercept", -0.0201444, kTangentTol);
    const double d = res["threshold_degree"].get<double>();
    if (std::abs(2 * std::sqrt(d - 1) / d - mu()) > kThresholdTol) o.fail("threshold degree residual");
    if (elapsed >= kConstantsSeconds) o.fail("runtime " + fmt(elapsed, 3) + " s");
    if (o.passed)
        o.detail = "mu=" + fmt(res["mu"].get<double>(), 8) + " t0=" + fmt(res["t0"].get<double>(), 6) +
                   " x0=" + fmt(res["x0"].get<double>(), 6) + " 1/t0=" + fmt(res["inv_t0"].get<double>(), 6) +
                   " tangent=(" + fmt(res["tangent_slope"].get<double>(), 6) + ", " +
                   fmt(res["tangent_intercept"].get<double>(), 6) + ") threshold d=" + fmt(d, 8) + " in " +
                   fmt(elapsed, 2) + " s";
    return o;
}

std::vector<EdgeFunction> edge_functions(const WeightedGraph& g, std::uint64_t seed) {
    return {EdgeFunction::one(), EdgeFunction::inverse_sqrt_complement(),
            EdgeFunction::table(testing::random_table(2 * g.edge_count(), seed), "random-table")};
}

// 2 -------------------------------------------------------------------------
Outcome theorem_equality(const std::vector<testing::CorpusGraph>& corpus) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t runs = 0;
    double worst = 0.0;
    std::uint64_t seed = 1;
    for (const auto& [name, g] : corpus) {
        const auto fns = edge_functions(g, seed++);
        for (const ChainSpec& chain : {uniform_nb_chain(g), weighted_nb_chain(g)})
            for (const auto& fn : fns)
                for (int r = 1; r <= 3; ++r) {
                    const auto c = build_theorem_vector(g, chain, fn, r);
                    const double diff = std::abs(c.rayleigh - c.bound);
                    worst = std::max(worst, diff);
                    ++runs;
                    if (diff > kTheoremTolAbs)
                        o.fail(name + "/" + chain.name() + "/" + fn.name() + "/r=" + std::to_string(r) +
                               " differs by " + fmt(diff, 3));
                }
    }
    const double elapsed = seconds_since(start);
    if (corpus.size() < 50) o.fail("corpus has only " + std::to_string(corpus.size()) + " graphs");
    if (elapsed >= kTheoremSeconds) o.fail("runtime " + fmt(elapsed, 3) + " s");
    o.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(runs) + " runs, max |rayleigh - bound| " +
           fmt(worst, 3) + ", " + fmt(elapsed, 3) + " s");
    return o;
}

// 3 -------------------------------------------------------------------------
Outcome existence(const std::vector<testing::CorpusGraph>& corpus) {
    Outcome o;
    std::size_t checks = 0;
    std::uint64_t seed = 1;
    double min_margin = 1e300;
    for (const auto& [name, g] : corpus) {
        const double w = regularity(g).value();
        const auto fns = edge_functions(g, seed++);
        const auto uniform = uniform_nb_chain(g), weighted = weighted_nb_chain(g);
        for (int r = 1; r <= 3; ++r) {
            const auto radii = cover_spectral_radii(g, r);
            for (const ChainSpec* chain : {&uniform, &weighted})
                for (const auto& fn : fns) {
                    const auto ex = existence_against(radii, r, general_rhs(g, *chain, fn));
                    ++checks;
                    min_margin = std::min(min_margin, ex.lhs - ex.rhs);
                    if (!(ex.lhs >= ex.rhs - kExistenceTol))
                        o.fail(name + " general r=" + std::to_string(r) + ": " + fmt(ex.lhs) + " < " + fmt(ex.rhs));
                }
            const auto ex = existence_against(radii, r, simple_rhs(g, w));
            ++checks;
            min_margin = std::min(min_margin, ex.lhs - ex.rhs);
            if (!(ex.lhs >= ex.rhs - kExistenceTol))
                o.fail(name + " simple r=" + std::to_string(r) + ": " + fmt(ex.lhs) + " < " + fmt(ex.rhs));
        }
        bool unit = true;
        for (const Edge& e : g.edges()) unit = unit && e.weight == 1.0;
        if (unit) {
            const double d = average_combinatorial_degree(g);
            const double s = simple_rhs(g, w);
            if (std::abs(s - std::sqrt(d - 1)) > kSimpleExactTol)
                o.fail(name + " simple_rhs " + fmt(s, 17) + " != sqrt(d-1)");
        }
    }
    const double k4 = simple_rhs(complete_graph(4), 3.0), pet = simple_rhs(petersen_graph(), 3.0);
    if (std::abs(k4 - std::sqrt(2.0)) > kSimpleExactTol) o.fail("K4 simple_rhs " + fmt(k4, 17));
    if (std::abs(pet - std::sqrt(2.0)) > kSimpleExactTol) o.fail("Petersen simple_rhs " + fmt(pet, 17));
    o.note(std::to_string(checks) + " existence checks, min margin lhs - rhs " + fmt(min_margin, 4) +
           "; K4 and Petersen simple_rhs = sqrt 2");
    return o;
}

// 4 -------------------------------------------------------------------------
Outcome oracle_equivalence() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::uint64_t seed = 9000;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i) * 2;  // 2..200
        WeightedGraph g = i % 3 == 0 && n >= 8 && n % 2 == 0
                              ? weighted_regular_graph(n, 3 + i % 4, 0.5, 2.0, seed)
                              : testing::random_graph(n, std::min(1.0, 5.0 / static_cast<double>(n)), seed, 0.1, 3.0);
        ++seed;
        const double dense = oracle::dense_eigs(oracle::dense_adjacency(g)).values.front();
        const double sparse = lambda1(AdjacencyOperator(g)).value;
        worst = std::max(worst, std::abs(dense - sparse));
        if (std::abs(dense - sparse) > kOracleEigTol) o.fail("graph " + std::to_string(i) + " differs by " + fmt(std::abs(dense - sparse), 3));
    }
    std::size_t balls = 0;
    std::vector<WeightedGraph> small{complete_graph(5), petersen_graph(), cycle_graph(12), path_graph(9)};
    for (int i = 0; i < 16; ++i) small.push_back(testing::random_graph(5 + i % 8, 0.35 + 0.03 * (i % 5), 500 + i));
    for (const auto& g : small) {
        DirectedEdges edges(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (std::uint32_t r = 0; r <= 5; ++r) {
                ++balls;
                if (unravel(g, edges, v, r).level_sizes() != oracle::enumerate_nb_walks(g, v, r).counts)
                    o.fail("level counts differ (n=" + std::to_string(g.vertex_count()) + ", v=" +
                           std::to_string(v) + ", r=" + std::to_string(r) + ")");
            }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= kOracleSeconds) o.fail("runtime " + fmt(elapsed, 3) + " s");
    o.note("100 graphs max |sparse - dense| " + fmt(worst, 3) + "; " + std::to_string(balls) +
           " balls match walk counts; " + fmt(elapsed, 3) + " s");
    return o;
}

// 5 -------------------------------------------------------------------------
Outcome markov_suite(const std::vector<testing::CorpusGraph>& corpus) {
    Outcome o;
    double worst_fixed = 0.0, worst_iter = 0.0, worst_total = 0.0, worst_mc = 0.0;
    for (const auto& [name, g] : corpus) {
        const auto chain = weighted_nb_chain(g);
        const auto closed = closed_form_stationary(g, regularity(g).value());
        const double fixed = stationary_residual_max(chain, closed);
        worst_fixed = std::max(worst_fixed, fixed);
        if (fixed > kFixedPointTol) o.fail(name + " closed form residual " + fmt(fixed, 3));
        const auto it = stationary_iterative(chain);
        double diff = 0.0;
        for (std::size_t e = 0; e < closed.size(); ++e) diff = std::max(diff, std::abs(it.distribution[e] - closed[e]));
        worst_iter = std::max(worst_iter, diff);
        if (diff > kIterativeTol) o.fail(name + " iterative differs by " + fmt(diff, 3));
    }
    std::vector<WeightedGraph> small{cycle_graph(7), complete_graph(5), petersen_graph(),
                                     weighted_regular_graph(10, 3, 0.5, 2.0, 21), weighted_regular_graph(8, 4, 0.5, 2.0, 22)};
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto g = testing::random_graph(10, 0.5, 40 + s, 0.5, 2.0);
        if (min_combinatorial_degree(g) >= 2) small.push_back(g);
    }
    for (const auto& g : small)
        for (const ChainSpec& chain : {uniform_nb_chain(g), weighted_nb_chain(g)}) {
            if (stationary_residual_max(chain, chain.pi()) > kIterativeTol) continue;  // uniform pi not stationary
            for (std::size_t k = 1; k <= 4; ++k) {
                double total = 0.0;
                for (const auto& walk : oracle::all_nb_walks(g, k)) total += walk_probability(chain, walk);
                worst_total = std::max(worst_total, std::abs(total - 1));
                if (std::abs(total - 1) > kWalkTotalTol) o.fail("walk total " + fmt(total, 15) + " at k=" + std::to_string(k));
            }
        }
    const double band = 5.0 / std::sqrt(static_cast<double>(kMonteCarloSteps));
    auto k4 = complete_graph(4);
    auto wr = weighted_regular_graph(10, 3, 0.5, 2.0, 21);
    for (const ChainSpec& chain : {uniform_nb_chain(k4), weighted_nb_chain(wr)}) {
        const auto freq = sample_edge_frequencies(chain, kMonteCarloSteps, 1000, 12345);
        for (std::size_t e = 0; e < freq.size(); ++e) {
            const double dev = std::abs(freq[e] - chain.pi()[e]);
            worst_mc = std::max(worst_mc, dev);
            if (dev > band) o.fail(chain.name() + " frequency deviation " + fmt(dev, 3));
        }
    }
    o.note("fixed point " + fmt(worst_fixed, 3) + ", iterative " + fmt(worst_iter, 3) + ", walk totals " +
           fmt(worst_total, 3) + ", Monte Carlo " + fmt(worst_mc, 3) + " (band " + fmt(band, 3) + ")");
    return o;
}

// 6 -------------------------------------------------------------------------
Outcome lemma42_suite() {
    Outcome o;
    SplitMix64 rng(4242);
    double min_gap = 1e300;
    for (int trial = 0; trial < kLemmaTrials; ++trial) {
        const std::size_t n = 6 + rng.below(45);
        const double p = rng.uniform(1.5, 6.0) / static_cast<double>(n);
        const bool weighted = rng.below(2) == 1;
        auto g = testing::random_graph(n, std::min(1.0, p), rng.next(), weighted ? 0.2 : 1.0, weighted ? 3.0 : 1.0);
        const auto v = static_cast<Vertex>(rng.below(n));
        const int r = 1 + static_cast<int>(rng.below(3));
        const auto res = verify_lemma42(g, v, r);
        min_gap = std::min(min_gap, res.lhs - res.rhs);
        if (!(res.lhs >= res.rhs - kLemmaTol))
            o.fail("trial " + std::to_string(trial) + ": " + fmt(res.lhs) + " < " + fmt(res.rhs));
    }
    auto pet = petersen_graph();
    double worst = 0.0;
    for (Vertex v = 0; v < 10; ++v) {
        const auto res = verify_lemma42(pet, v, 2);
        worst = std::max(worst, std::abs(res.lhs - res.rhs));
    }
    if (worst > kLemmaEqualityTol) o.fail("Petersen r=2 equality off by " + fmt(worst, 3));
    o.note(std::to_string(kLemmaTrials) + " random triples, min lhs - rhs " + fmt(min_gap, 4) +
           "; Petersen r=2 max |lhs - rhs| " + fmt(worst, 3));
    return o;
}

// 7 -------------------------------------------------------------------------
struct AlonBoppanaCase {
    std::size_t n, d;
    int r;
    std::uint64_t seed;
};

void alon_boppana_case(const AlonBoppanaCase& c, Outcome& o, bool informational) {
    const auto start = std::chrono::steady_clock::now();
    const auto path = (scratch() / ("rr" + std::to_string(c.n) + "d" + std::to_string(c.d) + ".txt")).string();
    const std::string tag = "n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + " r=" + std::to_string(c.r);
    auto gen = cli_in_process({"gen", "--family", "random-regular", "--n", std::to_string(c.n), "--d",
                               std::to_string(c.d), "--seed", std::to_string(c.seed), "--out", path});
    if (gen.code != 0) {
        o.fail(tag + ": gen exit " + std::to_string(gen.code));
        return;
    }
    auto run = cli_in_process({"certify", "--graph", path, "--kind", "lambda2", "--r", std::to_string(c.r), "--json"});
    const double elapsed = seconds_since(start);
    const auto j = Json::parse(run.out);
    const double want = path_lambda1(static_cast<std::size_t>(c.r) + 1) * std::sqrt(static_cast<double>(c.d) - 1);
    std::string prefix = informational ? "[info] " + tag : tag;
    if (run.code != 0 || !j["results"].contains("certificate")) {
        std::string why = prefix + ": exit " + std::to_string(run.code);
        if (j["results"].contains("error"))
            why += " (" + j["results"]["error"]["reason"].get<std::string>() + ": " +
                   j["results"]["error"]["message"].get<std::string>() + ")";
        if (informational) o.note(why);
        else o.fail(why);
        return;
    }
    const auto& cert = j["results"]["certificate"];
    const double rayleigh = cert["rayleigh"].get<double>();
    const double lam2 = cert["details"]["lambda2"].get<double>();
    bool ok = true;
    if (std::abs(cert["bound"].get<double>() - want) > 1e-12) ok = false;
    if (!(rayleigh >= want - kLambda2Tol)) ok = false;
    if (!(lam2 >= rayleigh - kLambda2Tol)) ok = false;
    if (elapsed >= kAlonBoppanaSeconds) ok = false;
    const std::string summary = prefix + ": bound " + fmt(want) + ", rayleigh " + fmt(rayleigh) + ", lambda2 " +
                                fmt(lam2) + ", core " + fmt(cert["details"]["core_vertices"].get<double>(), 6) +
                                " vertices, " + fmt(elapsed, 3) + " s";
    if (ok || informational) o.note(summary);
    else o.fail(summary);
}

Outcome alon_boppana() {
    Outcome o;
    alon_boppana_case({3000, 8, 2, 8}, o, false);
    alon_boppana_case({2000, 40, 1, 40}, o, false);
    // Shows the 8-regular, r = 2 witness once n is large enough for the core to survive.
    alon_boppana_case({4000, 8, 2, 8}, o, true);
    return o;
}

// 8 -------------------------------------------------------------------------
Outcome convexity() {
    Outcome o;
    const auto rc = refined_constants();
    for (double w : {1.0, 2.0, 7.5}) {
        const double step = w / kGrid;
        int changes = 0;
        double at = 0.0, prev = 0.0;
        for (int k = 1; k < kGrid; ++k) {
            const double y = k * step;
            const double second = profile(y - step, w) - 2 * profile(y, w) + profile(y + step, w);
            const double s = second > 0 ? 1.0 : -1.0;
            if (k > 1 && s != prev) {
                ++changes;
                at = y;
            }
            prev = s;
        }
        if (changes != 1 || std::abs(at - mu() * w) > step)
            o.fail("w=" + fmt(w) + ": " + std::to_string(changes) + " sign changes, last at " + fmt(at));
        const double x0w = rc.x0 * w;
        const double hs = x0w / kGrid;
        for (int k = 0; k <= kGrid; ++k) {
            const double y = std::min(k * hs, x0w);
            if (h_eval(y, rc.t0, w) > profile(y, w) + kConvexTol) o.fail("h > g at y=" + fmt(y));
            if (k > 0 && k < kGrid &&
                h_eval(y - hs, rc.t0, w) - 2 * h_eval(y, rc.t0, w) + h_eval(y + hs, rc.t0, w) < -kConvexTol * w)
                o.fail("h not convex at y=" + fmt(y));
        }
    }
    SplitMix64 rng(8);
    int violations = 0;
    for (int trial = 0; trial < kJensenTrials; ++trial) {
        const double w = rng.uniform(0.5, 5.0);
        std::vector<double> a(1 + rng.below(30)), b(a.size());
        for (double& x : a) x = rng.uniform(0.0, mu() * w);
        for (double& x : b) x = rng.uniform(0.0, rc.x0 * w);
        violations += !oracle::jensen_gap(a, [w](double y) { return profile(y, w); }, 0.0, mu() * w).holds;
        violations += !oracle::jensen_gap(b, [&](double y) { return h_eval(y, rc.t0, w); }, 0.0, rc.x0 * w).holds;
    }
    if (violations) o.fail(std::to_string(violations) + " Jensen violations");
    o.note("sign change at mu w, h convex and below g on 513 points, " + std::to_string(2 * kJensenTrials) +
           " Jensen trials, " + std::to_string(violations) + " violations");
    return o;
}

// 9 -------------------------------------------------------------------------
Outcome monotone_cover() {
    Outcome o;
    for (auto [name, g] : {std::pair{"K4", complete_graph(4)}, std::pair{"Petersen", petersen_graph()}}) {
        DirectedEdges edges(g);
        const double target = 2 * std::sqrt(average_combinatorial_degree(g) - 1);
        double at8 = 0.0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            double prev = 0.0;
            for (std::uint32_t r = 0; r <= 8; ++r) {
                const double x = lambda1(TreeOperator(unravel(g, edges, v, r))).value;
                if (x < prev - kMonotoneTol) o.fail(std::string(name) + " decreases at v=" + std::to_string(v) + " r=" + std::to_string(r));
                prev = x;
            }
            at8 = prev;
            if (std::abs(prev - target) > kTreeLimitTol)
                o.fail(std::string(name) + " v=" + std::to_string(v) + ": lambda1 at r=8 is " + fmt(prev, 7) +
                       ", 2 sqrt(d-1) = " + fmt(target, 7) + ", gap " + fmt(target - prev, 4) + " > " +
                       fmt(kTreeLimitTol));
        }
        o.note(std::string(name) + " non-decreasing r=0..8, lambda1(r=8) = " + fmt(at8, 7));
        if (!o.passed) break;
    }
    return o;
}

// 10 ------------------------------------------------------------------------
Outcome determinism(const std::string& exe) {
    Outcome o;
    const auto dir = scratch();
    const auto graph = (dir / "det_rr.txt").string();
    const auto wgraph = (dir / "det_wr.txt").string();
    std::ofstream(graph) << serialize_graph(random_regular_graph(40, 4, 77));
    std::ofstream(wgraph) << serialize_graph(weighted_regular_graph(30, 5, 0.5, 2.0, 78));
    std::ofstream(dir / "det_k41.txt") << serialize_graph(complete_graph(41));
    const std::vector<std::vector<std::string>> calls{
        {"constants"},
        {"constants", "--json"},
        {"plot-g"},
        {"gen", "--family", "random-regular", "--n", "200", "--d", "6", "--seed", "3"},
        {"gen", "--family", "weighted-regular", "--n", "60", "--d", "5", "--wmin", "0.5", "--wmax", "2", "--seed", "4", "--json"},
        {"validate", "--graph", wgraph, "--json"},
        {"unravel", "--graph", graph, "--vertex", "3", "--r", "3"},
        {"unravel", "--graph", wgraph, "--r", "2", "--json", "--oracle"},
        {"chain", "--graph", wgraph, "--chain", "weighted"},
        {"chain", "--graph", graph, "--chain", "uniform", "--json"},
        {"bound", "--graph", wgraph, "--kind", "general", "--chain", "weighted", "--g", "inv-sqrt-complement", "--r", "2", "--json"},
        {"bound", "--graph", graph, "--kind", "simple", "--r", "3"},
        {"bound", "--graph", wgraph, "--kind", "alon-boppana", "--r", "2", "--json"},
        {"certify", "--graph", wgraph, "--kind", "theorem", "--r", "2", "--json", "--oracle", "--seed", "5"},
        {"certify", "--graph", wgraph, "--kind", "case1", "--r", "2", "--json", "--vector"},
        {"certify", "--graph", graph, "--kind", "lemma42", "--r", "2", "--json"},
        {"certify", "--graph", (dir / "det_k41.txt").string(), "--kind", "lambda2", "--r", "1", "--json"},
    };
    const bool external = !exe.empty() && fs::exists(exe);
    for (const auto& args : calls) {
        auto a = external ? cli_process(exe, args) : cli_in_process(args);
        auto b = external ? cli_process(exe, args) : cli_in_process(args);
        std::string joined;
        for (const auto& x : args) joined += (joined.empty() ? "" : " ") + x;
        if (a.out.empty()) o.fail("no output from: " + joined);
        if (a.code != b.code || a.out != b.out) o.fail("output differs between runs: " + joined);
    }
    o.note(std::to_string(calls.size()) + " invocations run twice " +
           (external ? std::string("as separate processes") : std::string("in process")) + ", outputs byte-identical");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    std::string exe;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) {
            exe = argv[++i];
        } else if (!a.empty() && a.find_first_not_of("0123456789") == std::string::npos &&
                   std::stoi(a) >= 1 && std::stoi(a) <= 10) {
            selected.push_back(std::stoi(a));
        } else {
            std::cerr << "usage: acceptance [criterion 1..10 ...] [--cli path/to/coverbound]\n";
            return 2;
        }
    }
    if (selected.empty())
        for (int k = 1; k <= 10; ++k) selected.push_back(k);

    std::vector<testing::CorpusGraph> corpus;
    auto need_corpus = [&]() -> const std::vector<testing::CorpusGraph>& {
        if (corpus.empty()) corpus = testing::regular_corpus();
        return corpus;
    };

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"constants reproduction", constants_reproduction},
        {"theorem-vector equality", [&] { return theorem_equality(need_corpus()); }},
        {"existence", [&] { return existence(need_corpus()); }},
        {"oracle equivalence", oracle_equivalence},
        {"Markov suite", [&] { return markov_suite(need_corpus()); }},
        {"ball dominates unraveled ball", lemma42_suite},
        {"Alon-Boppana end-to-end", alon_boppana},
        {"convexity and Jensen", convexity},
        {"monotone cover approximation", monotone_cover},
        {"determinism", [&] { return determinism(exe); }},
    };

    bool all = true;
    for (int k : selected) {
        if (k < 1 || k > 10) {
            std::cerr << "unknown criterion " << k << '\n';
            return 2;
        }
        const auto& [name, fn] = criteria[static_cast<std::size_t>(k - 1)];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << k << ' ' << (o.passed ? "PASS" : "FAIL") << ' ' << name << ": " << o.detail
                  << std::endl;
        all = all && o.passed;
    }
    return all ? 0 : 1;
}
