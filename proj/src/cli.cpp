#include "coverbound/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "coverbound/bounds.hpp"
#include "coverbound/certify.hpp"
#include "coverbound/cover.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/graph.hpp"
#include "coverbound/markov.hpp"
#include "coverbound/oracle.hpp"
#include "coverbound/report.hpp"
#include "coverbound/spectra.hpp"

namespace coverbound::cli {

namespace {

struct Options {
    std::string graph;
    std::string chain = "uniform";
    std::string g = "one";
    std::string kind;
    std::string vertex;
    std::string head;
    std::string family;
    std::string out;
    std::size_t budget = kDefaultNodeBudget;
    double tol = 1e-10;
    int r = 1;
    unsigned threads = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 1;
    double wmin = 1.0;
    double wmax = 1.0;
    double w = 1.0;
    bool oracle = false;
    bool json = false;
    bool timing = false;
    bool vector = false;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    if (in.bad()) throw InputError("failed reading '" + path + "'");
    return s.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw InputError("failed writing '" + path + "'");
}

struct LoadedGraph {
    WeightedGraph graph;
    std::string hash;
};

LoadedGraph load_graph(const Options& o) {
    if (o.graph.empty()) throw InputError("--graph is required");
    const std::string text = read_text(o.graph);
    return {parse_graph(std::string_view(text)), hex64(fnv1a(text))};
}

Vertex lookup(const WeightedGraph& g, const std::string& label) {
    auto v = g.find_label(label);
    if (!v) throw InputError("unknown vertex '" + label + "'");
    return *v;
}

ChainSpec make_chain(const WeightedGraph& g, const std::string& name) {
    if (name == "uniform") return uniform_nb_chain(g);
    if (name == "weighted") return weighted_nb_chain(g);
    throw InputError("unknown chain '" + name + "' (expected uniform or weighted)");
}

/// Lines `u v value`, one per directed edge, `#` comments allowed.
EdgeFunction load_table(const WeightedGraph& g, const DirectedEdges& edges, const std::string& path) {
    std::istringstream in(read_text(path));
    std::vector<double> values(edges.size());
    std::vector<char> seen(edges.size(), 0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u, v, value, extra;
        if (!(fields >> u)) continue;
        if (!(fields >> v >> value) || (fields >> extra)) throw InputError("expected 'u v value'", lineno);
        const auto tail = g.find_label(u), head = g.find_label(v);
        const auto e = tail && head ? edges.find(*tail, *head) : std::nullopt;
        if (!e) throw InputError("(" + u + ", " + v + ") is not a directed edge of the graph", lineno);
        double x;
        try {
            std::size_t used = 0;
            x = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw InputError("malformed value '" + value + "'", lineno);
        }
        if (!std::isfinite(x) || x < 0.0) throw InputError("g values must be finite and non-negative", lineno);
        if (seen[*e]) throw InputError("duplicate entry for (" + u + ", " + v + ")", lineno);
        seen[*e] = 1;
        values[*e] = x;
    }
    for (EdgeId e = 0; e < edges.size(); ++e)
        if (!seen[e])
            throw InputError("g table has no entry for directed edge (" + g.label(edges[e].tail) + ", " +
                             g.label(edges[e].head) + ")");
    return EdgeFunction::table(std::move(values), "table:" + path);
}

EdgeFunction make_function(const WeightedGraph& g, const DirectedEdges& edges, const std::string& spec) {
    if (spec == "one") return EdgeFunction::one();
    if (spec == "inv-sqrt-complement") return EdgeFunction::inverse_sqrt_complement();
    if (spec.rfind("table:", 0) == 0) return load_table(g, edges, spec.substr(6));
    throw InputError("unknown g '" + spec + "' (expected one, inv-sqrt-complement or table:<file>)");
}

CertifyOptions certify_options(const Options& o) {
    CertifyOptions c;
    c.budget = o.budget;
    c.threads = o.threads;
    c.keep_vector = o.vector;
    return c;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double regular_weight(const WeightedGraph& g) {
    auto w = regularity(g);
    if (!w) throw PreconditionError("this bound needs a regular graph (weighted degrees equal to 1e-9)");
    return *w;
}

Json per_vertex_table(const WeightedGraph& g, std::span<const double> values, const std::string& key) {
    Json t = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) t.push_back({{"vertex", g.label(v)}, {key, values[v]}});
    return t;
}

// Dense cross-check of lambda_1 on every unraveled ball small enough for Jacobi.
void oracle_cover_check(const WeightedGraph& g, int r, std::span<const double> radii, const Options& o,
                        Report& report) {
    const DirectedEdges edges(g);
    double worst = 0.0;
    std::size_t compared = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto tree = unravel(g, edges, v, static_cast<std::uint32_t>(r), o.budget);
        if (tree.size() > oracle::kMaxDenseDimension) continue;
        const auto dense = oracle::dense_eigs(oracle::dense_adjacency(tree));
        worst = std::max(worst, std::abs(dense.values.front() - radii[v]));
        ++compared;
    }
    report.results["oracle"] = {{"balls_compared", compared}, {"max_abs_difference", worst}};
    report.check("sparse lambda1 matches dense oracle", worst <= 1e-8, "max difference " + fmt(worst));
}

int cmd_validate(const Options& o, Report& report) {
    auto [g, hash] = load_graph(o);
    report.input_hash = hash;
    const auto w = regularity(g);
    const auto deg = weighted_degrees(g);
    const bool empty = g.vertex_count() == 0;
    report.results = {{"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"directed_edges", 2 * g.edge_count()},
                      {"regular", w.has_value()},
                      {"w", w ? Json(*w) : Json(nullptr)},
                      {"average_degree", empty ? 0.0 : average_combinatorial_degree(g)},
                      {"min_degree", empty ? 0 : min_combinatorial_degree(g)},
                      {"max_degree", empty ? 0 : max_combinatorial_degree(g)},
                      {"min_weighted_degree", empty ? 0.0 : *std::min_element(deg.begin(), deg.end())},
                      {"max_weighted_degree", empty ? 0.0 : *std::max_element(deg.begin(), deg.end())},
                      {"connected", is_connected(g)}};
    return kExitOk;
}

int cmd_gen(const Options& o, Report& report, std::ostream& out, bool& printed) {
    GeneratorSpec spec;
    spec.family = parse_family(o.family);
    spec.n = o.n;
    spec.d = o.d;
    spec.weight_min = o.wmin;
    spec.weight_max = o.wmax;
    spec.seed = o.seed;
    const auto g = generate(spec);
    const std::string text = serialize_graph(g);
    report.results = {{"family", to_string(spec.family)},
                      {"n", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"seed", spec.seed},
                      {"max_relative_degree_deviation", max_relative_degree_deviation(g)},
                      {"output_hash", hex64(fnv1a(text))}};
    if (spec.family == Family::weighted_regular) {
        const double dev = max_relative_degree_deviation(g);
        report.check("weighted degrees balanced", dev <= spec.balance_tol, "deviation " + fmt(dev));
    }
    if (!o.out.empty()) {
        write_text(o.out, text);
        report.results["out"] = o.out;
    } else if (o.json) {
        report.results["edge_list"] = text;
    } else {
        out << text;
        printed = true;
    }
    return kExitOk;
}

int cmd_unravel(const Options& o, Report& report, std::ostream& out, std::ostream& err, bool& printed) {
    auto [g, hash] = load_graph(o);
    report.input_hash = hash;
    if (o.r < 0) throw InputError("--r must be non-negative");
    const Vertex v = o.vertex.empty() ? 0 : lookup(g, o.vertex);
    if (!g.contains(v)) throw InputError("graph has no vertices");
    const auto tree = unravel(g, v, static_cast<std::uint32_t>(o.r), o.budget);
    const auto lam = lambda1(TreeOperator(tree));
    const auto edges = tree_edges(tree);

    report.results = {{"vertex", g.label(v)},
                      {"r", o.r},
                      {"nodes", tree.size()},
                      {"level_sizes", tree.level_sizes()},
                      {"lambda1", lam.value}};
    if (o.oracle) {
        const auto walks = oracle::enumerate_nb_walks(g, v, static_cast<std::size_t>(o.r), o.budget);
        report.check("level sizes match walk enumeration", walks.counts == tree.level_sizes());
        if (tree.size() <= oracle::kMaxDenseDimension) {
            const double dense = oracle::dense_eigs(oracle::dense_adjacency(tree)).values.front();
            report.results["oracle_lambda1"] = dense;
            report.check("sparse lambda1 matches dense oracle", std::abs(dense - lam.value) <= 1e-8);
        }
    }
    if (o.json) {
        Json list = Json::array();
        for (const Edge& e : edges) list.push_back({e.u, e.v, e.weight});
        report.results["edges"] = list;
        return kExitOk;
    }
    for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << fmt(e.weight) << '\n';
    for (const auto& c : report.checks) err << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    printed = true;
    return kExitOk;
}

int cmd_chain(const Options& o, Report& report, std::ostream& out, bool& printed) {
    auto [g, hash] = load_graph(o);
    report.input_hash = hash;
    const auto chain = make_chain(g, o.chain);
    const auto& edges = chain.states();
    const auto pi = chain.pi();
    const double residual = stationary_residual_max(chain, pi);

    report.results = {{"chain", chain.name()},
                      {"states", edges.size()},
                      {"transitions", edges.slot_count()},
                      {"stationary_residual_max", residual}};
    report.check("pi is stationary", residual <= o.tol, "residual " + fmt(residual));
    if (o.oracle) {
        auto it = stationary_iterative(chain);
        double diff = 0.0;
        for (EdgeId e = 0; e < edges.size(); ++e) diff = std::max(diff, std::abs(it.distribution[e] - pi[e]));
        report.results["oracle_iterative_max_difference"] = diff;
        report.check("iterative stationary matches", diff <= 1e-10, "max difference " + fmt(diff));
    }

    auto name = [&](EdgeId e) { return g.label(edges[e].tail) + ' ' + g.label(edges[e].head); };
    if (o.json) {
        Json t = Json::array(), s = Json::array();
        for (EdgeId e = 0; e < edges.size(); ++e) {
            const auto next = edges.prolongations(e);
            const auto p = chain.row(e);
            for (std::size_t k = 0; k < next.size(); ++k)
                t.push_back({g.label(edges[e].tail), g.label(edges[e].head), g.label(edges[next[k]].tail),
                             g.label(edges[next[k]].head), p[k]});
            s.push_back({g.label(edges[e].tail), g.label(edges[e].head), pi[e]});
        }
        report.results["transition_list"] = t;
        report.results["stationary"] = s;
        return kExitOk;
    }
    for (EdgeId e = 0; e < edges.size(); ++e) {
        const auto next = edges.prolongations(e);
        const auto p = chain.row(e);
        for (std::size_t k = 0; k < next.size(); ++k)
            out << name(e) << ' ' << name(next[k]) << ' ' << fmt(p[k]) << '\n';
    }
    for (EdgeId e = 0; e < edges.size(); ++e) out << name(e) << ' ' << fmt(pi[e]) << '\n';
    printed = true;
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_bound(const Options& o, Report& report) {
    auto [g, hash] = load_graph(o);
    report.input_hash = hash;
    if (o.r < 1) throw InputError("--r must be a positive integer");
    const std::string kind = o.kind.empty() ? "general" : o.kind;
    const double d = average_combinatorial_degree(g);
    const auto wreg = regularity(g);

    BoundValue b{BoundKind::general, 0.0, {wreg, d, o.r, "", ""}, {}};
    double existence_rhs = std::nan("");
    if (kind == "general" || kind == "universal-cover") {
        const auto chain = make_chain(g, o.chain);
        const auto fn = make_function(g, chain.states(), o.g);
        b.inputs.chain = chain.name();
        b.inputs.g = fn.name();
        b.applicability.push_back({"minimum degree >= 2", true});
        const double general = general_rhs(g, chain, fn);
        b.kind = kind == "general" ? BoundKind::general : BoundKind::universal_cover;
        b.value = kind == "general" ? general : universal_cover_rhs(g, chain, fn);
        existence_rhs = general;
    } else if (kind == "strong") {
        const double w = regular_weight(g);
        const DirectedEdges edges(g);
        const auto fn = make_function(g, edges, o.g);
        b.kind = BoundKind::strong_regular;
        b.inputs.g = fn.name();
        b.applicability.push_back({"regular", true});
        b.value = strong_rhs(g, w, fn);
        existence_rhs = b.value;
    } else if (kind == "simple") {
        const double w = regular_weight(g);
        b.kind = BoundKind::simple_regular;
        b.applicability.push_back({"regular", true});
        b.value = simple_rhs(g, w);
        existence_rhs = b.value;
    } else if (kind == "weak") {
        b = weak_rhs(regular_weight(g), d);
        b.inputs.r = o.r;
        if (b.applicable()) existence_rhs = b.value;
    } else if (kind == "alon-boppana") {
        const double w = regular_weight(g);
        b = weak_rhs(w, d);
        b.kind = BoundKind::alon_boppana;
        b.inputs.r = o.r;
        b.value = alon_boppana_rhs(w, d, o.r);
        if (g.vertex_count() >= 2 && is_connected(g)) report.results["lambda2"] = lambda2(g).value;
    } else {
        throw InputError("unknown bound kind '" + kind +
                         "' (expected general, strong, simple, weak, alon-boppana or universal-cover)");
    }
    report.results["bound"] = to_json(b);

    if (kind == "alon-boppana") {
        report.results["note"] = "the vertex and core hypotheses are checked by certify --kind lambda2";
        return kExitOk;
    }
    const auto radii = cover_spectral_radii(g, o.r, certify_options(o));
    report.results["path_lambda1"] = path_lambda1(static_cast<std::size_t>(o.r) + 1);
    report.results["per_vertex"] = per_vertex_table(g, radii, "lambda1_unraveled");
    if (std::isnan(existence_rhs)) {
        report.results["note"] = "bound not applicable at this average degree; no existence check";
    } else {
        const auto ex = existence_against(radii, o.r, existence_rhs);
        report.results["existence"] = {{"vertex", g.label(ex.vertex)}, {"lhs", ex.lhs}, {"rhs", ex.rhs}};
        report.check("max_v lambda1(unraveled ball) / lambda1(path) >= rhs", ex.holds,
                     fmt(ex.lhs) + " vs " + fmt(ex.rhs));
    }
    if (o.oracle) oracle_cover_check(g, o.r, radii, o, report);
    return kExitOk;
}

int cmd_certify(const Options& o, Report& report) {
    auto [g, hash] = load_graph(o);
    report.input_hash = hash;
    const std::string kind = o.kind.empty() ? "theorem" : o.kind;
    const auto copts = certify_options(o);

    if (kind == "theorem") {
        const auto chain = make_chain(g, o.chain);
        const auto fn = make_function(g, chain.states(), o.g);
        const auto cert = build_theorem_vector(g, chain, fn, o.r, copts);
        report.results["certificate"] = to_json(cert, g);
        report.check("rayleigh equals lambda1(path) * general_rhs", cert.verified, "slack " + fmt(cert.slack));
        if (o.oracle) {
            const auto ratio = verify_ratio_identity(g, chain, 1000, o.seed);
            report.results["oracle_ratio_identity"] = {{"walks_checked", ratio.walks_checked},
                                                       {"failures", ratio.failures},
                                                       {"max_relative_error", ratio.max_relative_error}};
            report.check("walk probability ratio identity", ratio.failures == 0);
        }
    } else if (kind == "case1") {
        const DirectedEdges edges(g);
        if (edges.size() == 0) throw PreconditionError("graph has no edges");
        EdgeId e = 0;
        if (!o.vertex.empty() && !o.head.empty()) {
            auto found = edges.find(lookup(g, o.vertex), lookup(g, o.head));
            if (!found) throw InputError("(" + o.vertex + ", " + o.head + ") is not an edge");
            e = *found;
        } else {
            for (EdgeId k = 1; k < edges.size(); ++k)
                if (edges[k].weight > edges[e].weight) e = k;
        }
        const auto cert = case1_vector(g, e, o.r, copts);
        report.results["certificate"] = to_json(cert, g);
        report.results["edge"] = {g.label(edges[e].tail), g.label(edges[e].head)};
        report.check("edge weight >= mu w", cert.verified, "slack " + fmt(cert.slack));
    } else if (kind == "lambda2") {
        try {
            const auto cert = lambda2_certificate(g, o.r, copts);
            report.results["certificate"] = to_json(cert, g);
            report.check("lambda2 witness verifies", cert.verified, "slack " + fmt(cert.slack));
            if (o.oracle && g.vertex_count() <= oracle::kMaxDenseDimension) {
                const auto dense = oracle::dense_eigs(oracle::dense_adjacency(g));
                const double lam2 = dense.values.at(1);
                double sparse = 0.0;
                for (const auto& [k, v] : cert.details)
                    if (k == "lambda2") sparse = v;
                report.results["oracle_lambda2"] = lam2;
                report.check("sparse lambda2 matches dense oracle", std::abs(lam2 - sparse) <= 1e-8);
            }
        } catch (const CertificationError& e) {
            report.results["error"] = {{"reason", to_string(e.reason())}, {"message", e.what()}};
            report.check("lambda2 witness constructed", false, to_string(e.reason()));
        }
    } else if (kind == "lemma42") {
        std::vector<Vertex> targets;
        if (!o.vertex.empty()) {
            targets.push_back(lookup(g, o.vertex));
        } else {
            for (Vertex v = 0; v < g.vertex_count(); ++v) targets.push_back(v);
        }
        Json rows = Json::array();
        bool all = true;
        for (Vertex v : targets) {
            const auto res = verify_lemma42(g, v, o.r, copts);
            rows.push_back({{"vertex", g.label(v)},
                            {"lambda1_ball", res.lhs},
                            {"lambda1_unraveled", res.rhs},
                            {"ball_vertices", res.ball_vertices},
                            {"cover_nodes", res.cover_nodes},
                            {"holds", res.holds}});
            all = all && res.holds;
        }
        report.results["per_vertex"] = rows;
        report.check("lambda1(ball) >= lambda1(unraveled ball)", all);
    } else {
        throw InputError("unknown certificate kind '" + kind + "' (expected theorem, case1, lambda2 or lemma42)");
    }
    return kExitOk;
}

int cmd_constants(Report& report) {
    const auto rc = refined_constants();
    const auto line = tangent_line(rc.t0, 1.0);
    const double m = mu();
    const double d = threshold_degree();
    report.results = {{"mu", m},
                      {"threshold_degree", d},
                      {"threshold_residual", 2.0 * std::sqrt(d - 1.0) / d - m},
                      {"t0", rc.t0},
                      {"x0", rc.x0},
                      {"inv_t0", 1.0 / rc.t0},
                      {"tangent_slope", line.slope},
                      {"tangent_intercept", line.intercept},
                      {"tangency_residual", rc.residual}};
    report.check("2 sqrt(d-1)/d = mu at the threshold degree",
                 std::abs(2.0 * std::sqrt(d - 1.0) / d - m) <= 1e-12);
    return kExitOk;
}

int cmd_plot_g(const Options& o, Report& report, std::ostream& out, bool& printed) {
    if (!(o.w > 0.0)) throw InputError("--w must be positive");
    const auto rc = refined_constants();
    const auto line = tangent_line(rc.t0, o.w);
    std::string csv = "y,g,ell_t0\n";
    for (int k = 0; k <= 512; ++k) {
        const double y = o.w * k / 512.0;
        csv += fmt(y) + ',' + fmt(profile(y, o.w)) + ',' + fmt(line(y)) + '\n';
    }
    if (o.out.empty()) {
        out << csv;
        printed = true;
        return kExitOk;
    }
    write_text(o.out, csv);
    report.results = {{"w", o.w}, {"rows", 513}, {"out", o.out}, {"output_hash", hex64(fnv1a(csv))}};
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral lower bounds for weighted graphs via unraveled balls", "coverbound"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON report");
        sub->add_flag("--timing", o.timing, "Record wall time in the report");
        sub->add_option("--threads", o.threads, "Worker threads (0 = available parallelism)");
    };
    auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "Edge-list file")->required(); };
    auto chain_opts = [&](CLI::App* sub) {
        sub->add_option("--chain", o.chain, "uniform | weighted");
        sub->add_option("--g", o.g, "one | inv-sqrt-complement | table:<file>");
    };

    auto* validate = app.add_subcommand("validate", "Parse a graph and report its degree structure");
    graph_opt(validate);
    common(validate);

    auto* gen = app.add_subcommand("gen", "Generate a graph in the edge-list format");
    gen->add_option("--family", o.family, "cycle | path | complete | petersen | random-regular | weighted-regular")
        ->required();
    gen->add_option("--n", o.n, "Vertex count");
    gen->add_option("--d", o.d, "Degree");
    gen->add_option("--seed", o.seed, "64-bit seed");
    gen->add_option("--wmin", o.wmin, "Minimum initial weight");
    gen->add_option("--wmax", o.wmax, "Maximum initial weight");
    gen->add_option("--out", o.out, "Output file (default standard output)");
    common(gen);

    auto* unr = app.add_subcommand("unravel", "Build an unraveled ball; prints `parent child weight` lines");
    graph_opt(unr);
    unr->add_option("--vertex", o.vertex, "Center label (default: first vertex)");
    unr->add_option("--r", o.r, "Radius");
    unr->add_option("--budget", o.budget, "Node budget");
    unr->add_flag("--oracle", o.oracle, "Cross-check against walk enumeration and dense eigensolver");
    common(unr);

    auto* chain = app.add_subcommand("chain", "Print a non-backtracking chain and its stationary distribution");
    graph_opt(chain);
    chain->add_option("--chain", o.chain, "uniform | weighted");
    chain->add_option("--tol", o.tol, "Stationarity tolerance");
    chain->add_flag("--oracle", o.oracle, "Compare with the iterative stationary solver");
    common(chain);

    auto* bound = app.add_subcommand("bound", "Evaluate a lower bound and the per-vertex cover spectra");
    graph_opt(bound);
    bound->add_option("--kind", o.kind, "general | strong | simple | weak | alon-boppana | universal-cover");
    bound->add_option("--r", o.r, "Radius");
    bound->add_option("--budget", o.budget, "Node budget per ball");
    bound->add_flag("--oracle", o.oracle, "Cross-check spectra with the dense oracle");
    chain_opts(bound);
    common(bound);

    auto* certify = app.add_subcommand("certify", "Build and verify a Rayleigh certificate");
    graph_opt(certify);
    certify->add_option("--kind", o.kind, "theorem | case1 | lambda2 | lemma42");
    certify->add_option("--r", o.r, "Radius");
    certify->add_option("--vertex", o.vertex, "Vertex label (case1 tail, lemma42 center)");
    certify->add_option("--head", o.head, "Head label of the case1 edge");
    certify->add_option("--budget", o.budget, "Node budget");
    certify->add_option("--seed", o.seed, "Seed for sampled oracle checks");
    certify->add_flag("--vector", o.vector, "Include the certificate vector");
    certify->add_flag("--oracle", o.oracle, "Run oracle cross-checks");
    chain_opts(certify);
    common(certify);

    auto* constants = app.add_subcommand("constants", "Print the numeric constants of the refined bounds");
    common(constants);

    auto* plot = app.add_subcommand("plot-g", "CSV of g and its tangent line at t0 over [0, w]");
    plot->add_option("--w", o.w, "Weighted degree (default 1)");
    plot->add_option("--out", o.out, "Output file (default standard output)");
    common(plot);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Report report;
    report.command = "coverbound";
    for (const auto& a : args) report.command += ' ' + a;

    const auto start = std::chrono::steady_clock::now();
    bool printed = false;
    int code = kExitOk;
    try {
        if (validate->parsed()) code = cmd_validate(o, report);
        else if (gen->parsed()) code = cmd_gen(o, report, out, printed);
        else if (unr->parsed()) code = cmd_unravel(o, report, out, err, printed);
        else if (chain->parsed()) code = cmd_chain(o, report, out, printed);
        else if (bound->parsed()) code = cmd_bound(o, report);
        else if (certify->parsed()) code = cmd_certify(o, report);
        else if (constants->parsed()) code = cmd_constants(report);
        else if (plot->parsed()) code = cmd_plot_g(o, report, out, printed);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    if (o.timing)
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!printed) out << (o.json ? report.to_json().dump(2) + "\n" : report.to_text());
    if (code != kExitOk) return code;
    return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace coverbound::cli
