#include "coverbound/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace coverbound {

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& x) {
    return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const BoundValue& b) {
    Json app = Json::array();
    for (const auto& a : b.applicability) app.push_back({{"condition", a.condition}, {"satisfied", a.satisfied}});
    Json inputs = {{"w", optional_json(b.inputs.w)}, {"d", optional_json(b.inputs.d)}, {"r", optional_json(b.inputs.r)}};
    if (!b.inputs.chain.empty()) inputs["chain"] = b.inputs.chain;
    if (!b.inputs.g.empty()) inputs["g"] = b.inputs.g;
    return {{"kind", to_string(b.kind)},
            {"value", b.value},
            {"inputs", inputs},
            {"applicability", app},
            {"applicable", b.applicable()}};
}

Json to_json(const Certificate& c, const WeightedGraph& g) {
    Json j = {{"kind", to_string(c.kind)},
              {"vertex", c.vertex ? Json(g.label(*c.vertex)) : Json(nullptr)},
              {"rayleigh", c.rayleigh},
              {"bound", c.bound},
              {"slack", c.slack},
              {"verified", c.verified}};
    Json meta = {{"r", optional_json(c.meta.r)}, {"w", optional_json(c.meta.w)}, {"d", optional_json(c.meta.d)}};
    if (!c.meta.chain.empty()) meta["chain"] = c.meta.chain;
    if (!c.meta.g.empty()) meta["g"] = c.meta.g;
    j["meta"] = meta;
    Json details = Json::object();
    for (const auto& [k, v] : c.details) details[k] = v;
    j["details"] = details;
    if (!c.level_sq_norms.empty()) j["level_sq_norms"] = c.level_sq_norms;
    if (!c.entries.empty()) {
        Json vec = Json::array();
        for (const auto& [k, v] : c.entries) vec.push_back({k, v});
        j["vector"] = vec;
    }
    return j;
}

void Report::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json Report::to_json() const {
    Json j = {{"command", command}};
    j["input_hash"] = input_hash ? Json(*input_hash) : Json(nullptr);
    j["results"] = results;
    Json cs = Json::array();
    for (const auto& c : checks) {
        Json x = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) x["detail"] = c.detail;
        cs.push_back(x);
    }
    j["checks"] = cs;
    j["passed"] = passed();
    if (wall_seconds) j["wall_seconds"] = *wall_seconds;
    return j;
}

namespace {

void emit(std::ostringstream& out, const std::string& prefix, const Json& v) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) emit(out, prefix.empty() ? k : prefix + "." + k, x);
    } else if (v.is_array() && !v.empty() && v.front().is_object() && v.size() <= 64) {
        for (std::size_t i = 0; i < v.size(); ++i) out << prefix << '[' << i << "]: " << v[i].dump() << '\n';
    } else if (v.is_array() && (v.size() > 64 || (!v.empty() && v.front().is_object()))) {
        out << prefix << ": [" << v.size() << " entries]\n";
    } else {
        out << prefix << ": " << v.dump() << '\n';
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    if (input_hash) out << "input_hash: " << *input_hash << '\n';
    emit(out, "", results);
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ')';
        out << '\n';
    }
    if (wall_seconds) out << "wall_seconds: " << *wall_seconds << '\n';
    return out.str();
}

}  // namespace coverbound
