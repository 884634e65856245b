#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coverbound/bounds.hpp"
#include "coverbound/certify.hpp"
#include "coverbound/graph.hpp"

namespace coverbound {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t x);

Json to_json(const BoundValue& b);
/// Vertex ids are written as the graph's labels.
Json to_json(const Certificate& c, const WeightedGraph& g);

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

/// Output of one CLI invocation. Serialization is deterministic: keys keep
/// insertion order and wall time is present only when recorded.
struct Report {
    std::string command;
    std::optional<std::string> input_hash;
    Json results = Json::object();
    std::vector<Check> checks;
    std::optional<double> wall_seconds;

    void check(std::string name, bool passed, std::string detail = {});
    bool passed() const;
    Json to_json() const;
    std::string to_text() const;
};

}  // namespace coverbound
