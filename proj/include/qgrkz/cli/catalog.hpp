#pragma once

#include "qgrkz/cli/config.hpp"

namespace qgrkz::cli {

// Regression instances; configs/<name>.json holds the same data.
inline const std::vector<std::pair<std::string, std::string>>& catalog_sources() {
    static const std::vector<std::pair<std::string, std::string>> src = {
        {"a1_ww0", R"({"datum": {"type": "A", "rank": 1}, "lambdas": [1, 1], "mu": [0], "order": 10})"},
        {"a1_w4_0", R"({"datum": {"type": "A", "rank": 1}, "lambdas": [1, 1, 1, 1], "mu": [0], "order": 10})"},
        {"a1_w4_2w", R"({"datum": {"type": "A", "rank": 1}, "lambdas": [1, 1, 1, 1], "mu": [2], "order": 6})"},
        {"a2_w1w2_0", R"({"datum": {"type": "A", "rank": 2}, "lambdas": [1, 2], "mu": [0, 0], "order": 6})"},
        {"a2_w1w1w1_0", R"({"datum": {"type": "A", "rank": 2}, "lambdas": [1, 1, 1], "mu": [0, 0], "order": 6})"},
        {"a2_w1w1w1_w1w2", R"({"datum": {"type": "A", "rank": 2}, "lambdas": [1, 1, 1], "mu": [1, 1], "order": 6})"},
        {"a2_w1w1w2_w1", R"({"datum": {"type": "A", "rank": 2}, "lambdas": [1, 1, 2], "mu": [1, 0], "order": 6})"},
        {"a3_w1w1w2_0", R"({"datum": {"type": "A", "rank": 3}, "lambdas": [1, 1, 2], "mu": [0, 0, 0], "order": 4})"},
        {"d4_w1w1_0", R"({"datum": {"type": "D", "rank": 4}, "lambdas": [1, 1], "mu": [0, 0, 0, 0], "order": 4})"},
        {"b2_w1w1_0", R"({"datum": {"type": "B", "rank": 2}, "lambdas": [1, 1], "mu": [0, 0], "order": 4})"},
        {"c2_w2w2_0", R"({"datum": {"type": "C", "rank": 2}, "lambdas": [2, 2], "mu": [0, 0], "order": 4})"},
    };
    return src;
}

inline std::vector<ProblemConfig> catalog() {
    std::vector<ProblemConfig> out;
    for (auto& [name, text] : catalog_sources()) out.push_back(parse_config(nlohmann::json::parse(text), name));
    return out;
}

inline ProblemConfig catalog_entry(const std::string& name) {
    for (auto& [n, text] : catalog_sources())
        if (n == name) return parse_config(nlohmann::json::parse(text), n);
    throw ConfigError("no catalog instance named " + name);
}

}  // namespace qgrkz::cli
