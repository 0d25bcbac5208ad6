#pragma once

#include "qgrkz/rootsys/chamber.hpp"
#include "qgrkz/slice/problem.hpp"

#include <json.hpp>

#include <fstream>

namespace qgrkz::cli {

// One instance: datum, lambdas as fundamental-coweight indices, mu, optional
// chamber vector and truncation order.
struct ProblemConfig {
    std::string name;
    SliceProblem problem;
    std::optional<std::vector<Rational>> chamber;
    int order = 6;

    Chamber make_chamber() const {
        if (chamber) return Chamber(problem.datum, *chamber);
        return Chamber::standard(problem.datum);
    }
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "1,-2/3,5"
inline std::vector<Rational> parse_vector(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ConfigError("empty chamber coordinate");
        try {
            out.push_back(Rational::parse(item.substr(b, e - b + 1)));
        } catch (const std::exception&) {
            throw ConfigError("bad chamber coordinate: " + item);
        }
    }
    return out;
}

inline std::vector<Rational> parse_chamber(const nlohmann::json& j) {
    if (j.is_string()) return parse_vector(j.get<std::string>());
    if (!j.is_array()) throw ConfigError("chamber must be an array or a comma-separated string");
    std::vector<Rational> out;
    for (auto& x : j) {
        if (x.is_number_integer()) out.emplace_back(x.get<long>());
        else if (x.is_string()) out.push_back(parse_vector(x.get<std::string>()).at(0));
        else throw ConfigError("chamber coordinates must be integers or \"p/q\" strings");
    }
    return out;
}

inline ProblemConfig parse_config(const nlohmann::json& j, std::string name = {}) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const char* key : {"datum", "lambdas", "mu"})
        if (!j.contains(key)) throw ConfigError(std::string("config is missing \"") + key + "\"");
    const auto& d = j["datum"];
    if (!d.is_object() || !d.contains("type") || !d.contains("rank") || !d["type"].is_string() || !d["rank"].is_number_integer())
        throw ConfigError("datum must be {\"type\": letter, \"rank\": integer}");
    std::string type = d["type"].get<std::string>();
    if (type.size() != 1) throw ConfigError("datum type must be a single letter");

    ProblemConfig c;
    c.name = j.value("name", name);
    try {
        c.problem.datum = build_datum(type[0], d["rank"].get<int>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const auto& D = *c.problem.datum;

    if (!j["lambdas"].is_array() || j["lambdas"].empty()) throw ConfigError("lambdas must be a nonempty array of fundamental indices");
    for (auto& x : j["lambdas"]) {
        if (!x.is_number_integer()) throw ConfigError("lambdas entries must be integers");
        int i = x.get<int>();
        if (i < 1 || i > D.rank) throw ConfigError("lambda index " + std::to_string(i) + " is out of range 1.." + std::to_string(D.rank));
        Coweight w = D.fundamental(i);
        if (!D.is_minuscule(w)) throw ConfigError("fundamental coweight " + std::to_string(i) + " of " + D.name() + " is not minuscule");
        c.problem.lambdas.push_back(w);
    }
    if (!j["mu"].is_array()) throw ConfigError("mu must be an integer array");
    for (auto& x : j["mu"]) {
        if (!x.is_number_integer()) throw ConfigError("mu entries must be integers");
        c.problem.mu.push_back(x.get<int>());
    }
    if (static_cast<int>(c.problem.mu.size()) != D.rank)
        throw ConfigError("mu has " + std::to_string(c.problem.mu.size()) + " coordinates, rank is " + std::to_string(D.rank));
    try {
        c.problem.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (j.contains("chamber") && !j["chamber"].is_null()) {
        c.chamber = parse_chamber(j["chamber"]);
        try {
            c.make_chamber();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (j.contains("order")) {
        if (!j["order"].is_number_integer() || j["order"].get<int>() < 0) throw ConfigError("order must be a nonnegative integer");
        c.order = j["order"].get<int>();
    }
    return c;
}

inline ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("malformed JSON in " + path + ": " + e.what());
    }
    std::string stem = path.substr(path.find_last_of('/') + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
    return parse_config(j, stem);
}

}  // namespace qgrkz::cli
