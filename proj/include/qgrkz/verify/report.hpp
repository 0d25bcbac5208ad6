#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qgrkz {

enum class Verdict { pass, fail, not_covered };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "not covered by the theorem";
    }
}

struct Witness {
    std::string where;     // matrix position, fixed point, curve, ...
    std::string monomial;  // u-monomial for series comparisons
    std::string expected;
    std::string got;
};

struct CheckReport {
    std::string name;
    std::string instance;
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;
    std::string note;

    bool ok() const { return verdict != Verdict::fail; }

    static CheckReport passed(std::string name, std::string instance, std::string note = {}) {
        return {std::move(name), std::move(instance), Verdict::pass, std::nullopt, std::move(note)};
    }
    static CheckReport failed(std::string name, std::string instance, Witness w, std::string note = {}) {
        return {std::move(name), std::move(instance), Verdict::fail, std::move(w), std::move(note)};
    }
    static CheckReport uncovered(std::string name, std::string instance, std::string note) {
        return {std::move(name), std::move(instance), Verdict::not_covered, std::nullopt, std::move(note)};
    }
};

inline bool all_ok(const std::vector<CheckReport>& rs) {
    for (auto& r : rs)
        if (!r.ok()) return false;
    return true;
}

}  // namespace qgrkz
