#ifndef RTGRAPH_REPORT_HPP
#define RTGRAPH_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "rtgraph/polynomial.hpp"
#include "rtgraph/spectra.hpp"

namespace rtg {

// JSON array of "num/den" strings, ascending degree.
inline nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coefficient(k).to_string());
    return arr;
}

inline nlohmann::json spectrum_to_json(const Spectrum& s) {
    return nlohmann::json{{"values", s.values}, {"zero_count", s.zero_count}};
}

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

// Outcome of a single identity check. lhs and rhs are exact rational text
// (or a serialized coefficient list for polynomial checks); residual is
// present only for numeric checks.
struct Check {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string lhs;
    std::string rhs;
    std::string residual; // empty = absent
    std::string note;     // empty = absent
    double timing_ms = 0.0;
};

struct VerificationReport {
    std::string graph_id;
    std::vector<Check> checks;

    bool all_passed() const {
        for (const auto& c : checks) {
            if (c.status == CheckStatus::fail) return false;
        }
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json jc{{"name", c.name},
                              {"status", to_string(c.status)},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"timing_ms", c.timing_ms}};
            if (!c.residual.empty()) jc["residual"] = c.residual;
            if (!c.note.empty()) jc["note"] = c.note;
            arr.push_back(std::move(jc));
        }
        return nlohmann::json{{"schema", 1},
                              {"graph_id", graph_id},
                              {"checks", std::move(arr)},
                              {"all_passed", all_passed()}};
    }
};

} // namespace rtg

#endif
