#pragma once

#include "parabose/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace parabose {

// A residual and the tolerance it is judged against.
struct CheckResult {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    std::string detail;

    bool pass() const { return residual <= tolerance; }
};

// A disagreement between a displayed formula and what the code observes.
struct ErratumFinding {
    std::string location;
    std::string expected;
    std::string observed;
    std::string absorbed_constant; // empty when nothing was absorbed
};

struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<CheckResult> checks;
    std::vector<ErratumFinding> erratum_findings;

    bool pass() const;
    void merge(const Report &other);
    nlohmann::json to_json() const;
};

// Rationals travel as "p/q" strings.
inline std::string rational_json(const Rational &r) { return to_string(r); }

// Writes via a temporary file and a rename.
void write_file_atomic(const std::string &path, const std::string &contents);

} // namespace parabose
