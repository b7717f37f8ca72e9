#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace parabose {

bool Report::pass() const {
    for (const auto &c : checks)
        if (!c.pass()) return false;
    return true;
}

void Report::merge(const Report &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    erratum_findings.insert(erratum_findings.end(), other.erratum_findings.begin(), other.erratum_findings.end());
    for (auto it = other.results.begin(); it != other.results.end(); ++it) results[it.key()] = it.value();
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["params"] = params;
    nlohmann::json res = results;
    nlohmann::json cks = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json e{{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance},
                         {"status", c.pass() ? "pass" : "fail"}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        cks.push_back(std::move(e));
    }
    if (!checks.empty()) res["checks"] = std::move(cks);
    j["results"] = std::move(res);
    nlohmann::json f = nlohmann::json::array();
    for (const auto &e : erratum_findings) {
        nlohmann::json o{{"location", e.location}, {"expected", e.expected}, {"observed", e.observed}};
        o["absorbed_constant"] = e.absorbed_constant.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.absorbed_constant);
        f.push_back(std::move(o));
    }
    j["erratum_findings"] = std::move(f);
    j["status"] = pass() ? "pass" : "fail";
    return j;
}

void write_file_atomic(const std::string &path, const std::string &contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << contents;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

} // namespace parabose
