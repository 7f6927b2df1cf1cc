#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace gring {

/// One named verification check. Failed checks must carry a concrete witness.
struct Check {
    std::string name;
    std::string status;  // "pass", "fail", or "info"
    std::vector<std::string> witnesses;
    std::vector<long long> dimensions;
    long long millis = 0;

    static Check make(std::string name, bool ok, std::vector<std::string> witnesses = {},
                      std::vector<long long> dimensions = {}) {
        return Check{std::move(name), ok ? "pass" : "fail", std::move(witnesses),
                     std::move(dimensions), 0};
    }

    static Check info(std::string name, std::vector<std::string> witnesses,
                      std::vector<long long> dimensions = {}) {
        return Check{std::move(name), "info", std::move(witnesses), std::move(dimensions), 0};
    }
};

class VerificationReport {
public:
    void add(Check check) { checks_.push_back(std::move(check)); }

    void extend(const VerificationReport& other) {
        for (const auto& c : other.checks_) checks_.push_back(c);
    }

    const std::vector<Check>& checks() const { return checks_; }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (c.status == "fail") return false;
        return true;
    }

    /// Report assembly is ordered by check name.
    void sort_by_name() {
        std::stable_sort(checks_.begin(), checks_.end(),
                         [](const Check& a, const Check& b) { return a.name < b.name; });
    }

private:
    std::vector<Check> checks_;
};

/// Stopwatch that stores elapsed milliseconds into a check.
class CheckTimer {
public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}

    long long millis() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

    Check stamp(Check check) const {
        check.millis = millis();
        return check;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Versioned JSON report. `millis` is the one timing field; byte-level
/// determinism of reports is understood modulo that field.
inline nlohmann::json report_json(const VerificationReport& report, const std::string& command,
                                  const nlohmann::json& seed, const std::string& field) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks()) {
        checks.push_back({{"name", c.name},
                          {"status", c.status},
                          {"witnesses", c.witnesses},
                          {"dimensions", c.dimensions},
                          {"millis", c.millis}});
    }
    return nlohmann::json{{"schema_version", 1},
                          {"command", command},
                          {"seed", seed},
                          {"field", field},
                          {"checks", checks}};
}

}  // namespace gring
