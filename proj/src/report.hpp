#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ufc {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;    // locus of the worst instance, or extra info
    double wall_ms = 0.0;  // emitted only on request
};

// Accumulates named checks for one command run. Machine output is
// deterministic: fixed key order, no timing data unless asked for.
class Report {
public:
    Report(std::string command, std::string input)
        : command_(std::move(command)), input_(std::move(input)) {}

    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void add(const std::string& name, double residual, double tolerance,
             bool pass, const std::string& detail = "", double wall_ms = 0.0) {
        checks_.push_back({name, residual, tolerance, pass, detail, wall_ms});
    }

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool passed() const;
    bool empty() const { return checks_.empty(); }

    std::string to_json(bool include_timings = false) const;
    std::string to_text() const;

private:
    std::string command_;
    std::string input_;
    std::vector<CheckResult> checks_;
};

} // namespace ufc
