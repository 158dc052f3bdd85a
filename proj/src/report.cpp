#include "report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ufc {

using nlohmann::json;

bool Report::passed() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_json(bool include_timings) const {
    json out;
    out["command"] = command_;
    out["input"] = input_;
    out["passed"] = passed();
    json arr = json::array();
    for (const auto& c : checks_) {
        json jc;
        jc["name"] = c.name;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (include_timings) jc["wall_ms"] = c.wall_ms;
        arr.push_back(std::move(jc));
    }
    out["checks"] = std::move(arr);
    return out.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": residual "
           << std::setprecision(6) << std::scientific << c.residual
           << " (tol " << c.tolerance << ")";
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    os << (passed() ? "OK" : "FAILED") << " (" << checks_.size()
       << (checks_.size() == 1 ? " check)" : " checks)") << "\n";
    return os.str();
}

} // namespace ufc
