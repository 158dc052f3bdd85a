#pragma once

#include "dataset.hpp"
#include "report.hpp"

namespace ufc {

// Orchestration of the batch commands over datasets. Every function returns
// a Report with one entry per check; commands that transform data also
// return an output dataset.

struct RunOutcome {
    Report report;
    std::optional<Dataset> output;
};

// check_filter: empty = run the dataset's declared checks (or everything
// applicable when none are declared); otherwise run exactly that check.
Report run_verify(const Dataset& ds, const std::string& check_filter = "");

RunOutcome run_unitarize(const Dataset& ds);
RunOutcome run_factorize(const Dataset& ds);
RunOutcome run_polar(const Dataset& ds);
RunOutcome run_gauge_search(const Dataset& ds, int max_iters,
                            std::uint64_t seed);

Report run_cocycle_verify(const Dataset& ds);
RunOutcome run_cocycle_split(const Dataset& ds);
RunOutcome run_cocycle_trivialize(const Dataset& ds);
RunOutcome run_cocycle_unitarize(const Dataset& ds);
RunOutcome run_cocycle_build_vecg(const Dataset& ds);

Report run_module_verify(const Dataset& ds);
RunOutcome run_module_unitarize(const Dataset& ds);

} // namespace ufc
