#include "runner.hpp"

#include <chrono>
#include <set>

#include "errors.hpp"
#include "gauge_search.hpp"
#include "polar.hpp"

namespace ufc {

namespace {

std::string input_name(const Dataset& ds) {
    return ds.name.value_or("dataset");
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// All checks the dataset's sections support, in reporting order.
std::vector<std::string> applicable_checks(const Dataset& ds) {
    std::vector<std::string> out;
    if (ds.ring) out.push_back("ring");
    if (ds.f_symbols) {
        out.push_back("pentagon");
        out.push_back("unitary");
    }
    if (ds.r_symbols) {
        out.push_back("hexagon");
        out.push_back("braiding-unitary");
    }
    if (ds.equivalence) out.push_back("equivalence");
    if (ds.group) out.push_back("group");
    if (ds.cochain) out.push_back("cocycle");
    if (ds.module_data) out.push_back("module-pentagon");
    if (ds.module_equivalence) out.push_back("module-equivalence");
    return out;
}

CheckResult run_one_check(const Dataset& ds, const std::string& check) {
    const double tol = ds.tol();
    Timer t;
    CheckResult r;
    r.name = check;
    r.tolerance = tol;

    if (check == "ring") {
        if (!ds.ring) throw InputError("check 'ring': no fusion_ring section");
        const RingReport rep = verify_ring_axioms(*ds.ring);
        r.pass = rep.pass;
        r.residual = rep.pass ? 0.0 : 1.0;
        r.tolerance = 0.0;
        r.detail = rep.first_violation;
    } else if (check == "pentagon") {
        if (!ds.f_symbols)
            throw InputError("check 'pentagon': no f_symbols section");
        const ResidualReport rep = verify_pentagon(*ds.f_symbols);
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else if (check == "unitary") {
        if (!ds.f_symbols)
            throw InputError("check 'unitary': no f_symbols section");
        const ResidualReport rep = verify_unitary(*ds.f_symbols);
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else if (check == "hexagon") {
        if (!ds.f_symbols || !ds.r_symbols)
            throw InputError("check 'hexagon': needs f_symbols and r_symbols");
        const ResidualReport rep = verify_hexagon(*ds.f_symbols, *ds.r_symbols);
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else if (check == "braiding-unitary") {
        if (!ds.f_symbols || !ds.r_symbols)
            throw InputError(
                "check 'braiding-unitary': needs f_symbols and r_symbols");
        const ResidualReport rep =
            verify_braiding_unitary(*ds.f_symbols, *ds.r_symbols);
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else if (check == "equivalence") {
        const ResidualReport rep = verify_equivalence(ds.equivalence_data());
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else if (check == "group") {
        if (!ds.group) throw InputError("check 'group': no group section");
        // Construction already verified the axioms exactly.
        r.pass = true;
        r.residual = 0.0;
        r.tolerance = 0.0;
    } else if (check == "cocycle") {
        if (!ds.cochain) throw InputError("check 'cocycle': no cochain section");
        const CocycleReport rep = verify_cocycle(*ds.cochain, tol);
        r.pass = rep.pass;
        r.residual = rep.max_deviation;
        r.detail = rep.first_violation;
    } else if (check == "module-pentagon") {
        if (!ds.module_data || !ds.f_symbols)
            throw InputError(
                "check 'module-pentagon': needs module_data and f_symbols");
        const ResidualReport rep =
            verify_module_pentagon(*ds.module_data, *ds.f_symbols);
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else if (check == "module-equivalence") {
        const ResidualReport rep =
            verify_module_equivalence(ds.module_equivalence_data());
        r.pass = rep.pass;
        r.residual = rep.max_residual;
        r.detail = rep.pass ? "" : rep.worst;
    } else {
        throw InputError("unknown check '" + check + "'");
    }
    r.wall_ms = t.ms();
    return r;
}

} // namespace

Report run_verify(const Dataset& ds, const std::string& check_filter) {
    Report report("verify", input_name(ds));
    std::vector<std::string> checks;
    if (!check_filter.empty() && check_filter != "all") {
        checks.push_back(check_filter);
    } else if (!ds.declared_checks.empty() && check_filter.empty()) {
        checks = ds.declared_checks;
    } else {
        checks = applicable_checks(ds);
    }
    if (checks.empty())
        throw InputError("verify: dataset has no checkable sections");
    for (const auto& c : checks) report.add(run_one_check(ds, c));
    return report;
}

RunOutcome run_unitarize(const Dataset& ds) {
    Report report("unitarize", input_name(ds));
    Timer t;
    const UnitarizeResult res = unitarize_equivalence(ds.equivalence_data());
    const double tol = ds.tol();
    report.add("tensorator-unitarity", res.unitarity, 10 * tol,
               res.unitarity <= 10 * tol, "", t.ms());
    report.add("coherence", res.coherence, 100 * tol,
               res.coherence <= 100 * tol);
    report.add("natural-isomorphism", res.nat_iso_residual, 100 * tol,
               res.nat_iso_residual <= 100 * tol,
               "residual of tensorator = coboundary(mu) * unitary");
    report.add("log-linear-solve", res.lsq_residual, tol,
               res.lsq_residual <= tol);

    Dataset out = ds;
    out.name = input_name(ds) + "-unitarized";
    out.equivalence->tensorator = res.equivalence.tensorator;
    out.nat_iso = res.mu;
    return {std::move(report), std::move(out)};
}

RunOutcome run_factorize(const Dataset& ds) {
    Report report("factorize", input_name(ds));
    Timer t;
    const Factorization fact = factorize_equivalence(ds.equivalence_data());
    const double tol = ds.tol();
    report.add("recomposition", fact.certificates.recomposition, tol,
               fact.certificates.recomposition <= tol, "", t.ms());
    report.add("unitary-factor-coherence", fact.certificates.unitary_coherence,
               100 * tol, fact.certificates.unitary_coherence <= 100 * tol);
    report.add("positive-part-coherence",
               fact.certificates.positive_coherence, 100 * tol,
               fact.certificates.positive_coherence <= 100 * tol);

    Dataset out = ds;
    out.name = input_name(ds) + "-factorized";
    out.equivalence->tensorator = fact.unitary_equivalence.tensorator;
    out.gauge_positive = fact.positive_part;
    return {std::move(report), std::move(out)};
}

RunOutcome run_polar(const Dataset& ds) {
    if (!ds.gauge) throw InputError("polar: dataset has no gauge section");
    Report report("polar", input_name(ds));
    Timer t;
    const double tol = ds.tol();

    std::map<VertexKey, Mat> u, p;
    double recomposition = 0.0, unitarity = 0.0, positivity = 0.0;
    for (const auto& [k, m] : ds.gauge->blocks()) {
        const MatrixPolar split = polar_decompose_matrix(m, tol);
        u[k] = split.unitary;
        p[k] = split.positive;
        recomposition = std::max(recomposition, split.residual);
        unitarity = std::max(unitarity, unitary_deviation(split.unitary));
        positivity = std::max(positivity, hermitian_deviation(split.positive));
    }
    report.add("recomposition", recomposition, tol, recomposition <= tol, "",
               t.ms());
    report.add("unitary-part", unitarity, tol, unitarity <= tol);
    report.add("positive-part-hermitian", positivity, tol, positivity <= tol);

    Dataset out = ds;
    out.name = input_name(ds) + "-polar";
    out.gauge_unitary = Gauge(ds.gauge->ring(), std::move(u));
    out.gauge_positive = Gauge(ds.gauge->ring(), std::move(p));
    return {std::move(report), std::move(out)};
}

RunOutcome run_gauge_search(const Dataset& ds, int max_iters,
                            std::uint64_t seed) {
    if (!ds.f_symbols)
        throw InputError("gauge-search: dataset has no f_symbols section");
    Report report("gauge-search", input_name(ds));
    Timer t;
    const ResidualReport pent = verify_pentagon(*ds.f_symbols);
    if (!pent.pass)
        throw PreconditionError(
            "gauge-search: associator fails the pentagon (residual " +
            std::to_string(pent.max_residual) + ")");
    const GaugeSearchResult res =
        search_unitary_gauge(*ds.f_symbols, max_iters, seed);
    report.add("final-unitarity", res.residual, 1e-6, res.converged,
               "heuristic search, " + std::to_string(res.iterations) +
                   " iterations; failure is evidence, not proof",
               t.ms());

    Dataset out = ds;
    out.name = input_name(ds) + "-gauge-search";
    out.gauge = res.gauge;
    out.f_symbols = apply_gauge(*ds.f_symbols, res.gauge);
    return {std::move(report), std::move(out)};
}

Report run_cocycle_verify(const Dataset& ds) {
    if (!ds.cochain)
        throw InputError("cocycle verify: dataset has no cochain section");
    Report report("cocycle-verify", input_name(ds));
    report.add(run_one_check(ds, "cocycle"));
    return report;
}

RunOutcome run_cocycle_split(const Dataset& ds) {
    if (!ds.cochain)
        throw InputError("cocycle split: dataset has no cochain section");
    Report report("cocycle-split", input_name(ds));
    Timer t;
    const double tol = ds.tol();
    CocycleSplit split = polar_split_cocycle(*ds.cochain, tol);

    double recomposition = 0.0;
    for (size_t i = 0; i < ds.cochain->values.size(); ++i)
        recomposition = std::max(
            recomposition, std::abs(split.unitary.values[i] *
                                        split.positive.values[i] -
                                    ds.cochain->values[i]));
    report.add("recomposition", recomposition, tol, recomposition <= tol, "",
               t.ms());
    report.add("unitary-factor-cocycle",
               verify_cocycle(split.unitary, tol).max_deviation, tol,
               verify_cocycle(split.unitary, tol).pass);
    report.add("positive-factor-cocycle",
               verify_cocycle(split.positive, tol).max_deviation, tol,
               verify_cocycle(split.positive, tol).pass);

    Dataset out = ds;
    out.name = input_name(ds) + "-split";
    out.cochain_unitary = std::move(split.unitary);
    out.cochain_positive = std::move(split.positive);
    return {std::move(report), std::move(out)};
}

RunOutcome run_cocycle_trivialize(const Dataset& ds) {
    if (!ds.cochain)
        throw InputError("cocycle trivialize: dataset has no cochain section");
    Report report("cocycle-trivialize", input_name(ds));
    Timer t;
    const double tol = ds.tol();
    const CocycleTrivialization triv =
        trivialize_positive_cocycle(*ds.cochain, tol);
    report.add("log-linear-solve", triv.lsq_residual, tol,
               triv.lsq_residual <= tol, "", t.ms());
    report.add("coboundary-reproduces", triv.reproduction, 100 * tol,
               triv.reproduction <= 100 * tol);

    Dataset out = ds;
    out.name = input_name(ds) + "-trivializer";
    out.cochain = triv.eta;
    return {std::move(report), std::move(out)};
}

RunOutcome run_cocycle_unitarize(const Dataset& ds) {
    if (!ds.cochain)
        throw InputError("cocycle unitarize: dataset has no cochain section");
    Report report("cocycle-unitarize", input_name(ds));
    Timer t;
    const double tol = ds.tol();
    const CocycleUnitarization res = unitarize_cocycle(*ds.cochain, tol);
    report.add("certificate", res.certificate, 100 * tol,
               res.certificate <= 100 * tol,
               "omega / u = coboundary(eta) pointwise", t.ms());

    Dataset out = ds;
    out.name = input_name(ds) + "-unitarized";
    out.cochain = res.unitary;
    out.cochain_positive = res.eta;
    return {std::move(report), std::move(out)};
}

RunOutcome run_cocycle_build_vecg(const Dataset& ds) {
    if (!ds.group || !ds.cochain)
        throw InputError("cocycle build-vecg: needs group and cochain sections");
    Report report("cocycle-build-vecg", input_name(ds));
    Timer t;
    const double tol = ds.tol();
    const VecGData built = build_vecg_category(ds.group, *ds.cochain, tol);

    const RingReport ring_rep = verify_ring_axioms(*built.ring);
    report.add("ring", ring_rep.pass ? 0.0 : 1.0, 0.0, ring_rep.pass,
               ring_rep.first_violation, t.ms());
    const ResidualReport pent = verify_pentagon(built.f_symbols);
    report.add("pentagon", pent.max_residual, tol, pent.pass);
    const ResidualReport uni = verify_unitary(built.f_symbols);
    report.add("unitary", uni.max_residual, tol, uni.pass,
               uni.pass ? "" : "expected for cocycles with non-unit modulus");

    Dataset out;
    out.name = input_name(ds) + "-vecg";
    out.tolerance = ds.tolerance;
    out.ring = built.ring;
    out.f_symbols = built.f_symbols;
    out.group = ds.group;
    out.cochain = ds.cochain;
    out.declared_checks = {"ring", "pentagon"};
    if (uni.pass) out.declared_checks.push_back("unitary");
    return {std::move(report), std::move(out)};
}

Report run_module_verify(const Dataset& ds) {
    if (!ds.module_data)
        throw InputError("module verify: dataset has no module_data section");
    Report report("module-verify", input_name(ds));
    report.add(run_one_check(ds, "module-pentagon"));
    if (ds.module_equivalence)
        report.add(run_one_check(ds, "module-equivalence"));
    return report;
}

RunOutcome run_module_unitarize(const Dataset& ds) {
    Report report("module-unitarize", input_name(ds));
    Timer t;
    const double tol = ds.tol();
    const ModuleUnitarizeResult res =
        unitarize_module_equivalence(ds.module_equivalence_data());
    report.add("tensorator-unitarity", res.unitarity, 10 * tol,
               res.unitarity <= 10 * tol, "", t.ms());
    report.add("coherence", res.coherence, 100 * tol,
               res.coherence <= 100 * tol);
    report.add("natural-isomorphism", res.nat_iso_residual, 100 * tol,
               res.nat_iso_residual <= 100 * tol);
    report.add("log-linear-solve", res.lsq_residual, tol,
               res.lsq_residual <= tol);

    Dataset out = ds;
    out.name = input_name(ds) + "-unitarized";
    out.module_equivalence->tensorator = res.equivalence.tensorator;
    return {std::move(report), std::move(out)};
}

} // namespace ufc
