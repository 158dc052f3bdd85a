// Command-line front end; talks to the core exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ufc/ufc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct DatasetDeleter {
    void operator()(ufc_dataset* d) const { ufc_dataset_free(d); }
};
struct ReportDeleter {
    void operator()(ufc_report* r) const { ufc_report_free(r); }
};
using DatasetPtr = std::unique_ptr<ufc_dataset, DatasetDeleter>;
using ReportPtr = std::unique_ptr<ufc_report, ReportDeleter>;

struct CommonOpts {
    std::string input;
    double tol = 0.0; // 0 = dataset default
    std::string out_path;
    std::string report_path;
    bool timings = false;
    bool lenient = false;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input)
        cmd->add_option("dataset", opts.input,
                        "dataset file (or builtin:<name>)")
            ->required();
    cmd->add_option("--tol", opts.tol, "tolerance override");
    cmd->add_option("--out", opts.out_path, "write the output dataset here");
    cmd->add_option("--report", opts.report_path,
                    "write the machine-readable report here");
    cmd->add_flag("--timings", opts.timings,
                  "include wall-clock times in the machine report");
    cmd->add_flag("--lenient", opts.lenient,
                  "do not validate ring/group axioms on load");
    cmd->add_flag("--quiet,-q", opts.quiet, "suppress the human report");
}

int fail_with_error(ufc_status status) {
    std::cerr << "error: " << ufc_last_error() << "\n";
    // Every library error is an input/usage problem as far as the exit code
    // is concerned; mathematical failures travel through reports.
    (void)status;
    return kExitUsage;
}

int load_dataset(const CommonOpts& opts, DatasetPtr& out) {
    ufc_dataset* raw = nullptr;
    ufc_status st;
    const std::string builtin_prefix = "builtin:";
    if (opts.input.rfind(builtin_prefix, 0) == 0) {
        st = ufc_builtin_dataset(opts.input.substr(builtin_prefix.size()).c_str(),
                                 opts.tol, &raw);
    } else {
        st = ufc_dataset_read_file(opts.input.c_str(), opts.lenient ? 0 : 1,
                                   opts.tol, &raw);
    }
    if (st != UFC_OK) return fail_with_error(st);
    out.reset(raw);
    return kExitPass;
}

int finish(const CommonOpts& opts, ReportPtr report, DatasetPtr output) {
    if (!opts.quiet && report) {
        char* text = nullptr;
        if (ufc_report_to_text(report.get(), &text) == UFC_OK) {
            std::cout << text;
            ufc_string_free(text);
        }
    }
    if (!opts.report_path.empty() && report) {
        char* json = nullptr;
        if (ufc_report_to_json(report.get(), opts.timings ? 1 : 0, &json) !=
            UFC_OK)
            return fail_with_error(UFC_ERROR_INTERNAL);
        std::ofstream f(opts.report_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << opts.report_path << "'\n";
            ufc_string_free(json);
            return kExitUsage;
        }
        f << json;
        ufc_string_free(json);
    }
    if (!opts.out_path.empty()) {
        if (!output) {
            std::cerr << "error: this command produced no output dataset\n";
            return kExitUsage;
        }
        if (ufc_dataset_write_file(output.get(), opts.out_path.c_str()) !=
            UFC_OK)
            return fail_with_error(UFC_ERROR_INTERNAL);
    }
    return report && !ufc_report_passed(report.get()) ? kExitVerifyFailed
                                                      : kExitPass;
}

using TransformFn = ufc_status (*)(const ufc_dataset*, ufc_dataset**,
                                   ufc_report**);

int run_transform_command(const CommonOpts& opts, TransformFn fn) {
    DatasetPtr ds;
    if (int rc = load_dataset(opts, ds); rc != kExitPass) return rc;
    ufc_dataset* out = nullptr;
    ufc_report* rep = nullptr;
    const ufc_status st = fn(ds.get(), &out, &rep);
    if (st != UFC_OK) return fail_with_error(st);
    return finish(opts, ReportPtr(rep), DatasetPtr(out));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ufc -- numerical toolkit for skeletal fusion categories: coherence "
        "verification, polar factorization of equivalences, positive-part "
        "trivialization, and the finite-group-cohomology mirror"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for every subcommand");

    // verify
    CommonOpts verify_opts;
    std::string verify_check;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the dataset's declared checks");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option(
        "--check", verify_check,
        "run one specific check (ring, pentagon, unitary, hexagon, "
        "braiding-unitary, equivalence, group, cocycle, module-pentagon, "
        "module-equivalence) or 'all'");

    // transforms
    CommonOpts unitarize_opts, factorize_opts, polar_opts, search_opts;
    auto* unitarize_cmd = app.add_subcommand(
        "unitarize", "replace the equivalence tensorator by a unitary one");
    add_common(unitarize_cmd, unitarize_opts);
    auto* factorize_cmd = app.add_subcommand(
        "factorize",
        "split the equivalence into a unitary factor and a positive part");
    add_common(factorize_cmd, factorize_opts);
    auto* polar_cmd = app.add_subcommand(
        "polar", "blockwise polar decomposition of the gauge section");
    add_common(polar_cmd, polar_opts);

    int max_iters = 500;
    uint64_t seed = 0;
    auto* search_cmd = app.add_subcommand(
        "gauge-search",
        "heuristic search for a gauge making the associator unitary");
    add_common(search_cmd, search_opts);
    search_cmd->add_option("--max-iters", max_iters, "iteration budget")
        ->capture_default_str();
    search_cmd->add_option("--seed", seed, "seed for stall-recovery jitter")
        ->capture_default_str();

    // cocycle group
    auto* cocycle_cmd =
        app.add_subcommand("cocycle", "finite-group cochain operations");
    cocycle_cmd->require_subcommand(1);
    CommonOpts co_verify, co_split, co_triv, co_unit, co_build;
    auto* ccv = cocycle_cmd->add_subcommand("verify", "cocycle condition");
    add_common(ccv, co_verify);
    auto* ccs = cocycle_cmd->add_subcommand(
        "split", "pointwise polar split into phase and positive cocycles");
    add_common(ccs, co_split);
    auto* cct = cocycle_cmd->add_subcommand(
        "trivialize", "write a positive cocycle as a coboundary");
    add_common(cct, co_triv);
    auto* ccu = cocycle_cmd->add_subcommand(
        "unitarize", "replace a cocycle by its U(1) representative");
    add_common(ccu, co_unit);
    auto* ccb = cocycle_cmd->add_subcommand(
        "build-vecg", "pointed fusion data from a normalized 3-cocycle");
    add_common(ccb, co_build);

    // module group
    auto* module_cmd =
        app.add_subcommand("module", "module-category operations");
    module_cmd->require_subcommand(1);
    CommonOpts mod_verify, mod_unitarize;
    auto* mv = module_cmd->add_subcommand("verify", "module pentagon");
    add_common(mv, mod_verify);
    auto* mu = module_cmd->add_subcommand(
        "unitarize", "unitarize a module equivalence tensorator");
    add_common(mu, mod_unitarize);

    // examples group
    auto* examples_cmd =
        app.add_subcommand("examples", "built-in example library");
    examples_cmd->require_subcommand(1);
    auto* list_cmd = examples_cmd->add_subcommand("list", "list names");
    CommonOpts emit_opts;
    std::string emit_name;
    auto* emit_cmd =
        examples_cmd->add_subcommand("emit", "emit a builtin dataset");
    emit_cmd->add_option("name", emit_name, "builtin name")->required();
    add_common(emit_cmd, emit_opts, /*with_input=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (verify_cmd->parsed()) {
        DatasetPtr ds;
        if (int rc = load_dataset(verify_opts, ds); rc != kExitPass) return rc;
        ufc_report* rep = nullptr;
        const ufc_status st =
            ufc_verify(ds.get(), verify_check.c_str(), &rep);
        if (st != UFC_OK) return fail_with_error(st);
        return finish(verify_opts, ReportPtr(rep), nullptr);
    }
    if (unitarize_cmd->parsed())
        return run_transform_command(unitarize_opts, ufc_unitarize);
    if (factorize_cmd->parsed())
        return run_transform_command(factorize_opts, ufc_factorize);
    if (polar_cmd->parsed())
        return run_transform_command(polar_opts, ufc_polar);
    if (search_cmd->parsed()) {
        DatasetPtr ds;
        if (int rc = load_dataset(search_opts, ds); rc != kExitPass) return rc;
        ufc_dataset* out = nullptr;
        ufc_report* rep = nullptr;
        const ufc_status st =
            ufc_gauge_search(ds.get(), max_iters, seed, &out, &rep);
        if (st != UFC_OK) return fail_with_error(st);
        return finish(search_opts, ReportPtr(rep), DatasetPtr(out));
    }
    if (ccv->parsed()) {
        DatasetPtr ds;
        if (int rc = load_dataset(co_verify, ds); rc != kExitPass) return rc;
        ufc_report* rep = nullptr;
        const ufc_status st = ufc_cocycle_verify(ds.get(), &rep);
        if (st != UFC_OK) return fail_with_error(st);
        return finish(co_verify, ReportPtr(rep), nullptr);
    }
    if (ccs->parsed()) return run_transform_command(co_split, ufc_cocycle_split);
    if (cct->parsed())
        return run_transform_command(co_triv, ufc_cocycle_trivialize);
    if (ccu->parsed())
        return run_transform_command(co_unit, ufc_cocycle_unitarize);
    if (ccb->parsed())
        return run_transform_command(co_build, ufc_cocycle_build_vecg);
    if (mv->parsed()) {
        DatasetPtr ds;
        if (int rc = load_dataset(mod_verify, ds); rc != kExitPass) return rc;
        ufc_report* rep = nullptr;
        const ufc_status st = ufc_module_verify(ds.get(), &rep);
        if (st != UFC_OK) return fail_with_error(st);
        return finish(mod_verify, ReportPtr(rep), nullptr);
    }
    if (mu->parsed())
        return run_transform_command(mod_unitarize, ufc_module_unitarize);
    if (list_cmd->parsed()) {
        char* names = nullptr;
        if (ufc_builtin_names(&names) != UFC_OK)
            return fail_with_error(UFC_ERROR_INTERNAL);
        std::cout << names;
        ufc_string_free(names);
        return kExitPass;
    }
    if (emit_cmd->parsed()) {
        ufc_dataset* raw = nullptr;
        if (ufc_builtin_dataset(emit_name.c_str(), emit_opts.tol, &raw) !=
            UFC_OK)
            return fail_with_error(UFC_ERROR_INPUT);
        DatasetPtr ds(raw);
        if (!emit_opts.out_path.empty()) {
            if (ufc_dataset_write_file(ds.get(), emit_opts.out_path.c_str()) !=
                UFC_OK)
                return fail_with_error(UFC_ERROR_INTERNAL);
        } else {
            char* text = nullptr;
            if (ufc_dataset_emit(ds.get(), &text) != UFC_OK)
                return fail_with_error(UFC_ERROR_INTERNAL);
            std::cout << text;
            ufc_string_free(text);
        }
        return kExitPass;
    }
    return kExitUsage;
}
