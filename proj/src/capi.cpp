#include "ufc/ufc.h"

#include <cstring>
#include <string>

#include "errors.hpp"
#include "runner.hpp"

struct ufc_dataset {
    ufc::Dataset data;
};

struct ufc_report {
    ufc::Report data;
};

namespace {

thread_local std::string g_last_error;

ufc_status classify(const std::exception& e) {
    g_last_error = e.what();
    if (dynamic_cast<const ufc::PreconditionError*>(&e))
        return UFC_ERROR_PRECONDITION;
    if (dynamic_cast<const ufc::NumericError*>(&e)) return UFC_ERROR_NUMERIC;
    if (dynamic_cast<const ufc::DecompositionError*>(&e))
        return UFC_ERROR_DECOMPOSITION;
    if (dynamic_cast<const ufc::InconsistencyError*>(&e))
        return UFC_ERROR_INCONSISTENT;
    if (dynamic_cast<const ufc::InputError*>(&e)) return UFC_ERROR_INPUT;
    return UFC_ERROR_INTERNAL;
}

template <typename Fn>
ufc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return UFC_OK;
    } catch (const std::exception& e) {
        return classify(e);
    } catch (...) {
        g_last_error = "unknown error";
        return UFC_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ufc::ParseOptions make_options(int strict, double tol_override) {
    ufc::ParseOptions opts;
    opts.strict = strict != 0;
    if (tol_override > 0) opts.tolerance_override = tol_override;
    return opts;
}

ufc_status check_args(bool ok) {
    if (!ok) {
        g_last_error = "null argument";
        return UFC_ERROR_INPUT;
    }
    return UFC_OK;
}

// Shared shape of every transforming command.
template <typename Fn>
ufc_status run_transform(const ufc_dataset* ds, ufc_dataset** out_dataset,
                         ufc_report** out_report, Fn&& fn) {
    if (check_args(ds && out_report) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        ufc::RunOutcome outcome = fn(ds->data);
        if (out_dataset)
            *out_dataset = outcome.output
                               ? new ufc_dataset{std::move(*outcome.output)}
                               : nullptr;
        *out_report = new ufc_report{std::move(outcome.report)};
    });
}

} // namespace

extern "C" {

const char* ufc_last_error(void) { return g_last_error.c_str(); }

void ufc_dataset_free(ufc_dataset* ds) { delete ds; }
void ufc_report_free(ufc_report* rep) { delete rep; }
void ufc_string_free(char* s) { delete[] s; }

ufc_status ufc_dataset_parse(const char* text, int strict, double tol_override,
                             ufc_dataset** out) {
    if (check_args(text && out) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        *out = new ufc_dataset{
            ufc::parse_dataset(text, make_options(strict, tol_override))};
    });
}

ufc_status ufc_dataset_read_file(const char* path, int strict,
                                 double tol_override, ufc_dataset** out) {
    if (check_args(path && out) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        *out = new ufc_dataset{
            ufc::read_dataset_file(path, make_options(strict, tol_override))};
    });
}

ufc_status ufc_dataset_emit(const ufc_dataset* ds, char** out_text) {
    if (check_args(ds && out_text) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] { *out_text = dup_string(ufc::emit_dataset(ds->data)); });
}

ufc_status ufc_dataset_write_file(const ufc_dataset* ds, const char* path) {
    if (check_args(ds && path) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] { ufc::write_dataset_file(ds->data, path); });
}

ufc_status ufc_builtin_names(char** out_text) {
    if (check_args(out_text) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        std::string all;
        for (const auto& n : ufc::builtin_names()) {
            all += n;
            all += '\n';
        }
        *out_text = dup_string(all);
    });
}

ufc_status ufc_builtin_dataset(const char* name, double tol_override,
                               ufc_dataset** out) {
    if (check_args(name && out) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        ufc::Dataset ds = ufc::builtin_dataset(name);
        if (tol_override > 0) ds.tolerance = tol_override;
        *out = new ufc_dataset{std::move(ds)};
    });
}

ufc_status ufc_verify(const ufc_dataset* ds, const char* check,
                      ufc_report** out_report) {
    if (check_args(ds && out_report) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        *out_report = new ufc_report{
            ufc::run_verify(ds->data, check ? check : "")};
    });
}

ufc_status ufc_unitarize(const ufc_dataset* ds, ufc_dataset** out_dataset,
                         ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report, ufc::run_unitarize);
}

ufc_status ufc_factorize(const ufc_dataset* ds, ufc_dataset** out_dataset,
                         ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report, ufc::run_factorize);
}

ufc_status ufc_polar(const ufc_dataset* ds, ufc_dataset** out_dataset,
                     ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report, ufc::run_polar);
}

ufc_status ufc_gauge_search(const ufc_dataset* ds, int max_iters,
                            uint64_t seed, ufc_dataset** out_dataset,
                            ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report,
                         [&](const ufc::Dataset& d) {
                             return ufc::run_gauge_search(d, max_iters, seed);
                         });
}

ufc_status ufc_cocycle_verify(const ufc_dataset* ds, ufc_report** out_report) {
    if (check_args(ds && out_report) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        *out_report = new ufc_report{ufc::run_cocycle_verify(ds->data)};
    });
}

ufc_status ufc_cocycle_split(const ufc_dataset* ds, ufc_dataset** out_dataset,
                             ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report, ufc::run_cocycle_split);
}

ufc_status ufc_cocycle_trivialize(const ufc_dataset* ds,
                                  ufc_dataset** out_dataset,
                                  ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report,
                         ufc::run_cocycle_trivialize);
}

ufc_status ufc_cocycle_unitarize(const ufc_dataset* ds,
                                 ufc_dataset** out_dataset,
                                 ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report,
                         ufc::run_cocycle_unitarize);
}

ufc_status ufc_cocycle_build_vecg(const ufc_dataset* ds,
                                  ufc_dataset** out_dataset,
                                  ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report,
                         ufc::run_cocycle_build_vecg);
}

ufc_status ufc_module_verify(const ufc_dataset* ds, ufc_report** out_report) {
    if (check_args(ds && out_report) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        *out_report = new ufc_report{ufc::run_module_verify(ds->data)};
    });
}

ufc_status ufc_module_unitarize(const ufc_dataset* ds,
                                ufc_dataset** out_dataset,
                                ufc_report** out_report) {
    return run_transform(ds, out_dataset, out_report,
                         ufc::run_module_unitarize);
}

int ufc_report_passed(const ufc_report* rep) {
    return rep && rep->data.passed() ? 1 : 0;
}

size_t ufc_report_size(const ufc_report* rep) {
    return rep ? rep->data.checks().size() : 0;
}

ufc_status ufc_report_to_json(const ufc_report* rep, int include_timings,
                              char** out_text) {
    if (check_args(rep && out_text) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] {
        *out_text = dup_string(rep->data.to_json(include_timings != 0));
    });
}

ufc_status ufc_report_to_text(const ufc_report* rep, char** out_text) {
    if (check_args(rep && out_text) != UFC_OK) return UFC_ERROR_INPUT;
    return guarded([&] { *out_text = dup_string(rep->data.to_text()); });
}

} // extern "C"
