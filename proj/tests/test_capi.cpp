// Exercises the shared-library surface exactly as an external consumer
// would: opaque handles, status codes, thread-local error strings.

#include <cstdio>
#include <cstring>
#include <string>

#include "ufc/ufc.h"

static int failures = 0;

#define EXPECT(cond, msg)                                            \
    do {                                                             \
        if (!(cond)) {                                               \
            std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__,      \
                         __LINE__, msg);                             \
            ++failures;                                              \
        }                                                            \
    } while (0)

static std::string take_string(char* s) {
    std::string out = s ? s : "";
    ufc_string_free(s);
    return out;
}

int main() {
    // Builtin listing.
    {
        char* names = nullptr;
        EXPECT(ufc_builtin_names(&names) == UFC_OK, "builtin_names");
        const std::string list = take_string(names);
        EXPECT(list.find("fibonacci") != std::string::npos,
               "fibonacci listed");
        EXPECT(list.find("yang-lee") != std::string::npos, "yang-lee listed");
    }

    // Verify a builtin through handles.
    {
        ufc_dataset* ds = nullptr;
        EXPECT(ufc_builtin_dataset("fibonacci", 0.0, &ds) == UFC_OK,
               "builtin fibonacci");
        ufc_report* rep = nullptr;
        EXPECT(ufc_verify(ds, nullptr, &rep) == UFC_OK, "verify runs");
        EXPECT(ufc_report_passed(rep) == 1, "fibonacci passes");
        EXPECT(ufc_report_size(rep) == 3, "three declared checks");
        char* json = nullptr;
        EXPECT(ufc_report_to_json(rep, 0, &json) == UFC_OK, "report json");
        const std::string text = take_string(json);
        EXPECT(text.find("\"pentagon\"") != std::string::npos,
               "pentagon in report");
        EXPECT(text.find("wall_ms") == std::string::npos,
               "no timings by default");
        ufc_report_free(rep);
        ufc_dataset_free(ds);
    }

    // A failing verification is not an API error.
    {
        ufc_dataset* ds = nullptr;
        EXPECT(ufc_builtin_dataset("yang-lee", 0.0, &ds) == UFC_OK,
               "builtin yang-lee");
        ufc_report* rep = nullptr;
        EXPECT(ufc_verify(ds, "unitary", &rep) == UFC_OK,
               "unitary check runs");
        EXPECT(ufc_report_passed(rep) == 0, "yang-lee fails unitarity");
        ufc_report_free(rep);

        // Unitarize must refuse a non-unitary presentation with a
        // precondition error.
        ufc_dataset* fib_eq = nullptr;
        EXPECT(ufc_builtin_dataset("fib-equivalence", 0.0, &fib_eq) == UFC_OK,
               "builtin fib-equivalence");
        ufc_dataset* out = nullptr;
        ufc_report* rep2 = nullptr;
        EXPECT(ufc_unitarize(fib_eq, &out, &rep2) == UFC_OK, "unitarize ok");
        EXPECT(ufc_report_passed(rep2) == 1, "unitarize passes");
        EXPECT(out != nullptr, "output dataset produced");
        char* emitted = nullptr;
        EXPECT(ufc_dataset_emit(out, &emitted) == UFC_OK, "emit output");
        const std::string text = take_string(emitted);
        EXPECT(text.find("\"nat_iso\"") != std::string::npos,
               "natural isomorphism emitted");
        ufc_dataset_free(out);
        ufc_report_free(rep2);
        ufc_dataset_free(fib_eq);
        ufc_dataset_free(ds);
    }

    // Parse errors produce status codes and messages, not crashes.
    {
        ufc_dataset* ds = nullptr;
        const ufc_status st = ufc_dataset_parse("{\"fusion_ring\":", 1, 0, &ds);
        EXPECT(st == UFC_ERROR_INPUT, "syntax error status");
        EXPECT(std::strlen(ufc_last_error()) > 0, "error message set");
        EXPECT(ufc_dataset_read_file("/no/such/file.json", 1, 0, &ds) ==
                   UFC_ERROR_INPUT,
               "missing file status");
        EXPECT(ufc_builtin_dataset("nope", 0.0, &ds) == UFC_ERROR_INPUT,
               "unknown builtin");
        EXPECT(ufc_verify(nullptr, nullptr, nullptr) == UFC_ERROR_INPUT,
               "null arguments");
    }

    // Determinism through the C surface: same seed, same bytes.
    {
        ufc_dataset* ds = nullptr;
        EXPECT(ufc_builtin_dataset("yang-lee", 0.0, &ds) == UFC_OK, "builtin");
        std::string first, second;
        for (int round = 0; round < 2; ++round) {
            ufc_dataset* out = nullptr;
            ufc_report* rep = nullptr;
            EXPECT(ufc_gauge_search(ds, 40, 99, &out, &rep) == UFC_OK,
                   "gauge search runs");
            char* json = nullptr;
            EXPECT(ufc_report_to_json(rep, 0, &json) == UFC_OK, "json");
            (round == 0 ? first : second) = take_string(json);
            ufc_report_free(rep);
            ufc_dataset_free(out);
        }
        EXPECT(first == second, "gauge-search reports byte-identical");
        ufc_dataset_free(ds);
    }

    // Cocycle pipeline through the C surface.
    {
        ufc_dataset* ds = nullptr;
        EXPECT(ufc_builtin_dataset("z2-positive-coboundary", 0.0, &ds) ==
                   UFC_OK,
               "builtin coboundary");
        ufc_dataset* out = nullptr;
        ufc_report* rep = nullptr;
        EXPECT(ufc_cocycle_trivialize(ds, &out, &rep) == UFC_OK,
               "trivialize runs");
        EXPECT(ufc_report_passed(rep) == 1, "trivialize passes");
        ufc_report_free(rep);
        ufc_dataset_free(out);
        ufc_dataset_free(ds);
    }

    if (failures == 0) std::printf("test_capi: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
