/* ufc -- skeletal fusion-category toolkit, C API.
 *
 * All functionality is reached through two opaque handle types:
 *
 *   ufc_dataset  -- a parsed dataset (any subset of sections: fusion ring,
 *                   F/R-symbols, gauges, equivalences, groups, cochains,
 *                   module data)
 *   ufc_report   -- the named checks produced by one command run
 *
 * Functions return UFC_OK on success. A mathematical verification that comes
 * out negative is NOT an error: the command succeeds and the report carries
 * the failing checks (see ufc_report_passed). Errors are reserved for bad
 * input, violated preconditions and numerical breakdown; the thread-local
 * message is available via ufc_last_error().
 */

#ifndef UFC_UFC_H
#define UFC_UFC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UFC_API __declspec(dllexport)
#else
#define UFC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ufc_dataset ufc_dataset;
typedef struct ufc_report ufc_report;

typedef enum ufc_status {
    UFC_OK = 0,
    UFC_ERROR_INPUT = 1,        /* malformed or semantically invalid data */
    UFC_ERROR_PRECONDITION = 2, /* documented operation precondition violated */
    UFC_ERROR_NUMERIC = 3,      /* singular/non-positive matrix etc. */
    UFC_ERROR_DECOMPOSITION = 4, /* certificates out of budget: invalid input */
    UFC_ERROR_INCONSISTENT = 5,  /* guaranteed-consistent solve failed */
    UFC_ERROR_INTERNAL = 6
} ufc_status;

/* Last error message of the calling thread; empty string if none. The
 * pointer stays valid until the next failing call on the same thread. */
UFC_API const char* ufc_last_error(void);

/* ---- memory -------------------------------------------------------- */

UFC_API void ufc_dataset_free(ufc_dataset* ds);
UFC_API void ufc_report_free(ufc_report* rep);
UFC_API void ufc_string_free(char* s);

/* ---- datasets ------------------------------------------------------ */

/* Parse a JSON dataset. strict != 0 validates ring/group axioms on load.
 * tol_override > 0 replaces the dataset tolerance. */
UFC_API ufc_status ufc_dataset_parse(const char* text, int strict,
                                     double tol_override, ufc_dataset** out);
UFC_API ufc_status ufc_dataset_read_file(const char* path, int strict,
                                         double tol_override,
                                         ufc_dataset** out);
/* Deterministic emission; free the string with ufc_string_free. */
UFC_API ufc_status ufc_dataset_emit(const ufc_dataset* ds, char** out_text);
UFC_API ufc_status ufc_dataset_write_file(const ufc_dataset* ds,
                                          const char* path);

/* Built-in example library. The names list is newline-separated. */
UFC_API ufc_status ufc_builtin_names(char** out_text);
UFC_API ufc_status ufc_builtin_dataset(const char* name, double tol_override,
                                       ufc_dataset** out);

/* ---- commands ------------------------------------------------------ */

/* check: NULL or "" or "all" for the dataset's declared checks / everything
 * applicable; otherwise one of: ring, pentagon, unitary, hexagon,
 * braiding-unitary, equivalence, group, cocycle, module-pentagon,
 * module-equivalence. */
UFC_API ufc_status ufc_verify(const ufc_dataset* ds, const char* check,
                              ufc_report** out_report);

/* Transformations: out_dataset receives the emitted result (pass NULL to
 * discard). */
UFC_API ufc_status ufc_unitarize(const ufc_dataset* ds,
                                 ufc_dataset** out_dataset,
                                 ufc_report** out_report);
UFC_API ufc_status ufc_factorize(const ufc_dataset* ds,
                                 ufc_dataset** out_dataset,
                                 ufc_report** out_report);
UFC_API ufc_status ufc_polar(const ufc_dataset* ds, ufc_dataset** out_dataset,
                             ufc_report** out_report);
UFC_API ufc_status ufc_gauge_search(const ufc_dataset* ds, int max_iters,
                                    uint64_t seed, ufc_dataset** out_dataset,
                                    ufc_report** out_report);

UFC_API ufc_status ufc_cocycle_verify(const ufc_dataset* ds,
                                      ufc_report** out_report);
UFC_API ufc_status ufc_cocycle_split(const ufc_dataset* ds,
                                     ufc_dataset** out_dataset,
                                     ufc_report** out_report);
UFC_API ufc_status ufc_cocycle_trivialize(const ufc_dataset* ds,
                                          ufc_dataset** out_dataset,
                                          ufc_report** out_report);
UFC_API ufc_status ufc_cocycle_unitarize(const ufc_dataset* ds,
                                         ufc_dataset** out_dataset,
                                         ufc_report** out_report);
UFC_API ufc_status ufc_cocycle_build_vecg(const ufc_dataset* ds,
                                          ufc_dataset** out_dataset,
                                          ufc_report** out_report);

UFC_API ufc_status ufc_module_verify(const ufc_dataset* ds,
                                     ufc_report** out_report);
UFC_API ufc_status ufc_module_unitarize(const ufc_dataset* ds,
                                        ufc_dataset** out_dataset,
                                        ufc_report** out_report);

/* ---- reports ------------------------------------------------------- */

/* 1 if every check passed. */
UFC_API int ufc_report_passed(const ufc_report* rep);
UFC_API size_t ufc_report_size(const ufc_report* rep);
/* Machine report. include_timings != 0 adds wall-clock fields (breaks
 * byte-for-byte determinism, off by default). */
UFC_API ufc_status ufc_report_to_json(const ufc_report* rep,
                                      int include_timings, char** out_text);
UFC_API ufc_status ufc_report_to_text(const ufc_report* rep, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* UFC_UFC_H */
