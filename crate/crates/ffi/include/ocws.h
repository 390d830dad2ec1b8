#ifndef OCWS_H
#define OCWS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum {
  OCWS_STATUS_OK = 0,
  OCWS_STATUS_NULL_POINTER = 1,
  OCWS_STATUS_INVALID_UTF8 = 2,
  OCWS_STATUS_PARSE_ERROR = 3,
  OCWS_STATUS_INVALID_ARGUMENT = 4,
  OCWS_STATUS_TOO_LARGE = 5,
  OCWS_STATUS_SEARCH_FAILED = 6,
  OCWS_STATUS_PANIC = 7,
} OcwsStatus;

typedef enum {
  OCWS_SEARCH_MODE_EXACT = 0,
  OCWS_SEARCH_MODE_GREEDY = 1,
} OcwsSearchMode;

// Opaque code handle.
typedef struct OcwsCode OcwsCode;

// Residuals of the dense-state correction check.
typedef struct {
  double max_off_block;
  double max_block_deviation;
  double tolerance;
  bool pass;
} OcwsOracleReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread; empty after success.
// Valid until the next call into this library from the same thread.
const char *ocws_last_error(void);

// Parses a code file. On success `*out` receives a handle to free with
// `ocws_code_free`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` valid for writes.
OcwsStatus ocws_code_parse(const char *text, OcwsCode **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `code` must be null or a handle from this library not yet freed.
void ocws_code_free(OcwsCode *code);

// Qubit count, number of words and number of gauge qubits.
//
// # Safety
// `code` must be a live handle; the out pointers must be valid for writes.
OcwsStatus ocws_code_params(const OcwsCode *code, size_t *n, size_t *k, size_t *r);

// Canonical code-file text.
//
// # Safety
// `code` must be a live handle and `out` valid for writes.
OcwsStatus ocws_code_write(const OcwsCode *code, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void ocws_string_free(char *s);

// Largest `d` such that every nonidentity Pauli of weight below `d` is
// detected; `n + 1` if every Pauli is.
//
// # Safety
// `code` must be a live handle and `out` valid for writes.
OcwsStatus ocws_certify_distance(const OcwsCode *code, size_t *out);

// Whether every Pauli of weight at most `t` is correctable.
//
// # Safety
// `code` must be a live handle and `out` valid for writes.
OcwsStatus ocws_corrects_weight(const OcwsCode *code, size_t t, bool *out);

// Same question as `ocws_corrects_weight`, decided on induced classical errors.
//
// # Safety
// `code` must be a live handle and `out` valid for writes.
OcwsStatus ocws_classical_route_corrects(const OcwsCode *code, size_t t, bool *out);

// Number of distinct gauge-reduced induced errors over weight `<= weight`.
//
// # Safety
// `code` must be a live handle and `out` valid for writes.
OcwsStatus ocws_induced_class_count(const OcwsCode *code, size_t weight, size_t *out);

// Raw and gauge-reduced induced Z-strings of a Pauli string such as
// `"IXIII"`. Either out pointer may be null to skip it.
//
// # Safety
// `code` must be a live handle, `pauli` NUL-terminated, and non-null out
// pointers valid for writes.
OcwsStatus ocws_induce(const OcwsCode *code, const char *pauli, char **raw_out, char **reduced_out);

// Dense-state check over all ordered pairs of Paulis of weight `<= weight`
// (identity included).
//
// # Safety
// `code` must be a live handle and `out` valid for writes.
OcwsStatus ocws_oracle_check(const OcwsCode *code,
                             size_t weight,
                             double tol,
                             OcwsOracleReport *out);

// Word-set search on the `n`-ring. `target_k == 0` means no target and
// `budget_seconds <= 0` means no time limit. The result is re-verified
// before it is returned.
//
// # Safety
// `out` must be valid for writes.
OcwsStatus ocws_search_ring(size_t n,
                            size_t r,
                            size_t distance,
                            size_t target_k,
                            OcwsSearchMode mode,
                            double budget_seconds,
                            uint64_t seed,
                            OcwsCode **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OCWS_H */
