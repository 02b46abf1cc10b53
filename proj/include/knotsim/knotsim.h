#ifndef KNOTSIM_KNOTSIM_H
#define KNOTSIM_KNOTSIM_H

/* C API of the knotsim shared library. All computations are driven through
 * JSON requests so that callers in any language see one stable entry point.
 *
 * A request is an object {"command": <name>, ...parameters}. Supported
 * commands mirror the CLI subcommands: "bracket", "jones", "colored",
 * "wrt", "fib-rep", "su2-check", "recoupling-table", "hadamard".
 * Responses are envelopes {"config": ..., "result": ..., "diagnostics": ...}.
 * Laurent polynomials are serialized as {"<exponent>": <coefficient>} with
 * string keys; complex numbers as [re, im].
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes (also used as CLI exit codes). */
#define KS_OK 0
#define KS_ERROR_PARSE 2     /* malformed request, braid word, or flag value */
#define KS_ERROR_DOMAIN 3    /* domain/regime error (inadmissible labels, |d| < 1, ...) */
#define KS_ERROR_RESOURCE 4  /* a resource cap refused the computation */
#define KS_ERROR_INTERNAL 5  /* unexpected failure */

/* Opaque handle holding the last error message. Not thread-safe; use one
 * context per thread. */
typedef struct ks_context ks_context;

ks_context* ks_context_create(void);
void ks_context_destroy(ks_context* ctx);

/* Message for the most recent failing call on this context, or "" if the
 * last call succeeded. Owned by the context; valid until the next call. */
const char* ks_context_last_error(const ks_context* ctx);

/* Execute a JSON request. On success returns KS_OK and stores a heap
 * allocated JSON response in *out_json; release it with ks_string_free.
 * On failure returns a nonzero status and leaves *out_json untouched. */
int ks_run_json(ks_context* ctx, const char* request_json, char** out_json);

void ks_string_free(char* s);

/* Library version string, e.g. "1.0.0". Static storage; do not free. */
const char* ks_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KNOTSIM_KNOTSIM_H */
