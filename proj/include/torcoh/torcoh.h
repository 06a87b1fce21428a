/* C interface to the torcoh shared library.
 *
 * Conventions:
 *   - Every function that can fail returns an int status code (TORCOH_OK on
 *     success) and leaves a human-readable message readable through
 *     torcoh_last_error() on its context.
 *   - String outputs are heap-allocated, NUL-terminated, owned by the caller
 *     and released with torcoh_free(). On failure output pointers are set to
 *     NULL.
 *   - A context is NOT safe for concurrent use from several threads; create
 *     one context per thread instead (contexts are cheap).
 */
#ifndef TORCOH_H
#define TORCOH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TORCOH_OK 0
#define TORCOH_EPARSE 1       /* malformed input text/JSON */
#define TORCOH_EVALIDATE 2    /* well-formed input violating an invariant */
#define TORCOH_ECAPACITY 3    /* exceeds a configured cap */
#define TORCOH_EUNSUPPORTED 4 /* recognized but not implemented */
#define TORCOH_EBADARG 5      /* bad call-level argument */
#define TORCOH_EINTERNAL 6    /* broken internal invariant (a bug) */

typedef struct torcoh_ctx torcoh_ctx;

/* Library version string, e.g. "0.1.0". Static storage; do not free. */
const char* torcoh_version(void);

torcoh_ctx* torcoh_ctx_new(void);
void torcoh_ctx_free(torcoh_ctx* ctx);

/* Message of the most recent failing call on this context; "" if none.
 * Valid until the next call on the same context. */
const char* torcoh_last_error(const torcoh_ctx* ctx);

/* Numeric limits. Names: "precision_digits", "max_entry_bits",
 * "max_group_order", "max_bar_length", "max_tensor_degree". */
int torcoh_set_option(torcoh_ctx* ctx, const char* name, long value);

/* Releases any string returned through a char** parameter. NULL is a no-op. */
void torcoh_free(char* p);

/* ---- generic job interface ------------------------------------------- */

/* job_json: {"command": "...", "params": {...}, "seed": n, "workers": n,
 *            "timings": bool} — params as documented for the CLI. Writes the
 * full result envelope (which embeds either "result" or "error") to *out and
 * returns the job status. Context options seed the job's caps unless the
 * job carries its own "caps" overrides. */
int torcoh_run_job(torcoh_ctx* ctx, const char* job_json, char** out);

/* ---- focused helpers --------------------------------------------------- */

/* Invariant divisor chain of an integer matrix in the text exchange format
 * ("rows cols nnz" header plus "row col value" triples). *divisors_csv gets
 * the chain as comma-separated decimals, e.g. "1,6". */
int torcoh_snf_text(torcoh_ctx* ctx, const char* matrix_text,
                    char** divisors_csv);

int torcoh_rational_rank_text(torcoh_ctx* ctx, const char* matrix_text,
                              long* rank);

/* Resolution of the cyclic group underlying the (p, q) lens space plus its
 * rank p-1 coefficient module, as JSON documents. */
int torcoh_lens_complex(torcoh_ctx* ctx, long p, long q, char** complex_json,
                        char** module_json);

/* Cohomology of a group-ring complex document; module_json may be NULL for
 * trivial integer coefficients. */
int torcoh_cohomology(torcoh_ctx* ctx, const char* complex_json,
                      const char* module_json, char** result_json);

/* Torsion of an integer cochain complex document. */
int torcoh_torsion_cochain(torcoh_ctx* ctx, const char* cochain_json,
                           char** result_json);

/* Exact equality check: torsion vs alternating product of cohomology
 * orders, on an integer cochain complex document. */
int torcoh_verify_cochain(torcoh_ctx* ctx, const char* cochain_json,
                          char** report_json);

/* Seeded random rationally-acyclic complex; shape_csv like "4,8,4". */
int torcoh_random_acyclic(torcoh_ctx* ctx, const char* shape_csv,
                          uint64_t seed, long entry_bound,
                          char** cochain_json);

/* Dimension of the irreducible module of weight m * (parsed weight spec),
 * e.g. spec "A2:1,0", as a decimal string. */
int torcoh_weyl_dim(torcoh_ctx* ctx, const char* weight_spec, long m,
                    char** dim_decimal);

/* Twisted weight spec (diagram involution), e.g. "A2:3,1" -> "A2:1,3". */
int torcoh_theta_twist(torcoh_ctx* ctx, const char* weight_spec,
                       char** twisted_spec);

/* Rank of the twisted diagonal module family, as a decimal string. */
int torcoh_rho_m_rank(torcoh_ctx* ctx, int n, int d, long m,
                      char** rank_decimal);

/* Signed constant for odd p >= q >= 1, p > 1; vol_xd is a positive decimal
 * string. Result is a decimal real at the context precision. */
int torcoh_c_pq(torcoh_ctx* ctx, int p, int q, const char* vol_xd,
                char** value_decimal);

/* Least-squares growth fit of a "m,value" CSV series; returns a JSON report
 * {"leading_coeff": ..., "second_coeff": ..., "residual_rel": ...,
 *  "ill_conditioned": ...}. */
int torcoh_fit_growth(torcoh_ctx* ctx, const char* series_csv, int degree,
                      char** fit_json);

#ifdef __cplusplus
}
#endif

#endif /* TORCOH_H */
