/*
 * C interface to the kontact library: exact verification of Goursat /
 * k-contact distribution claims and numeric Lie-system simulation.
 *
 * All functions that produce output follow the same pattern: they return a
 * kk_status and, on KK_OK or KK_FINDINGS, store a report handle in *out. The
 * caller frees it with kk_report_free. On error (KK_ERR_*) *out is left NULL
 * and kk_ctx_error() describes the problem.
 *
 * Expressions use the chart grammar, e.g. "x4*d_x3 + x3*d_x2 + d_x1" on the
 * chart "x1 x2 x3 x4"; angular coordinates are declared with ":angle" and
 * entered through sin()/cos(). Points are comma-separated rationals, one per
 * linear coordinate and an exact pair s,c per angular coordinate; several
 * points are separated by ';'.
 */

#ifndef KONTACT_H
#define KONTACT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kk_ctx kk_ctx;
typedef struct kk_report kk_report;

typedef enum kk_status {
    KK_OK = 0,        /* command ran, every check passed */
    KK_FINDINGS = 1,  /* command ran, some computed fact disagrees with its claim */
    KK_ERR_USAGE = 2, /* bad arguments (unknown entry, size mismatch, ...) */
    KK_ERR_PARSE = 3, /* expression or chart syntax error */
    KK_ERR_INTERNAL = 4
} kk_status;

const char *kk_version(void);

kk_ctx *kk_ctx_new(void);
void kk_ctx_free(kk_ctx *ctx);

/* Message for the last failed call on this context ("" when none). */
const char *kk_ctx_error(const kk_ctx *ctx);

/* Seed for the pseudo-random sample points used by verification commands. */
void kk_ctx_set_seed(kk_ctx *ctx, unsigned long seed);
/* Include per-entry wall times in reports (off by default so identical
 * invocations serialize identically). */
void kk_ctx_set_timings(kk_ctx *ctx, int enabled);

/* --- symbolic commands ------------------------------------------------- */

kk_status kk_bracket(kk_ctx *ctx, const char *chart, const char *lhs, const char *rhs,
                     kk_report **out);

kk_status kk_flag(kk_ctx *ctx, const char *chart, const char *const *gens, size_t ngens,
                  int max_depth, kk_report **out);

kk_status kk_goursat(kk_ctx *ctx, const char *chart, const char *const *gens, size_t ngens,
                     const char *points /* may be NULL */, kk_report **out);

kk_status kk_symmetry(kk_ctx *ctx, const char *chart, const char *const *gens, size_t ngens,
                      const char *candidate, kk_report **out);

kk_status kk_kcontact(kk_ctx *ctx, const char *chart, const char *const *gens, size_t ngens,
                      const char *const *syms, size_t nsyms, const char *points,
                      kk_report **out);

kk_status kk_closure(kk_ctx *ctx, const char *chart, const char *const *seeds, size_t nseeds,
                     int max_dim, kk_report **out);

kk_status kk_constants(kk_ctx *ctx, const char *chart, const char *const *basis,
                       size_t nbasis, kk_report **out);

/* --- catalog ------------------------------------------------------------ */

kk_status kk_catalog_list(kk_ctx *ctx, kk_report **out);

/* name == NULL verifies every entry (entries run concurrently, the report
 * joins them in catalog order). */
kk_status kk_catalog_verify(kk_ctx *ctx, const char *name, kk_report **out);

kk_status kk_obstruction(kk_ctx *ctx, kk_report **out);

kk_status kk_trailer(kk_ctx *ctx, int n, kk_report **out);

/* --- numerics ------------------------------------------------------------ */

/* basis_entry names a catalog entry whose VG basis is integrated (e.g.
 * "zero_trailer"); alternatively pass chart + explicit basis fields.
 * b_coeffs: one polynomial in t per basis field, ';'-separated. x0:
 * comma-separated initial state (raw angles for angular coordinates).
 * csv_path may be NULL. */
kk_status kk_simulate(kk_ctx *ctx, const char *basis_entry, const char *chart,
                      const char *const *basis, size_t nbasis, const char *b_coeffs,
                      const char *x0, double t0, double t1, double step,
                      const char *csv_path, kk_report **out);

/* g_spec: "s,c;l1,l2" exact rotation pair plus translation. Checks the
 * zero-trailer superposition rule at tolerance tol. */
kk_status kk_superpose(kk_ctx *ctx, const char *g_spec, const char *b_coeffs,
                       const char *x0, double t0, double t1, double step, double tol,
                       kk_report **out);

/* --- reports ------------------------------------------------------------- */

/* KK_OK or KK_FINDINGS. */
int kk_report_status(const kk_report *rep);
const char *kk_report_text(const kk_report *rep);
const char *kk_report_json(const kk_report *rep);
void kk_report_free(kk_report *rep);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KONTACT_H */
