/*
 * jcrevival: exact revival analysis for the Jaynes-Cummings model.
 *
 * C interface over the C++ core. All objects are opaque handles created by a
 * jcr_*_create / jcr_* call and released by the matching jcr_*_free; freeing
 * NULL is a no-op. Every fallible call returns a jcr_status; on failure a
 * human-readable message is available from jcr_last_error() on the same
 * thread until the next failing call.
 *
 * Numbers cross the boundary as text wherever exactness matters:
 * rationals as "p/q" or "p", surds as "a + b*sqrt(m) [+ ...]" (the parser
 * also accepts products and quotients such as "2 - 2*sqrt(7)/3").
 *
 * Energies are in units of the coupling y, times in units of 1/y. Blocks are
 * indexed by excitation number k >= 1; "pair n" is the span of blocks n and
 * n + 1, with state vectors ordered (n,0), (n,1), (n+1,0), (n+1,1) and passed
 * as 8 doubles re0, im0, re1, im1, ...
 *
 * Strings returned as const char* are owned by the handle they came from and
 * stay valid until it is freed. jcr_text handles own their own buffer.
 */
#ifndef JCREVIVAL_H
#define JCREVIVAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef JCR_BUILDING_LIBRARY
#    define JCR_API __declspec(dllexport)
#  else
#    define JCR_API __declspec(dllimport)
#  endif
#else
#  define JCR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jcr_status {
  JCR_OK = 0,
  JCR_ERR_USAGE = 1,         /* malformed text, bad arguments, NULL outputs */
  JCR_ERR_DOMAIN = 2,        /* mathematically invalid input (t = +-1, Y^2 < n, ...) */
  JCR_NO_RESULT = 3,         /* well-posed question whose answer is "none" */
  JCR_ERR_FACTOR_LIMIT = 4,  /* squarefree extraction hit the trial-division bound */
  JCR_ERR_UNSUPPORTED = 5,   /* alpha^2 irrational: no closed-form spectrum */
  JCR_ERR_SINGLE_LEVEL = 6,  /* fewer than two distinct levels */
  JCR_ERR_INTERNAL = 7
} jcr_status;

typedef struct jcr_text jcr_text;
typedef struct jcr_params jcr_params;
typedef struct jcr_spectrum jcr_spectrum;
typedef struct jcr_certificate jcr_certificate;
typedef struct jcr_synthesis jcr_synthesis;
typedef struct jcr_scan jcr_scan;

JCR_API const char* jcr_version(void);
JCR_API const char* jcr_last_error(void);
JCR_API const char* jcr_status_name(jcr_status status);

/* ---- text buffers ------------------------------------------------------ */

JCR_API const char* jcr_text_data(const jcr_text* text);
JCR_API size_t jcr_text_size(const jcr_text* text);
JCR_API void jcr_text_free(jcr_text* text);

/* ---- exact arithmetic -------------------------------------------------- */

/* Canonical text of a surd expression (radicands squarefree, zeros dropped). */
JCR_API jcr_status jcr_surd_normalize(const char* surd, jcr_text** out);
/* Rational square root; JCR_NO_RESULT when irrational, JCR_ERR_DOMAIN when negative. */
JCR_API jcr_status jcr_rational_sqrt(const char* rational, jcr_text** out);

/* ---- model parameters -------------------------------------------------- */

JCR_API jcr_status jcr_params_create(const char* alpha, const char* beta, jcr_params** out);
/* alpha = +sqrt(alpha2), beta = rho - alpha. */
JCR_API jcr_status jcr_params_from_alpha2_rho(const char* alpha2, const char* rho, jcr_params** out);
/* Parameter file (key = value). n_out receives n when present (else 0),
 * y_hz_out the y_hz scale when present (else 0). Either may be NULL. */
JCR_API jcr_status jcr_params_load(const char* path, jcr_params** out, uint64_t* n_out, double* y_hz_out);
JCR_API void jcr_params_free(jcr_params* params);

JCR_API const char* jcr_params_alpha(const jcr_params* params);
JCR_API const char* jcr_params_beta(const jcr_params* params);
JCR_API int jcr_params_alpha_is_zero(const jcr_params* params);
JCR_API size_t jcr_params_warning_count(const jcr_params* params);
JCR_API const char* jcr_params_warning(const jcr_params* params, size_t index);

/* Row-major 2x2 block for excitation k scaled by y; k = 0 gives dim 1 (the
 * vacuum, out[0] = 0). */
JCR_API jcr_status jcr_block_matrix(const jcr_params* params, uint64_t k, double y, double out[4], int* dim);

/* ---- spectra ----------------------------------------------------------- */

JCR_API jcr_status jcr_spectrum_create(const jcr_params* params, uint64_t n, jcr_spectrum** out);
JCR_API void jcr_spectrum_free(jcr_spectrum* spectrum);
JCR_API size_t jcr_spectrum_size(const jcr_spectrum* spectrum);
JCR_API const char* jcr_spectrum_level_text(const jcr_spectrum* spectrum, size_t index);
JCR_API double jcr_spectrum_level_value(const jcr_spectrum* spectrum, size_t index);
JCR_API uint64_t jcr_spectrum_level_block(const jcr_spectrum* spectrum, size_t index);
JCR_API int jcr_spectrum_level_is_upper(const jcr_spectrum* spectrum, size_t index);
JCR_API int jcr_spectrum_is_degenerate(const jcr_spectrum* spectrum);

/* ---- revival certificates ---------------------------------------------- */

/* JCR_NO_RESULT (and *out = NULL) when some gap ratio is irrational. */
JCR_API jcr_status jcr_certificate_create(const jcr_spectrum* spectrum, jcr_certificate** out);
/* Same, for an arbitrary list of level texts (any order, duplicates merged). */
JCR_API jcr_status jcr_certificate_from_levels(const char* const* levels, size_t count, jcr_certificate** out);
JCR_API void jcr_certificate_free(jcr_certificate* cert);
JCR_API size_t jcr_certificate_ratio_count(const jcr_certificate* cert);
JCR_API const char* jcr_certificate_ratio(const jcr_certificate* cert, size_t index);
JCR_API const char* jcr_certificate_k1(const jcr_certificate* cert);
JCR_API const char* jcr_certificate_delta(const jcr_certificate* cert);
JCR_API const char* jcr_certificate_period_exact(const jcr_certificate* cert);
JCR_API double jcr_certificate_period(const jcr_certificate* cert);
/* key=value lines: ratios, K1, delta, gap_unit, T_exact, [T_pi], T. */
JCR_API const char* jcr_certificate_record(const jcr_certificate* cert);

/* (rho +- X)/(2Y) for the adjacent pair n; a component is set to NULL when
 * irrational. */
JCR_API jcr_status jcr_adjacent_fractions(const char* alpha2, const char* rho, uint64_t n, jcr_text** plus,
                                          jcr_text** minus);

/* holds = 1 when sqrt((n+1)/n) is irrational. */
JCR_API jcr_status jcr_resonance_obstruction(uint64_t n, int* holds);
/* first_failure = 0 when n(n+1) is a non-square for every n <= max_n. */
JCR_API jcr_status jcr_resonance_batch(uint64_t max_n, unsigned workers, uint64_t* first_failure);

/* ---- parameter synthesis ----------------------------------------------- */

JCR_API jcr_status jcr_synthesize(const char* t, const char* rho, uint64_t n, jcr_synthesis** out);
JCR_API void jcr_synthesis_free(jcr_synthesis* synthesis);
/* key=value lines: n, t, X, Y, rho, alpha2, alpha, beta, F_plus, F_minus,
 * degenerate, E0..E3. */
JCR_API const char* jcr_synthesis_record(const jcr_synthesis* synthesis);
JCR_API jcr_status jcr_synthesis_params(const jcr_synthesis* synthesis, jcr_params** out);
JCR_API jcr_status jcr_synthesis_certificate(const jcr_synthesis* synthesis, jcr_certificate** out);

/* ---- dynamics on a pair span ------------------------------------------- */

JCR_API jcr_status jcr_propagator_distance(const jcr_params* params, uint64_t n, double t, double* out);
JCR_API jcr_status jcr_fidelity_sweep(const jcr_params* params, uint64_t n, double t, uint64_t seed,
                                      uint64_t count, unsigned workers, double* min_fidelity,
                                      double* max_norm_error);
JCR_API jcr_status jcr_evolve_pair(const jcr_params* params, uint64_t n, double t, const double in_re_im[8],
                                   double out_re_im[8]);
JCR_API jcr_status jcr_energy_expectation_pair(const jcr_params* params, uint64_t n, const double re_im[8],
                                               double* out);
/* Parses "re,im" lines into out_re_im (capacity in complex entries). */
JCR_API jcr_status jcr_state_parse_csv(const char* text, double* out_re_im, size_t capacity, size_t* count);
JCR_API jcr_status jcr_state_format_csv(const double* re_im, size_t count, jcr_text** out);

/* ---- difference-of-squares conics -------------------------------------- */

JCR_API jcr_status jcr_unit_hyperbola_point(const char* t, jcr_text** x, jcr_text** y);
JCR_API jcr_status jcr_solve_difference_rational(const char* k, const char* s, jcr_text** x, jcr_text** y);
/* "X,Y" rows; count may be 0 (K = 2 mod 4). */
JCR_API jcr_status jcr_solve_difference_integer(uint64_t k, jcr_text** csv, size_t* count);
/* "X0,X1,...,Xs" rows ascending in X0. */
JCR_API jcr_status jcr_chain_solve(const uint64_t* ks, size_t len, uint64_t bound, unsigned workers,
                                   jcr_text** csv, size_t* rows);
/* One integer per line, ascending. */
JCR_API jcr_status jcr_pythagorean_middles(uint64_t bound, jcr_text** list, size_t* count);

/* ---- LCM scan ---------------------------------------------------------- */

JCR_API jcr_status jcr_scan_create(const char* d, uint64_t count, unsigned workers, jcr_scan** out);
JCR_API void jcr_scan_free(jcr_scan* scan);
JCR_API size_t jcr_scan_size(const jcr_scan* scan);
/* Record with index n (1-based): lcm as decimal text ("0" when skipped). */
JCR_API jcr_status jcr_scan_record(const jcr_scan* scan, uint64_t n, jcr_text** lcm, int* skipped);
/* "n,t,lcm,skipped" CSV. */
JCR_API jcr_status jcr_scan_csv(const jcr_scan* scan, jcr_text** out);
/* "bin_lower_log10,count" CSV. */
JCR_API jcr_status jcr_scan_histogram_csv(const jcr_scan* scan, double width, jcr_text** out);
/* key=value lines: count, skipped, min_lcm, max_lcm. */
JCR_API jcr_status jcr_scan_summary(const jcr_scan* scan, jcr_text** out);

#ifdef __cplusplus
}
#endif

#endif /* JCREVIVAL_H */
