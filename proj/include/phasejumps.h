/* phasejumps C API: zero sets and charges of complex functions from grid
 * samples, the STFT input-model simulator, and the evaluation harness.
 *
 * All functions return PJ_OK (0) on success or a pj_status error code;
 * pj_last_error() describes the most recent failure on the calling thread.
 * Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef PHASEJUMPS_H
#define PHASEJUMPS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pj_status {
    PJ_OK = 0,
    PJ_ERR_INVALID_ARGUMENT = 1,
    PJ_ERR_IO = 2,
    PJ_ERR_OUT_OF_BOUNDS = 3,
    PJ_ERR_NUMERIC = 4,
    PJ_ERR_ASSERTION = 5,
    PJ_ERR_INTERNAL = 6
} pj_status;

typedef enum pj_algorithm {
    PJ_ALGO_PJ = 0,
    PJ_ALGO_PJC = 1,
    PJ_ALGO_MGN = 2
} pj_algorithm;

typedef enum pj_factor {
    PJ_FACTOR_IDENTITY = 0,
    PJ_FACTOR_TWISTED = 1
} pj_factor;

/* Window names: "hermite0", "hermite1", "gauss" (the pi-normalized Gaussian
 * 2^{1/4} e^{-pi t^2}), or "file:<path>" for sampled windows. */

typedef struct pj_field pj_field;     /* complex samples on a padded grid */
typedef struct pj_zeroset pj_zeroset; /* detected zeros with charges */

const char* pj_last_error(void);

/* ------------------------------ fields -------------------------------- */

typedef struct pj_sim_params {
    double domain_half_width; /* L */
    double delta;
    double sigma;
    int pad_steps;
    uint64_t seed;
    const char* window;     /* window name, see above */
    const char* signal;     /* "zero" or "gauss" (e^{-t^2/2}) */
    double signal_amp;      /* amplitude multiplying the signal */
} pj_sim_params;

pj_status pj_simulate(const pj_sim_params* params, pj_field** out);

pj_status pj_field_read(const char* path, pj_field** out);
pj_status pj_field_write(const pj_field* field, const char* path);
pj_status pj_field_info(const pj_field* field, double* domain_half_width, double* delta,
                        int* pad_steps);
/* Sample at grid indices (k, j); coordinates are delta*k + i*delta*j. */
pj_status pj_field_sample(const pj_field* field, int k, int j, double* re, double* im);
void pj_field_free(pj_field* field);

/* ----------------------------- detection ------------------------------ */

typedef struct pj_detect_params {
    pj_algorithm algorithm;
    pj_factor factor;
    double chi_max;       /* <= 0 selects the default 0.9 */
    int mgn_weighted;     /* MGN only: weight magnitudes by e^{-|z|^2/2} */
} pj_detect_params;

pj_status pj_detect(const pj_field* field, const pj_detect_params* params, pj_zeroset** out);

pj_status pj_zeroset_read(const char* path, pj_zeroset** out);
pj_status pj_zeroset_write(const pj_zeroset* zeros, const char* path);
size_t pj_zeroset_size(const pj_zeroset* zeros);
pj_status pj_zeroset_get(const pj_zeroset* zeros, size_t index, double* x, double* y, int* theta,
                         double* chi);
void pj_zeroset_free(pj_zeroset* zeros);

/* ----------------------------- evaluation ----------------------------- */

typedef struct pj_match_summary {
    size_t n_reference;
    size_t n_computed;
    size_t n_matched;
    size_t charge_agreements;
    double total_linf_dist;
} pj_match_summary;

/* Injective threshold matching; writes the full MatchResult as JSON when
 * json_out_path is non-NULL. */
pj_status pj_evaluate(const pj_zeroset* reference, const pj_zeroset* computed, double threshold,
                      const char* json_out_path, pj_match_summary* out);

/* Empirical covariance of pure-noise simulations against the window's
 * twisted kernel at n_pairs point pairs (z_i, w_i); writes a JSON report
 * when json_out_path is non-NULL and returns the largest |estimate -
 * reference| through max_deviation. */
pj_status pj_kernel_check(const pj_sim_params* params, const double* pair_coords /* 4*n */,
                          size_t n_pairs, int n_realizations, const char* json_out_path,
                          double* max_deviation);

/* ----------------------------- experiments ---------------------------- */

typedef struct pj_experiment_params {
    const char* name; /* "exp1", "exp2", "exp3", "custom" */
    int realizations; /* <= 0 keeps the experiment default */
    uint64_t seed;
    const char* window;   /* NULL keeps the default (hermite1) */
    double delta;         /* <= 0 keeps the default */
    double sigma;         /* < 0 keeps the default */
    pj_factor factor;
    const char* out_dir;  /* reports are written here; NULL writes nothing */
    int assert_thresholds;
} pj_experiment_params;

/* Runs the experiment; returns PJ_ERR_ASSERTION when assert_thresholds is
 * set and a threshold is violated (reports are still written). */
pj_status pj_experiment_run(const pj_experiment_params* params);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PHASEJUMPS_H */
