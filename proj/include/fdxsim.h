/*
 * fdxsim — link-level simulator for full-duplex mmWave MIMO with finite-
 * resolution analog self-interference cancellation and hybrid beamforming.
 *
 * C API of the shared library. Handles are opaque; every fallible call
 * returns an fdx_status. Calls taking an fdx_sim handle additionally leave a
 * human-readable message retrievable via fdx_sim_last_error().
 */

#ifndef FDXSIM_H
#define FDXSIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fdx_status {
    FDX_OK = 0,
    FDX_ERR_CONFIG = 1,      /* bad config file, key, value, or invariant */
    FDX_ERR_RUNTIME = 2,     /* numerical or runtime failure during a run */
    FDX_ERR_INVALID_ARG = 3  /* null handle or out-of-range argument */
} fdx_status;

/* Simulator: owns a configuration. */
typedef struct fdx_sim fdx_sim;

/* Results of one sweep: per-trial rows ordered (snr asc, bits asc, trial asc). */
typedef struct fdx_results fdx_results;

typedef struct fdx_trial_row {
    int trial;
    double snr_db;
    int asic_bits;
    double rate_ki;          /* link k->i, bits/s/Hz */
    double rate_ij;          /* link i->j, bits/s/Hz */
    double sum_rate;
    double ideal_sum;        /* interference-free full-duplex reference */
    double half_duplex_sum;  /* ideal_sum / 2 */
} fdx_trial_row;

const char* fdx_version(void);

/* Create a simulator with default configuration. NULL on allocation failure.
 * Destroy with fdx_sim_destroy (NULL is a no-op). */
fdx_sim* fdx_sim_create(void);
void fdx_sim_destroy(fdx_sim* sim);

/* Message describing the most recent failure on this handle ("" if none).
 * Valid until the next call on the handle. */
const char* fdx_sim_last_error(const fdx_sim* sim);

/* Load a flat `key = value` config file. Unknown keys are an error. */
fdx_status fdx_sim_load_config(fdx_sim* sim, const char* path);

/* Set one config field by key, e.g. ("snr_db", "0,10,20") or ("trials", "500"). */
fdx_status fdx_sim_set(fdx_sim* sim, const char* key, const char* value);

/* Run the full sweep on `threads` threads (<=1 means serial; output is
 * identical either way). On success *out owns the results; destroy with
 * fdx_results_destroy. */
fdx_status fdx_sim_run(fdx_sim* sim, int threads, fdx_results** out);

size_t fdx_results_rows(const fdx_results* res);
fdx_status fdx_results_get_row(const fdx_results* res, size_t index, fdx_trial_row* out);

/* Number of rows dropped because of degenerate draws (also reported in the
 * raw CSV footer). */
size_t fdx_results_skipped(const fdx_results* res);

/* Per-trial CSV: header
 *   trial,snr_db,asic_bits,rate_ki,rate_ij,sum_rate,ideal_sum,half_duplex_sum
 * with '#'-prefixed footer lines for skipped rows. */
fdx_status fdx_results_write_raw_csv(const fdx_results* res, const char* path);

/* Aggregated CSV: header
 *   snr_db,asic_bits,mean_sum,stderr_sum,mean_ideal,mean_half_duplex */
fdx_status fdx_results_write_summary_csv(const fdx_results* res, const char* path);

void fdx_results_destroy(fdx_results* res);

#ifdef __cplusplus
}
#endif

#endif /* FDXSIM_H */
