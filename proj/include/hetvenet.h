/* C interface of the hetvenet library.
 *
 * Every function returns an hvn_status; results come back through out
 * parameters. Handles are opaque and freed with their matching _free
 * function (free functions accept NULL). On failure the out parameter is
 * untouched and hvn_last_error() describes the problem for the calling
 * thread until the next library call.
 */
#ifndef HETVENET_H
#define HETVENET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hvn_status {
  HVN_OK = 0,
  HVN_ERR_CONFIG = 1,   /* bad configuration file or values */
  HVN_ERR_IO = 2,       /* filesystem failure */
  HVN_ERR_INVALID = 3,  /* bad argument or violated precondition */
  HVN_ERR_INTERNAL = 4,
} hvn_status;

typedef enum hvn_scheme {
  HVN_SCHEME_MS_MAXMIN = 0,
  HVN_SCHEME_AR_MAXMIN = 1,
  HVN_SCHEME_MS_MAXSUM = 2,
  HVN_SCHEME_AR_MAXSUM = 3,
  HVN_SCHEME_RANDOM = 4,
  HVN_SCHEME_NO_RELAY = 5,
} hvn_scheme;

#define HVN_SCHEME_COUNT 6

typedef struct hvn_config hvn_config;
typedef struct hvn_scenario hvn_scenario;
typedef struct hvn_analysis hvn_analysis;
typedef struct hvn_run hvn_run;
typedef struct hvn_records hvn_records;

/* Message of the last failed call on this thread; empty string if none. */
const char* hvn_last_error(void);

/* Frees strings returned through char** out parameters. */
void hvn_string_free(char* s);

const char* hvn_scheme_name(int scheme);
hvn_status hvn_scheme_from_name(const char* name, int* out);

/* ---- configuration ---- */

hvn_status hvn_config_default(hvn_config** out);
hvn_status hvn_config_load(const char* path, hvn_config** out);
hvn_status hvn_config_parse(const char* text, hvn_config** out);
void hvn_config_free(hvn_config* cfg);

hvn_status hvn_config_set_master_seed(hvn_config* cfg, uint64_t seed);
hvn_status hvn_config_set_output_path(hvn_config* cfg, const char* path);
hvn_status hvn_config_horizon(const hvn_config* cfg, double* out);
/* Copies the configured output path; release with hvn_string_free. */
hvn_status hvn_config_output_path(const hvn_config* cfg, char** out);

/* ---- scenario generation and link analysis ---- */

hvn_status hvn_scenario_generate(const hvn_config* cfg, int n, uint64_t seed,
                                 hvn_scenario** out);
void hvn_scenario_free(hvn_scenario* sc);
hvn_status hvn_scenario_count(const hvn_scenario* sc, int* out);
hvn_status hvn_scenario_vehicle(const hvn_scenario* sc, int index, int* id, double* x,
                                double* y, double* v);

/* Service tables and rate snapshot for one scenario. */
hvn_status hvn_analysis_compute(const hvn_config* cfg, const hvn_scenario* sc,
                                hvn_analysis** out);
void hvn_analysis_free(hvn_analysis* an);
hvn_status hvn_analysis_dump_csv(const hvn_analysis* an, const char* path);

/* ---- single-scenario scheduling ---- */

/* scenario_seed feeds HVN_SCHEME_RANDOM; other schemes ignore it. */
hvn_status hvn_schedule_run(const hvn_config* cfg, const hvn_analysis* an, int scheme,
                            uint64_t scenario_seed, hvn_run** out);
void hvn_run_free(hvn_run* run);

hvn_status hvn_run_scheme(const hvn_run* run, int* out);
hvn_status hvn_run_nf(const hvn_run* run, int* out);
hvn_status hvn_run_pair(const hvn_run* run, int index, int* relay_id, int* fv_id);
hvn_status hvn_run_vehicle_count(const hvn_run* run, int* out);
/* Effective service amounts in bits over the horizon. */
hvn_status hvn_run_bottleneck(const hvn_run* run, double* out);
hvn_status hvn_run_total_service(const hvn_run* run, double* out);
/* Rates in bit/s; the far-vehicle total is over the scheme's own far set. */
hvn_status hvn_run_total_fv_throughput(const hvn_run* run, double* out);
hvn_status hvn_run_min_rate(const hvn_run* run, double* out);
hvn_status hvn_run_jain(const hvn_run* run, double* out);
hvn_status hvn_run_vehicle_rate(const hvn_run* run, int index, double* out);

/* ---- experiment sweep ---- */

hvn_status hvn_experiment_run(const hvn_config* cfg, hvn_records** out);
void hvn_records_free(hvn_records* recs);
hvn_status hvn_records_count(const hvn_records* recs, int* out);
hvn_status hvn_records_write_csv(const hvn_records* recs, const char* path);
hvn_status hvn_records_summary(const hvn_records* recs, char** out);

/* Greedy-versus-exhaustive max-min comparison over `seeds` scenarios of n
 * vehicles, n <= 8. */
hvn_status hvn_oracle_report(const hvn_config* cfg, int n, int seeds, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HETVENET_H */
