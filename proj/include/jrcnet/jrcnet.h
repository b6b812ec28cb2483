#ifndef JRCNET_JRCNET_H
#define JRCNET_JRCNET_H

/*
 * C interface to the jrcnet planning toolkit.
 *
 * A jrc_scenario holds one full parameter set (system, target, clutter,
 * operating point kappa / epsilon, simulation half extent). Every call returns
 * a jrc_status; on failure jrc_last_error() describes the problem for the
 * calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JRC_BUILDING_LIBRARY)
#    define JRC_API __declspec(dllexport)
#  else
#    define JRC_API __declspec(dllimport)
#  endif
#else
#  define JRC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jrc_status {
  JRC_OK = 0,
  JRC_E_INVALID_ARGUMENT = 1,
  JRC_E_CONFIG = 2,
  JRC_E_NUMERICAL = 3,
  JRC_E_VALIDATION = 4,
  JRC_E_INTERNAL = 5
} jrc_status;

typedef enum jrc_branch {
  JRC_BRANCH_APPROX = 0, /* all in-cell clutter at the target's path loss */
  JRC_BRANCH_EXACT = 1   /* per-point path loss over the resolution cell */
} jrc_branch;

typedef struct jrc_scenario jrc_scenario;

typedef struct jrc_coverage {
  double p_dc;
  double snr_term;
  double scr_term;
  double log_snr_term;
  double log_scr_term;
  double kappa;
  double epsilon;
} jrc_coverage;

typedef struct jrc_throughput {
  double upsilon;
  double eta;
  jrc_coverage coverage;
} jrc_throughput;

typedef struct jrc_estimate {
  double mean;
  double ci95_low;
  double ci95_high;
  int64_t n_trials;
  int64_t successes;
  uint64_t seed;
} jrc_estimate;

typedef struct jrc_duty_solution {
  double epsilon_star;
  double decay_a;
  double amplitude_A0;
  double upsilon_at_star;
  double epsilon_numeric;
  double upsilon_numeric;
} jrc_duty_solution;

typedef struct jrc_bandwidth_solution {
  double closed_form;
  double coverage_argmax;
  double throughput_argmax;
} jrc_bandwidth_solution;

typedef struct jrc_pri_solution {
  double closed_form;
  double numeric_argmax;
  double upsilon_at_optimum;
} jrc_pri_solution;

typedef struct jrc_curve_info {
  double u_max;
  int tapered;
  double max_adjustment;
  int64_t moment_evaluations;
} jrc_curve_info;

JRC_API const char* jrc_version(void);
JRC_API const char* jrc_rng_name(void);
JRC_API const char* jrc_last_error(void);

/* Scenario handles. */
JRC_API jrc_status jrc_scenario_create(jrc_scenario** out);
JRC_API jrc_status jrc_scenario_load(const char* path, jrc_scenario** out);
JRC_API jrc_status jrc_scenario_parse(const char* text, jrc_scenario** out);
JRC_API jrc_status jrc_scenario_clone(const jrc_scenario* s, jrc_scenario** out);
JRC_API void jrc_scenario_destroy(jrc_scenario* s);
JRC_API jrc_status jrc_scenario_set(jrc_scenario* s, const char* key, const char* value);
JRC_API jrc_status jrc_scenario_set_double(jrc_scenario* s, const char* key, double value);
JRC_API jrc_status jrc_scenario_get_double(const jrc_scenario* s, const char* key, double* out);
JRC_API jrc_status jrc_scenario_validate(const jrc_scenario* s);
/* Writes the scenario as key = value text. *needed receives the length
 * including the terminating NUL; buf may be NULL when cap is 0. */
JRC_API jrc_status jrc_scenario_format(const jrc_scenario* s, char* buf, size_t cap,
                                       size_t* needed);

JRC_API size_t jrc_parameter_count(void);
JRC_API const char* jrc_parameter_name(size_t index);

/* Analytic results at the scenario's kappa and epsilon. */
JRC_API jrc_status jrc_coverage_at(const jrc_scenario* s, jrc_coverage* out);
JRC_API jrc_status jrc_monostatic_coverage(const jrc_scenario* s, jrc_coverage* out);
JRC_API jrc_status jrc_throughput_at(const jrc_scenario* s, int exact_geometry,
                                     jrc_throughput* out);

/* Optimizers. */
JRC_API jrc_status jrc_solve_duty(double decay_a, double amplitude_A0, jrc_duty_solution* out);
JRC_API jrc_status jrc_optimal_duty(const jrc_scenario* s, jrc_duty_solution* out);
JRC_API jrc_status jrc_optimal_bandwidth(const jrc_scenario* s, jrc_bandwidth_solution* out);
JRC_API jrc_status jrc_optimal_pri(const jrc_scenario* s, jrc_pri_solution* out);
JRC_API jrc_status jrc_throughput_vs_pri(const jrc_scenario* s, double t_pri, double* out);
JRC_API jrc_status jrc_coverage_at_max_range(const jrc_scenario* s, jrc_coverage* out);

/* Monte Carlo. threads <= 0 selects the hardware concurrency. */
JRC_API jrc_status jrc_estimate_pdc(const jrc_scenario* s, int64_t n_trials, uint64_t seed,
                                    int threads, jrc_estimate* out);
JRC_API jrc_status jrc_estimate_throughput(const jrc_scenario* s, int64_t n_trials,
                                           uint64_t seed, int threads, jrc_estimate* out);

/* Meta-distribution F(z); z strictly increasing in (0, 1), F_out of length n. */
JRC_API jrc_status jrc_metadist(const jrc_scenario* s, jrc_branch branch, const double* z,
                                size_t n, int threads, double* F_out, jrc_curve_info* info);
JRC_API jrc_status jrc_metadist_empirical(const jrc_scenario* s, const double* z, size_t n,
                                          int64_t n_samples, uint64_t seed, int threads,
                                          double* F_out);
JRC_API double jrc_reliability_ceiling(const double* z, const double* F, size_t n);

#ifdef __cplusplus
}
#endif

#endif /* JRCNET_JRCNET_H */
