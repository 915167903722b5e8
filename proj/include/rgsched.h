/* rgsched — preemptive stochastic scheduling with predicted job size
 * distributions: Gittins index priority schedules, the alpha-robust variant,
 * exact expected-cost evaluation and the alpha-closeness error measure.
 *
 * C interface to the shared library. All functions return an rg_status code;
 * on failure rg_last_error() holds a message for the calling thread. Strings
 * produced by the library must be released with rg_string_free(), handles
 * with their matching *_free().
 *
 * Exact rational values cross this boundary as canonical "num/den" strings;
 * inputs accept decimal strings ("0.1") as well and are parsed exactly.
 */
#ifndef RGSCHED_H
#define RGSCHED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rg_instance rg_instance;
typedef struct rg_schedule rg_schedule;

enum rg_status {
  RG_OK = 0,
  RG_ERR_INVALID_PARAMS = 1,
  RG_ERR_PARSE = 2,
  RG_ERR_INVALID_DISTRIBUTION = 3,
  RG_ERR_INVALID_ALPHA = 4,
  RG_ERR_CONDITION_ON_ZERO_EVENT = 5,
  RG_ERR_NOT_CLOSE_FOR_ANY_ALPHA = 6,
  RG_ERR_UNSUPPORTED_PAIR = 7,
  RG_ERR_SHIFT_OUT_OF_RANGE = 8,
  RG_ERR_MASS_NOT_NORMALIZED = 9,
  RG_ERR_GENERATION_FAILED = 10,
  RG_ERR_ORDER_INVERSION = 11,
  RG_ERR_INCOMPLETE_SCHEDULE = 12,
  RG_ERR_SCHEDULE_DOES_NOT_COVER = 13,
  RG_ERR_STATE_SPACE_TOO_LARGE = 14,
  RG_ERR_INTERNAL = 15,
};

const char* rg_version(void);
const char* rg_status_name(int status);
/* Message for the most recent failing call on this thread. */
const char* rg_last_error(void);
void rg_string_free(char* s);

/* --- instances ---------------------------------------------------------- */

/* {"jobs": [{"atoms": [["3/2", "1/2"], ["4", "1/2"]]}, ...]} */
int rg_instance_from_json(const char* json, rg_instance** out);
int rg_instance_to_json(const rg_instance* inst, char** out_json);
int rg_instance_job_count(const rg_instance* inst, size_t* out);
void rg_instance_free(rg_instance* inst);

/* --- alpha-closeness ----------------------------------------------------- */

/* out_close = 1 iff every job pair is alpha-close. */
int rg_check_close(const rg_instance* a, const rg_instance* b, const char* alpha,
                   int* out_close);
/* Smallest feasible alpha across all job pairs, within tol (a positive
 * decimal or "num/den" string, parsed exactly). */
int rg_min_alpha(const rg_instance* a, const rg_instance* b, const char* tol,
                 double* out_alpha);

/* --- quanta and schedules ------------------------------------------------ */

/* Per-job quanta as (offset, length, rank) triples. */
int rg_quanta_json(const rg_instance* inst, char** out_json);
/* The global priority order over all quanta. */
int rg_order_json(const rg_instance* inst, char** out_json);

/* policy is "gipp" or "rg"; alpha (>= 1) is required for "rg" and ignored
 * otherwise (may be NULL). */
int rg_schedule_build(const rg_instance* inst, const char* policy, const char* alpha,
                      rg_schedule** out);
int rg_schedule_from_json(const char* json, rg_schedule** out);
int rg_schedule_to_json(const rg_schedule* s, char** out_json);
void rg_schedule_free(rg_schedule* s);

/* Runs the schedule against one realized size per job
 * ({"sizes": [...]}). fallback != 0 appends run-to-completion entries for
 * unfinished jobs instead of failing. */
int rg_execute_json(const rg_schedule* s, const char* realization_json, int fallback,
                    char** out_json);

/* --- expected cost ------------------------------------------------------- */

/* method: "closed" (exact closed form), "enum" (exact product-support
 * enumeration), or "mc" (seeded Monte Carlo; `samples` draws). `cap`
 * overrides the oracle size limits when nonzero (the RGSCHED_MAX_STATES
 * environment variable overrides the defaults as well). Emits a cost report:
 * {"method", "value", "value_decimal", "stderr", "runtime_ms", ...}. */
int rg_evaluate_json(const rg_schedule* s, const rg_instance* truth, const char* method,
                     uint64_t samples, uint64_t seed, uint64_t cap, char** out_json);

/* Optimal expected total completion time (exact DP over support points). */
int rg_opt_json(const rg_instance* inst, uint64_t cap, char** out_json);

/* --- generators ----------------------------------------------------------- */

int rg_gen_lower_bound(uint32_t n, const char* eps, rg_instance** out_truth,
                       rg_instance** out_predicted);
int rg_gen_random(uint32_t n, uint32_t max_atoms, uint32_t size_cap, uint64_t seed,
                  rg_instance** out);
int rg_gen_close_pair(uint32_t n, const char* alpha, uint32_t max_atoms,
                      uint32_t size_cap, uint64_t seed, rg_instance** out_truth,
                      rg_instance** out_predicted);

/* --- experiments ---------------------------------------------------------- */

/* Brittleness gap: for each n, the exact costs of GIPP with mispredicted vs.
 * true quanta on the lower-bound family, as a JSON report. */
int rg_gap_experiment(const uint32_t* ns, size_t ns_len, const char* eps,
                      char** out_report_json);

/* Robustness: per alpha (exact rational strings) and trial, the four costs of
 * the RG/GIPP chain on random alpha-close pairs with exact bound checks. */
int rg_robust_experiment(uint32_t trials, const char* const* alphas, size_t alphas_len,
                         uint32_t jobs, uint32_t max_atoms, uint32_t size_cap,
                         uint64_t seed, char** out_report_json);

/* Renders a gap or robustness report (detected by its "kind" field) as CSV
 * with the given decimal precision. */
int rg_report_csv(const char* report_json, int precision, char** out_csv);

/* violations count of a robustness report; 0 for gap reports. */
int rg_report_violations(const char* report_json, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* RGSCHED_H */
