/* C interface to the ostat library: exact laws, medians and quantiles of
 * order statistics of independent non-identically distributed non-negative
 * variables, plus grid certificates for the regularity condition and the
 * median/quantile comparison bounds.
 *
 * Conventions:
 *  - every function returns an ost_status; results go through out-pointers;
 *  - on failure, ost_last_error() describes the problem (thread-local);
 *  - objects are opaque handles released with the matching *_free function;
 *  - strings returned through char** are released with ost_string_free.
 */
#ifndef OSTAT_OSTAT_H
#define OSTAT_OSTAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OSTAT_BUILDING_LIBRARY)
#    define OSTAT_API __declspec(dllexport)
#  else
#    define OSTAT_API __declspec(dllimport)
#  endif
#else
#  define OSTAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ost_status {
    OST_OK = 0,
    OST_ERR_DOMAIN = 1,       /* argument outside the operation's domain */
    OST_ERR_RANGE = 2,        /* search left the representable range */
    OST_ERR_NOT_FOUND = 3,
    OST_ERR_RESOURCE = 4,     /* request too expensive (e.g. 2^n enumeration) */
    OST_ERR_PARSE = 5,        /* malformed model spec */
    OST_ERR_PRECONDITION = 6, /* regularity precondition failed */
    OST_ERR_NULL = 7,         /* null handle or out-pointer */
    OST_ERR_INTERNAL = 99
} ost_status;

typedef enum ost_format { OST_FORMAT_JSON = 0, OST_FORMAT_CSV = 1 } ost_format;

OSTAT_API const char* ost_last_error(void);
OSTAT_API const char* ost_version(void);
OSTAT_API void ost_string_free(char* s);

/* ---- distributions ---------------------------------------------------- */

typedef struct ost_dist ost_dist;

OSTAT_API ost_status ost_dist_uniform01(double scale, ost_dist** out);
OSTAT_API ost_status ost_dist_pareto(double p, double scale, ost_dist** out);
OSTAT_API ost_status ost_dist_exponential(double rate, double scale, ost_dist** out);
OSTAT_API ost_status ost_dist_half_gaussian(double sigma, double scale, ost_dist** out);
OSTAT_API ost_status ost_dist_piecewise_linear(const double* t, const double* F, size_t count,
                                               double scale, ost_dist** out);
OSTAT_API ost_status ost_dist_atomic(const double* values, const double* weights, size_t count,
                                     double scale, ost_dist** out);
/* One component object in model-spec syntax, e.g.
 * {"family":"pareto","params":{"p":2},"scale":3}. */
OSTAT_API ost_status ost_dist_from_json(const char* json, ost_dist** out);
OSTAT_API void ost_dist_free(ost_dist* d);

OSTAT_API ost_status ost_dist_cdf(const ost_dist* d, double t, double* out);
OSTAT_API ost_status ost_dist_cdf_left_limit(const ost_dist* d, double t, double* out);
OSTAT_API ost_status ost_dist_quantile(const ost_dist* d, double r, double* out);
/* Short human-readable description; release with ost_string_free. */
OSTAT_API ost_status ost_dist_describe(const ost_dist* d, char** out);

/* ---- order-statistic models ------------------------------------------ */

typedef struct ost_model ost_model;

/* Blocks of `repeats[i]` copies of `components[i]`; repeats may be NULL. */
OSTAT_API ost_status ost_model_create(const ost_dist* const* components, const size_t* repeats,
                                      size_t count, size_t k, ost_model** out);
OSTAT_API ost_status ost_model_from_json(const char* json, ost_model** out);
OSTAT_API ost_status ost_model_to_json(const ost_model* m, char** out);
OSTAT_API ost_status ost_model_scaled(const ost_model* m, double c, ost_model** out);
OSTAT_API ost_status ost_model_size(const ost_model* m, size_t* n, size_t* k);
OSTAT_API void ost_model_free(ost_model* m);

OSTAT_API ost_status ost_kmin_cdf(const ost_model* m, double t, double* out);
OSTAT_API ost_status ost_kmin_strict_cdf(const ost_model* m, double t, double* out);
OSTAT_API ost_status ost_kmin_quantile(const ost_model* m, double r, double* out);
OSTAT_API ost_status ost_kmin_median(const ost_model* m, double* out);
/* Reads the model's rank as "k-th largest". */
OSTAT_API ost_status ost_kmax_cdf(const ost_model* m, double t, double* out);
/* q_F((k - 1/2)/n) for the averaged cdf. */
OSTAT_API ost_status ost_averaged_quantile(const ost_model* m, double* out);

/* ---- Poisson-binomial ------------------------------------------------- */

/* out must hold count + 1 values. */
OSTAT_API ost_status ost_pbin_pmf(const double* p, size_t count, double* out);
OSTAT_API ost_status ost_pbin_tail_at_least(const double* p, size_t count, size_t k, double* out);
OSTAT_API ost_status ost_pbin_brute_force_tail(const double* p, size_t count, size_t k, double* out);
OSTAT_API ost_status ost_pbin_chebyshev(const double* p, size_t count, double t, double* exact,
                                        double* bound);

/* ---- regularity certificates ----------------------------------------- */

typedef struct ost_grid {
    double t_min;
    double t_max;
    int points_per_decade;
} ost_grid;

/* [1e-6, 1e6] with 64 points per decade. */
OSTAT_API ost_grid ost_grid_default(void);

typedef enum ost_inequality {
    OST_INEQ_CONDITION = 0,
    OST_INEQ_MEASURE_FORM = 1,
    OST_INEQ_WEAK = 2,
    OST_INEQ_GROWTH_ODDS = 3,
    OST_INEQ_GROWTH_TAIL = 4
} ost_inequality;

typedef struct ost_certificate ost_certificate;

typedef struct ost_certificate_info {
    ost_inequality inequality;
    double K;
    ost_grid grid;
    int ell;
    double gamma;
    int passed;
    double margin;
    int has_witness;
    double witness_t;
    double witness_lhs;
    double witness_rhs;
    size_t evaluated;
    size_t point_count;
} ost_certificate_info;

typedef struct ost_grid_point {
    double t;
    double lhs;
    double rhs;
    double margin;
    int applicable;
} ost_grid_point;

/* grid may be NULL for the default grid; threads = 0 means 1. */
OSTAT_API ost_status ost_check_condition(const ost_dist* d, double K, const ost_grid* grid,
                                         unsigned threads, ost_certificate** out);
OSTAT_API ost_status ost_check_measure_form(const ost_dist* d, double K, const ost_grid* grid,
                                            unsigned threads, ost_certificate** out);
OSTAT_API ost_status ost_check_weak_condition(const ost_dist* d, double K, const ost_grid* grid,
                                              unsigned threads, ost_certificate** out);
OSTAT_API ost_status ost_check_logconcave_k3(const ost_dist* d, const ost_grid* grid,
                                             unsigned threads, ost_certificate** out);
OSTAT_API ost_status ost_certificate_info_get(const ost_certificate* c, ost_certificate_info* out);
OSTAT_API ost_status ost_certificate_point(const ost_certificate* c, size_t i, ost_grid_point* out);
OSTAT_API ost_status ost_certificate_write(const ost_certificate* c, ost_format format, char** out);
OSTAT_API void ost_certificate_free(ost_certificate* c);

typedef struct ost_min_k_result {
    int found;
    double K;
    int checks;
    int monotonicity_assumed;
} ost_min_k_result;

OSTAT_API ost_status ost_find_min_k(const ost_dist* d, const ost_grid* grid, double K_lo,
                                    double K_hi, double tol, ost_min_k_result* out);

typedef struct ost_growth_report ost_growth_report;

/* On OST_ERR_PRECONDITION, *failed (if non-NULL) receives the failing
 * condition certificate. */
OSTAT_API ost_status ost_check_lemma_growth(const ost_dist* d, double K, int ell, double gamma,
                                            const ost_grid* grid, unsigned threads,
                                            ost_growth_report** out, ost_certificate** failed);
OSTAT_API ost_status ost_growth_passed(const ost_growth_report* r, int* passed);
/* Borrowed: index 0 is the odds form, 1 the tail form. Valid while r lives. */
OSTAT_API ost_status ost_growth_certificate(const ost_growth_report* r, int which,
                                            const ost_certificate** out);
OSTAT_API ost_status ost_growth_write(const ost_growth_report* r, char** json);
OSTAT_API void ost_growth_free(ost_growth_report* r);

/* ---- median/quantile comparison --------------------------------------- */

typedef enum ost_theorem_verdict {
    OST_VERDICT_PASS = 0,
    OST_VERDICT_FAIL = 1,
    OST_VERDICT_PRECONDITION_FAILED = 2
} ost_theorem_verdict;

typedef struct ost_theorem_info {
    double K;
    size_t n;
    size_t k;
    double q;
    double med;
    double ratio;
    double lower;
    double upper;
    int sandwich_holds;
    double prob_below_lower;
    double prob_at_most_upper;
    int one_sided_holds;
    int components_pass;
    ost_theorem_verdict verdict;
    size_t component_count;
} ost_theorem_info;

typedef struct ost_theorem_report ost_theorem_report;

OSTAT_API ost_status ost_verify_theorem(const ost_model* m, double K, const ost_grid* grid,
                                        unsigned threads, ost_theorem_report** out);
OSTAT_API ost_status ost_theorem_info_get(const ost_theorem_report* r, ost_theorem_info* out);
/* Borrowed certificate of component block i. */
OSTAT_API ost_status ost_theorem_component(const ost_theorem_report* r, size_t i,
                                           const ost_certificate** out);
OSTAT_API ost_status ost_theorem_write(const ost_theorem_report* r, char** json);
OSTAT_API void ost_theorem_free(ost_theorem_report* r);

typedef enum ost_tail_side { OST_TAIL_LOWER = 0, OST_TAIL_UPPER = 1, OST_TAIL_BOTH = 2 } ost_tail_side;

typedef struct ost_tail_row {
    double t;
    ost_tail_side side;
    double threshold;
    double exact_prob;
    double bound;
    int vacuous;
    int passed;
} ost_tail_row;

typedef struct ost_tail_info {
    double K;
    double q;
    int components_pass;
    int rows_pass;
    size_t row_count;
} ost_tail_info;

typedef struct ost_tail_report ost_tail_report;

/* t may be NULL (count 0) for the default grids {K^-(5+j)} / {K^(5+j)},
 * j = 1..10. bound_scale multiplies every bound (1 in normal use). */
OSTAT_API ost_status ost_verify_tails(const ost_model* m, double K, ost_tail_side side,
                                      const double* t, size_t count, const ost_grid* grid,
                                      double bound_scale, unsigned threads, ost_tail_report** out);
OSTAT_API ost_status ost_tail_info_get(const ost_tail_report* r, ost_tail_info* out);
OSTAT_API ost_status ost_tail_row_get(const ost_tail_report* r, size_t i, ost_tail_row* out);
OSTAT_API ost_status ost_tail_write(const ost_tail_report* r, ost_format format, char** out);
OSTAT_API void ost_tail_free(ost_tail_report* r);

/* ---- Monte Carlo ------------------------------------------------------ */

typedef struct ost_sim_result {
    size_t replicates;
    double estimate;
    double ci_low;
    double ci_high;
    size_t rank_low;
    size_t rank_high;
    double ci_level;
    uint64_t seed;
    const char* generator; /* static string */
    double elapsed_seconds;
} ost_sim_result;

OSTAT_API ost_status ost_sample(const ost_dist* d, double u, double* out);
/* Reorders values in place. */
OSTAT_API ost_status ost_kth_smallest(double* values, size_t count, size_t k, double* out);
OSTAT_API ost_status ost_simulate_median(const ost_model* m, size_t replicates, uint64_t seed,
                                         double ci_level, unsigned threads, ost_sim_result* out);
OSTAT_API ost_status ost_sim_result_write(const ost_sim_result* r, char** json);

/* ---- oracles ---------------------------------------------------------- */

typedef struct ost_oracle_report {
    uint64_t seed;
    size_t vectors;
    double max_tail_discrepancy;
    double max_pmf_discrepancy;
    size_t beta_cases;
    double max_beta_discrepancy;
    int passed;
} ost_oracle_report;

OSTAT_API ost_status ost_run_oracles(uint64_t seed, size_t vectors, ost_oracle_report* out);

#ifdef __cplusplus
}
#endif

#endif /* OSTAT_OSTAT_H */
