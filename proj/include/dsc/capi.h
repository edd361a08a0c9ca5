/*
 * C API for the deletion/substitution channel toolkit.
 *
 * Every function returns a dsc_status; outputs go through pointers. On any
 * failure dsc_last_error_message() carries a human-readable reason for the
 * calling thread. Handles are opaque and must be released with their
 * destroy function.
 */

#ifndef DSC_CAPI_H
#define DSC_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DSC_API __declspec(dllexport)
#else
#define DSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsc_status {
  DSC_OK = 0,
  DSC_ERROR_INVALID_ARGUMENT = 1,
  DSC_ERROR_DOMAIN = 2,
  DSC_ERROR_CAP_EXCEEDED = 3,
  DSC_ERROR_PRECONDITION = 4,
  DSC_ERROR_IO = 5,
  DSC_ERROR_VERIFICATION = 6,
  DSC_ERROR_INTERNAL = 7
} dsc_status;

DSC_API const char* dsc_status_name(dsc_status status);

/* Message for the most recent failure on this thread; empty string if none. */
DSC_API const char* dsc_last_error_message(void);

/* ---- random streams ---- */

/* Counter-based stream; a (seed, stream) pair fully determines the output. */
typedef struct dsc_rng dsc_rng;

DSC_API dsc_status dsc_rng_create(uint64_t seed, uint64_t stream, dsc_rng** out);
DSC_API void dsc_rng_destroy(dsc_rng* rng);
DSC_API dsc_status dsc_rng_next_u64(dsc_rng* rng, uint64_t* out);
DSC_API dsc_status dsc_rng_next_double(dsc_rng* rng, double* out);

/* ---- numeric primitives ---- */

DSC_API dsc_status dsc_binary_entropy(double p, double* out);
DSC_API dsc_status dsc_log2_binomial(uint64_t n, uint64_t k, double* out);
DSC_API dsc_status dsc_exact_binomial(uint32_t n, uint32_t k, uint64_t* out);

/* ---- channel ---- */

/* p_s / (1 - p_d): flip rate of the substitution stage in the
 * delete-then-flip decomposition. */
DSC_API dsc_status dsc_equivalent_substitution_prob(double p_d, double p_s, double* out);

/* Bits are one byte each (0 or 1). out_bits must hold n bytes; *out_len
 * receives the surviving length. kept (capacity n) and flips (capacity n)
 * receive the realized pattern as 1-based positions when non-NULL. */
DSC_API dsc_status dsc_transmit_iid(const uint8_t* in_bits, size_t n, double p_d, double p_s,
                                    dsc_rng* rng, uint8_t* out_bits, size_t* out_len,
                                    uint32_t* kept, uint32_t* flips, size_t* flips_len);
DSC_API dsc_status dsc_transmit_two_stage(const uint8_t* in_bits, size_t n, double p_d,
                                          double p_s, dsc_rng* rng, uint8_t* out_bits,
                                          size_t* out_len, uint32_t* kept, uint32_t* flips,
                                          size_t* flips_len);

/* Uniform draw over all C(n,q_d)*C(n-q_d,q_s) realizations. kept must hold
 * n-q_d entries, flips q_s entries; both are 1-based positions. */
DSC_API dsc_status dsc_sample_fixed_count_pair(uint32_t n, uint32_t q_d, uint32_t q_s,
                                               dsc_rng* rng, uint32_t* kept, uint32_t* flips);

/* Apply a realization: keep the listed input positions in order, then flip
 * the listed output positions. out_bits must hold kept_len bytes. */
DSC_API dsc_status dsc_pattern_apply(const uint8_t* in_bits, size_t n, const uint32_t* kept,
                                     size_t kept_len, const uint32_t* flips, size_t flips_len,
                                     uint8_t* out_bits);

/* ---- bound evaluators ---- */

typedef struct dsc_bound_options {
  int t_variant;     /* 0 = derivation form (leading q_d term), 1 = statement form */
  int chernoff_log;  /* 0 = natural logs inside Chernoff quantities, 1 = base 2 */
  int gamma_variant; /* 0 = single gamma, 1 = per-process gamma */
} dsc_bound_options;

/* All fields in bits; total is exactly the sum of the five terms. */
typedef struct dsc_bound_breakdown {
  double n_minus_qd;
  double minus_log_binom_deletion;
  double minus_log_binom_substitution;
  double log_delta_term;
  double log_alpha;
  double total_log2_codebook;
  long long t;
  double gamma;
  uint64_t q_d_min, q_d_max, q_s_min, q_s_max;
} dsc_bound_breakdown;

DSC_API dsc_status dsc_gallager_lower_bound(double p_d, double p_s, double* out);
DSC_API dsc_status dsc_asymptotic_capacity_estimate(double p_d, double p_s, double* out);
DSC_API dsc_status dsc_confusability_threshold(uint64_t n, uint64_t q_d, uint64_t q_s,
                                               double delta, const dsc_bound_options* options,
                                               long long* out);
DSC_API dsc_status dsc_ambiguity_factor_log2(uint64_t q_d, uint64_t q_s, long long t,
                                             double* out);
DSC_API dsc_status dsc_fixed_count_codebook_bound(uint64_t n, uint64_t q_d, uint64_t q_s,
                                                  double delta,
                                                  const dsc_bound_options* options,
                                                  dsc_bound_breakdown* out);
DSC_API dsc_status dsc_chernoff_gamma(uint64_t n, double p, double delta,
                                      const dsc_bound_options* options, double* out);
DSC_API dsc_status dsc_min_codeword_length(double p_d, double p_s, double delta,
                                           const dsc_bound_options* options, uint64_t* out);
DSC_API dsc_status dsc_random_count_codebook_bound(uint64_t n, double p_d, double p_s,
                                                   double delta,
                                                   const dsc_bound_options* options,
                                                   dsc_bound_breakdown* out);
DSC_API dsc_status dsc_normalized_gap(uint64_t n, double p_d, double p_s, double delta,
                                      const dsc_bound_options* options, double* rate_bound,
                                      double* gap);

/* ---- exact oracles ---- */

/* Exact collision probability of two realizations over a uniform n-bit
 * input, as an exact fraction num/den. */
DSC_API dsc_status dsc_collision_probability_exact(
    uint32_t n, const uint32_t* a_kept, size_t a_kept_len, const uint32_t* a_flips,
    size_t a_flips_len, const uint32_t* b_kept, size_t b_kept_len, const uint32_t* b_flips,
    size_t b_flips_len, uint64_t* num, uint64_t* den);

DSC_API dsc_status dsc_count_confusable(uint32_t n, const uint32_t* kept, size_t kept_len,
                                        const uint32_t* flips, size_t flips_len, uint64_t t,
                                        uint64_t s, uint64_t* out);
DSC_API dsc_status dsc_confusable_count_bound_log2(uint64_t q_d, uint64_t q_s, uint64_t t,
                                                   uint64_t s, double* out);
DSC_API dsc_status dsc_count_ts_bad(uint32_t n, uint32_t q_d, uint32_t q_s, uint64_t t,
                                    uint64_t s, uint64_t* out);

/* Codewords are packed bit 0 = first position; n <= 20. */
DSC_API dsc_status dsc_optimal_guesser_success(const uint64_t* codewords, size_t count,
                                               uint32_t n, uint32_t q_d, uint32_t q_s,
                                               uint64_t* num, uint64_t* den);

/* ---- batch runs (what the CLI drives) ---- */

typedef struct dsc_bounds_sweep_config {
  const double* p_d;
  size_t p_d_count;
  const double* p_s;
  size_t p_s_count;
  const uint64_t* n;
  size_t n_count;
  double delta;
  dsc_bound_options options;
  int jobs;
} dsc_bounds_sweep_config;

DSC_API dsc_status dsc_run_bounds_sweep(const dsc_bounds_sweep_config* config,
                                        const char* csv_path);

typedef struct dsc_verify_config {
  uint32_t collision_max_n, collision_max_q;
  uint32_t confusable_max_n, confusable_max_t, confusable_max_s;
  uint32_t ts_bad_max_n, ts_bad_max_q_d, ts_bad_max_q_s, ts_bad_max_t, ts_bad_max_s;
  uint32_t guesser_codebooks;
  uint64_t sample_limit;
  uint64_t seed;
  int jobs;
  double confusable_bound_adjust_log2; /* test hook, 0 in normal use */
} dsc_verify_config;

/* Defaults matching the standard small-n suite. */
DSC_API void dsc_verify_config_init(dsc_verify_config* config);

/* Runs the verification suite; writes text/CSV reports when paths are
 * non-NULL. Returns DSC_ERROR_VERIFICATION (with *violations set) when any
 * check fails. */
DSC_API dsc_status dsc_run_verify(const dsc_verify_config* config, const char* text_path,
                                  const char* csv_path, uint64_t* violations);

typedef struct dsc_decode_config {
  uint32_t n;
  uint32_t codebook_size;
  uint32_t q_d, q_s;
  uint64_t trials;
  uint64_t seed;
  int jobs;
  dsc_bound_options options; /* for the codebook-ceiling check */
} dsc_decode_config;

typedef struct dsc_decode_summary {
  uint64_t trials, successes, none_consistent;
  double delta_hat, ci_lo, ci_hi;
  double log2_codebook;
  double rhs_log2_codebook; /* +inf when not applicable (q_d or q_s zero) */
  int bound_ok;
  double guesser_rate, guesser_bound, optimal_guesser;
  int guesser_ok;
} dsc_decode_summary;

DSC_API dsc_status dsc_run_decode(const dsc_decode_config* config, const char* summary_path,
                                  const char* trials_csv_path, dsc_decode_summary* out);

typedef struct dsc_concentration_config {
  uint64_t n;
  double p;
  uint64_t trials;
  double delta;
  uint64_t seed;
  int chernoff_log;
  int jobs;
} dsc_concentration_config;

typedef struct dsc_concentration_summary {
  double gamma, bound, empirical, sampling_sigma;
  uint64_t tail_count;
  int pass_vs_bound, pass_vs_delta4, below_min_n;
  uint64_t min_n;
} dsc_concentration_summary;

DSC_API dsc_status dsc_run_concentration(const dsc_concentration_config* config,
                                         const char* report_path,
                                         dsc_concentration_summary* out);

typedef struct dsc_decompose_config {
  uint32_t n;
  const char* p_d_decimal; /* exact decimal, e.g. "0.3" */
  const char* p_s_decimal;
  uint64_t trials;
  uint64_t seed;
  int jobs;
} dsc_decompose_config;

typedef struct dsc_decompose_summary {
  int exact_checked, exact_equal;
  uint64_t inputs_checked;
  double chi_square, p_value;
  uint64_t dof;
  int sampled_pass;
} dsc_decompose_summary;

DSC_API dsc_status dsc_run_decompose(const dsc_decompose_config* config,
                                     const char* report_path, dsc_decompose_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* DSC_CAPI_H */
