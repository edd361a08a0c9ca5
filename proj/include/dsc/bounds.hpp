#ifndef DSC_BOUNDS_HPP
#define DSC_BOUNDS_HPP

#include <cstdint>
#include <iosfwd>

#include "dsc/channel.hpp"

namespace dsc {

/// The confusability threshold t appears in two forms: the derivation needs
/// the leading q_d summand, the headline statement omits it. Default is the
/// derivation form.
enum class TFormulaVariant { proof, statement };

/// Logs inside the Chernoff-derived quantities (gamma, minimum n) invert an
/// e-exponential tail bound, so they default to natural; all other logs are
/// base 2. base2 switches the Chernoff logs as well.
enum class ChernoffLogBase { natural, base2 };

/// The random-count bound uses one gamma (derived from p_d) for both count
/// intervals, as stated. per_process derives a second gamma from the
/// substitution mean for the substitution interval.
enum class GammaVariant { single, per_process };

struct BoundOptions {
  TFormulaVariant t_variant = TFormulaVariant::proof;
  ChernoffLogBase chernoff_log = ChernoffLogBase::natural;
  GammaVariant gamma_variant = GammaVariant::single;
};

/// Per-term decomposition of a codebook-size ceiling, everything in bits.
/// total_log2_codebook is exactly the sum of the five terms.
struct BoundBreakdown {
  std::uint64_t n = 0;
  double delta = 0.0;

  double n_minus_qd = 0.0;
  double minus_log_binom_deletion = 0.0;
  double minus_log_binom_substitution = 0.0;
  double log_delta_term = 0.0;  // log2(2/delta) or log2(4/delta)
  double log_alpha = 0.0;
  double total_log2_codebook = 0.0;

  long long t = 0;
  double gamma = 0.0;
  std::uint64_t q_d_min = 0, q_d_max = 0, q_s_min = 0, q_s_max = 0;
};

/// Achievable-rate floor 1 + p_d log2 p_d + p_s log2 p_s + p_c log2 p_c.
double gallager_lower_bound(const ChannelParams& params);

/// 1 - H(p_d) - H(p_s): the value both bounds approach for small p.
double asymptotic_capacity_estimate(const ChannelParams& params);

/// ceil([q_d +] 3 q_d log2(n e/q_d) + 3 q_s log2((n-q_d) e/q_s)
///      + log2(delta_scale/delta)); requires q_d, q_s >= 1.
long long confusability_threshold(std::uint64_t n, std::uint64_t q_d, std::uint64_t q_s,
                                  double delta, TFormulaVariant variant = TFormulaVariant::proof,
                                  double delta_scale = 2.0);

/// log2 of t^2 (2e)^(t-1) (5t/q_s)^q_s (5t/q_d)^(3q_d+1), evaluated term by
/// term in the log domain. q_s = 0 contributes nothing (limit value 1);
/// q_d = 0 is a domain error.
double ambiguity_factor_log2(std::uint64_t q_d, std::uint64_t q_s, long long t);

/// Codebook ceiling for the fixed-count channel:
/// log2 N <= n - q_d - log2 C(n,q_d) - log2 C(n-q_d,q_s) + log2(2/delta) + log2 alpha.
BoundBreakdown fixed_count_codebook_bound(std::uint64_t n, std::uint64_t q_d, std::uint64_t q_s,
                                          double delta, const BoundOptions& options = {});

/// Relative half-width gamma = sqrt(3 log(8/delta) / (n p)).
double chernoff_gamma(std::uint64_t n, double p, double delta,
                      ChernoffLogBase log_base = ChernoffLogBase::natural);

/// ceil(12 log(8/delta) / min{p_d, p_s}); the smallest n for which the
/// random-count bound's gamma stays <= 1/2.
std::uint64_t min_codeword_length(const ChannelParams& params, double delta,
                                  ChernoffLogBase log_base = ChernoffLogBase::natural);

/// Codebook ceiling for random counts: concentration intervals around the
/// count means, worst-case threshold and ambiguity factor over the
/// intervals. Throws PreconditionError naming the required minimum when n
/// is too small.
BoundBreakdown random_count_codebook_bound(std::uint64_t n, const ChannelParams& params,
                                           double delta, const BoundOptions& options = {});

struct RateGap {
  double rate_bound;  // total_log2_codebook / n
  double gap;         // rate_bound - asymptotic_capacity_estimate
  BoundBreakdown breakdown;
};

RateGap normalized_gap(std::uint64_t n, const ChannelParams& params, double delta,
                       const BoundOptions& options = {});

/// Header for the sweep CSV; one column per reported quantity.
extern const char kBoundsCsvHeader[];

/// One sweep row. On evaluation errors the row keeps the inputs and the two
/// closed forms that never fail, leaves the rest empty, and carries the
/// error text in the status column.
void write_bounds_csv_row(std::ostream& os, std::uint64_t n, const ChannelParams& params,
                          double delta, const BoundOptions& options);

}  // namespace dsc

#endif
