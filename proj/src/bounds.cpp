#include "dsc/bounds.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"
#include "dsc/numerics.hpp"

namespace dsc {

namespace {

constexpr double kE = 2.718281828459045235;

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double chernoff_log(double x, ChernoffLogBase base) {
  return base == ChernoffLogBase::natural ? std::log(x) : std::log2(x);
}

}  // namespace

double gallager_lower_bound(const ChannelParams& params) {
  return 1.0 + xlog2x(params.p_d()) + xlog2x(params.p_s()) + xlog2x(params.p_correct());
}

double asymptotic_capacity_estimate(const ChannelParams& params) {
  return 1.0 - binary_entropy(params.p_d()) - binary_entropy(params.p_s());
}

long long confusability_threshold(std::uint64_t n, std::uint64_t q_d, std::uint64_t q_s,
                                  double delta, TFormulaVariant variant, double delta_scale) {
  if (q_d == 0 || q_s == 0)
    throw std::domain_error("confusability_threshold: q_d and q_s must be >= 1");
  if (q_d > n || q_s > n - q_d)
    throw std::domain_error("confusability_threshold: counts exceed the codeword length");
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::domain_error("confusability_threshold: delta must be in (0,1]");
  const double nd = static_cast<double>(n);
  const double qd = static_cast<double>(q_d);
  const double qs = static_cast<double>(q_s);
  double value = 3.0 * qd * std::log2(nd * kE / qd) +
                 3.0 * qs * std::log2((nd - qd) * kE / qs) + std::log2(delta_scale / delta);
  if (variant == TFormulaVariant::proof) value += qd;
  return static_cast<long long>(std::ceil(value));
}

double ambiguity_factor_log2(std::uint64_t q_d, std::uint64_t q_s, long long t) {
  if (q_d == 0) throw std::domain_error("ambiguity_factor_log2: q_d must be >= 1");
  if (t < 1) throw std::domain_error("ambiguity_factor_log2: t must be >= 1");
  const double td = static_cast<double>(t);
  double value = 2.0 * std::log2(td) + (td - 1.0) * std::log2(2.0 * kE) +
                 (3.0 * static_cast<double>(q_d) + 1.0) *
                     std::log2(5.0 * td / static_cast<double>(q_d));
  if (q_s > 0)
    value += static_cast<double>(q_s) * std::log2(5.0 * td / static_cast<double>(q_s));
  return value;
}

BoundBreakdown fixed_count_codebook_bound(std::uint64_t n, std::uint64_t q_d, std::uint64_t q_s,
                                          double delta, const BoundOptions& options) {
  if (q_d == 0 || q_s == 0)
    throw std::domain_error("fixed_count_codebook_bound: q_d and q_s must be >= 1");
  BoundBreakdown b;
  b.n = n;
  b.delta = delta;
  b.t = confusability_threshold(n, q_d, q_s, delta, options.t_variant, 2.0);
  b.n_minus_qd = static_cast<double>(n - q_d);
  b.minus_log_binom_deletion = -log2_binomial(n, q_d);
  b.minus_log_binom_substitution = -log2_binomial(n - q_d, q_s);
  b.log_delta_term = std::log2(2.0 / delta);
  b.log_alpha = ambiguity_factor_log2(q_d, q_s, b.t);
  b.total_log2_codebook = b.n_minus_qd + b.minus_log_binom_deletion +
                          b.minus_log_binom_substitution + b.log_delta_term + b.log_alpha;
  b.q_d_min = b.q_d_max = q_d;
  b.q_s_min = b.q_s_max = q_s;
  return b;
}

double chernoff_gamma(std::uint64_t n, double p, double delta, ChernoffLogBase log_base) {
  if (!(p > 0.0) || n == 0) throw std::domain_error("chernoff_gamma: n*p must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("chernoff_gamma: delta must be in (0,1)");
  return std::sqrt(3.0 * chernoff_log(8.0 / delta, log_base) / (static_cast<double>(n) * p));
}

std::uint64_t min_codeword_length(const ChannelParams& params, double delta,
                                  ChernoffLogBase log_base) {
  if (!(params.p_d() > 0.0) || !(params.p_s() > 0.0))
    throw std::domain_error("min_codeword_length: p_d and p_s must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("min_codeword_length: delta must be in (0,1)");
  // (1 - p_d) * p_s' collapses to p_s exactly
  const double p_min = std::min(params.p_d(), params.p_s());
  return static_cast<std::uint64_t>(std::ceil(12.0 * chernoff_log(8.0 / delta, log_base) / p_min));
}

BoundBreakdown random_count_codebook_bound(std::uint64_t n, const ChannelParams& params,
                                           double delta, const BoundOptions& options) {
  const std::uint64_t n_min = min_codeword_length(params, delta, options.chernoff_log);
  if (n < n_min) {
    std::ostringstream msg;
    msg << "random_count_codebook_bound: n=" << n << " is below the required minimum " << n_min;
    throw PreconditionError(msg.str(), n_min);
  }

  const double mu_d = static_cast<double>(n) * params.p_d();
  const double mu_s = static_cast<double>(n) * params.p_s();  // n (1-p_d) p_s'
  const double gamma_d = chernoff_gamma(n, params.p_d(), delta, options.chernoff_log);
  const double gamma_s = options.gamma_variant == GammaVariant::per_process
                             ? chernoff_gamma(n, params.p_s(), delta, options.chernoff_log)
                             : gamma_d;

  BoundBreakdown b;
  b.n = n;
  b.delta = delta;
  b.gamma = gamma_d;
  // interval endpoints floor/ceil outward, which only widens the interval
  b.q_d_min = static_cast<std::uint64_t>(std::floor((1.0 - gamma_d) * mu_d));
  b.q_d_max = static_cast<std::uint64_t>(std::ceil((1.0 + gamma_d) * mu_d));
  b.q_s_min = static_cast<std::uint64_t>(std::floor((1.0 - gamma_s) * mu_s));
  b.q_s_max = static_cast<std::uint64_t>(std::ceil((1.0 + gamma_s) * mu_s));

  if (b.q_d_max > n || b.q_s_max > n - b.q_d_max)
    throw std::domain_error(
        "random_count_codebook_bound: count intervals exceed the codeword length");

  b.t = confusability_threshold(n, b.q_d_max, b.q_s_max, delta, TFormulaVariant::proof, 4.0);
  b.n_minus_qd = static_cast<double>(n - b.q_d_min);
  b.minus_log_binom_deletion = -log2_binomial(n, b.q_d_min);
  b.minus_log_binom_substitution = -log2_binomial(n - b.q_d_max, b.q_s_min);
  b.log_delta_term = std::log2(4.0 / delta);
  b.log_alpha = ambiguity_factor_log2(b.q_d_max, b.q_s_max, b.t);
  b.total_log2_codebook = b.n_minus_qd + b.minus_log_binom_deletion +
                          b.minus_log_binom_substitution + b.log_delta_term + b.log_alpha;
  return b;
}

RateGap normalized_gap(std::uint64_t n, const ChannelParams& params, double delta,
                       const BoundOptions& options) {
  RateGap out;
  out.breakdown = random_count_codebook_bound(n, params, delta, options);
  out.rate_bound = out.breakdown.total_log2_codebook / static_cast<double>(n);
  out.gap = out.rate_bound - asymptotic_capacity_estimate(params);
  return out;
}

const char kBoundsCsvHeader[] =
    "n,pd,ps,delta,gamma,qd_min,qd_max,qs_min,qs_max,t,log_alpha,total_log2N,rate_bound,"
    "gallager_lb,asymptotic,gap,status";

void write_bounds_csv_row(std::ostream& os, std::uint64_t n, const ChannelParams& params,
                          double delta, const BoundOptions& options) {
  os << n << "," << format_double(params.p_d()) << "," << format_double(params.p_s()) << ","
     << format_double(delta) << ",";
  const double gallager = gallager_lower_bound(params);
  const double asymptotic = asymptotic_capacity_estimate(params);
  try {
    const RateGap rg = normalized_gap(n, params, delta, options);
    const BoundBreakdown& b = rg.breakdown;
    os << format_double(b.gamma) << "," << b.q_d_min << "," << b.q_d_max << "," << b.q_s_min
       << "," << b.q_s_max << "," << b.t << "," << format_double(b.log_alpha) << ","
       << format_double(b.total_log2_codebook) << "," << format_double(rg.rate_bound) << ","
       << format_double(gallager) << "," << format_double(asymptotic) << ","
       << format_double(rg.gap) << ",ok\n";
  } catch (const std::exception& e) {
    std::string reason = e.what();
    for (char& c : reason)
      if (c == ',' || c == '\n') c = ';';
    // gamma through rate_bound stay empty, gap stays empty
    os << ",,,,,,,,," << format_double(gallager) << "," << format_double(asymptotic) << ",,"
       << reason << "\n";
  }
}

}  // namespace dsc
