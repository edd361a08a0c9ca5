#include "dsc/capi.h"

#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "dsc/bounds.hpp"
#include "dsc/channel.hpp"
#include "dsc/errors.hpp"
#include "dsc/numerics.hpp"
#include "dsc/oracles.hpp"
#include "dsc/rng.hpp"
#include "dsc/runner.hpp"

namespace {

thread_local std::string g_last_error;

dsc_status fail(dsc_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Translates the C++ error idiom into status codes at the boundary.
template <typename Fn>
dsc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DSC_OK;
  } catch (const dsc::CapExceededError& e) {
    return fail(DSC_ERROR_CAP_EXCEEDED, e.what());
  } catch (const dsc::PreconditionError& e) {
    return fail(DSC_ERROR_PRECONDITION, e.what());
  } catch (const std::domain_error& e) {
    return fail(DSC_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DSC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(DSC_ERROR_IO, e.what());
  } catch (const std::runtime_error& e) {
    // file-open failures surface as plain runtime errors
    return std::strstr(e.what(), "output file") != nullptr
               ? fail(DSC_ERROR_IO, e.what())
               : fail(DSC_ERROR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(DSC_ERROR_INTERNAL, e.what());
  }
}

dsc::PatternPair make_pair(uint32_t n, const uint32_t* kept, size_t kept_len,
                           const uint32_t* flips, size_t flips_len) {
  std::vector<std::uint32_t> kv(kept, kept + kept_len);
  std::vector<std::uint32_t> fv(flips, flips + flips_len);
  return dsc::PatternPair(dsc::TransmissionPattern(n, std::move(kv)),
                          dsc::SubstitutionPattern(kept_len, std::move(fv)));
}

dsc::BoundOptions make_options(const dsc_bound_options* options) {
  dsc::BoundOptions o;
  if (options != nullptr) {
    o.t_variant = options->t_variant == 1 ? dsc::TFormulaVariant::statement
                                          : dsc::TFormulaVariant::proof;
    o.chernoff_log = options->chernoff_log == 1 ? dsc::ChernoffLogBase::base2
                                                : dsc::ChernoffLogBase::natural;
    o.gamma_variant = options->gamma_variant == 1 ? dsc::GammaVariant::per_process
                                                  : dsc::GammaVariant::single;
  }
  return o;
}

void fill_breakdown(const dsc::BoundBreakdown& b, dsc_bound_breakdown* out) {
  out->n_minus_qd = b.n_minus_qd;
  out->minus_log_binom_deletion = b.minus_log_binom_deletion;
  out->minus_log_binom_substitution = b.minus_log_binom_substitution;
  out->log_delta_term = b.log_delta_term;
  out->log_alpha = b.log_alpha;
  out->total_log2_codebook = b.total_log2_codebook;
  out->t = b.t;
  out->gamma = b.gamma;
  out->q_d_min = b.q_d_min;
  out->q_d_max = b.q_d_max;
  out->q_s_min = b.q_s_min;
  out->q_s_max = b.q_s_max;
}

dsc_status transmit_common(const uint8_t* in_bits, size_t n, double p_d, double p_s,
                           dsc_rng* rng, uint8_t* out_bits, size_t* out_len, uint32_t* kept,
                           uint32_t* flips, size_t* flips_len, bool two_stage);

}  // namespace

struct dsc_rng {
  dsc::Philox engine;
};

extern "C" {

const char* dsc_status_name(dsc_status status) {
  switch (status) {
    case DSC_OK: return "ok";
    case DSC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case DSC_ERROR_DOMAIN: return "domain error";
    case DSC_ERROR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case DSC_ERROR_PRECONDITION: return "precondition not met";
    case DSC_ERROR_IO: return "i/o error";
    case DSC_ERROR_VERIFICATION: return "verification violations";
    case DSC_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* dsc_last_error_message(void) { return g_last_error.c_str(); }

dsc_status dsc_rng_create(uint64_t seed, uint64_t stream, dsc_rng** out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  *out = new (std::nothrow) dsc_rng{dsc::Philox(seed, stream)};
  if (*out == nullptr) return fail(DSC_ERROR_INTERNAL, "allocation failed");
  g_last_error.clear();
  return DSC_OK;
}

void dsc_rng_destroy(dsc_rng* rng) { delete rng; }

dsc_status dsc_rng_next_u64(dsc_rng* rng, uint64_t* out) {
  if (rng == nullptr || out == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  *out = rng->engine.next_u64();
  return DSC_OK;
}

dsc_status dsc_rng_next_double(dsc_rng* rng, double* out) {
  if (rng == nullptr || out == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  *out = rng->engine.next_double();
  return DSC_OK;
}

dsc_status dsc_binary_entropy(double p, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::binary_entropy(p); });
}

dsc_status dsc_log2_binomial(uint64_t n, uint64_t k, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::log2_binomial(n, k); });
}

dsc_status dsc_exact_binomial(uint32_t n, uint32_t k, uint64_t* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::exact_binomial(n, k); });
}

dsc_status dsc_equivalent_substitution_prob(double p_d, double p_s, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::equivalent_substitution_prob(dsc::ChannelParams(p_d, p_s)); });
}

dsc_status dsc_transmit_iid(const uint8_t* in_bits, size_t n, double p_d, double p_s,
                            dsc_rng* rng, uint8_t* out_bits, size_t* out_len, uint32_t* kept,
                            uint32_t* flips, size_t* flips_len) {
  return transmit_common(in_bits, n, p_d, p_s, rng, out_bits, out_len, kept, flips, flips_len,
                         false);
}

dsc_status dsc_transmit_two_stage(const uint8_t* in_bits, size_t n, double p_d, double p_s,
                                  dsc_rng* rng, uint8_t* out_bits, size_t* out_len,
                                  uint32_t* kept, uint32_t* flips, size_t* flips_len) {
  return transmit_common(in_bits, n, p_d, p_s, rng, out_bits, out_len, kept, flips, flips_len,
                         true);
}

dsc_status dsc_sample_fixed_count_pair(uint32_t n, uint32_t q_d, uint32_t q_s, dsc_rng* rng,
                                       uint32_t* kept, uint32_t* flips) {
  if (rng == nullptr || kept == nullptr || (q_s > 0 && flips == nullptr))
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    const dsc::PatternPair pair =
        dsc::sample_fixed_count_pair(dsc::FixedCountParams(n, q_d, q_s), rng->engine);
    const auto& kv = pair.transmission.kept();
    const auto& fv = pair.substitution.flips();
    std::copy(kv.begin(), kv.end(), kept);
    if (!fv.empty()) std::copy(fv.begin(), fv.end(), flips);
  });
}

dsc_status dsc_pattern_apply(const uint8_t* in_bits, size_t n, const uint32_t* kept,
                             size_t kept_len, const uint32_t* flips, size_t flips_len,
                             uint8_t* out_bits) {
  if ((in_bits == nullptr && n > 0) || (kept == nullptr && kept_len > 0) ||
      (flips == nullptr && flips_len > 0) || (out_bits == nullptr && kept_len > 0))
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    dsc::BitString x(n);
    for (size_t i = 0; i < n; ++i) x.set_bit(i, in_bits[i] != 0);
    const dsc::BitString y =
        dsc::apply(x, make_pair(static_cast<uint32_t>(n), kept, kept_len, flips, flips_len));
    for (size_t i = 0; i < y.size(); ++i) out_bits[i] = y.bit(i) ? 1 : 0;
  });
}

dsc_status dsc_gallager_lower_bound(double p_d, double p_s, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::gallager_lower_bound(dsc::ChannelParams(p_d, p_s)); });
}

dsc_status dsc_asymptotic_capacity_estimate(double p_d, double p_s, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::asymptotic_capacity_estimate(dsc::ChannelParams(p_d, p_s)); });
}

dsc_status dsc_confusability_threshold(uint64_t n, uint64_t q_d, uint64_t q_s, double delta,
                                       const dsc_bound_options* options, long long* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = dsc::confusability_threshold(n, q_d, q_s, delta, make_options(options).t_variant);
  });
}

dsc_status dsc_ambiguity_factor_log2(uint64_t q_d, uint64_t q_s, long long t, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::ambiguity_factor_log2(q_d, q_s, t); });
}

dsc_status dsc_fixed_count_codebook_bound(uint64_t n, uint64_t q_d, uint64_t q_s, double delta,
                                          const dsc_bound_options* options,
                                          dsc_bound_breakdown* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    fill_breakdown(dsc::fixed_count_codebook_bound(n, q_d, q_s, delta, make_options(options)),
                   out);
  });
}

dsc_status dsc_chernoff_gamma(uint64_t n, double p, double delta,
                              const dsc_bound_options* options, double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = dsc::chernoff_gamma(n, p, delta, make_options(options).chernoff_log);
  });
}

dsc_status dsc_min_codeword_length(double p_d, double p_s, double delta,
                                   const dsc_bound_options* options, uint64_t* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = dsc::min_codeword_length(dsc::ChannelParams(p_d, p_s), delta,
                                    make_options(options).chernoff_log);
  });
}

dsc_status dsc_random_count_codebook_bound(uint64_t n, double p_d, double p_s, double delta,
                                           const dsc_bound_options* options,
                                           dsc_bound_breakdown* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    fill_breakdown(dsc::random_count_codebook_bound(n, dsc::ChannelParams(p_d, p_s), delta,
                                                    make_options(options)),
                   out);
  });
}

dsc_status dsc_normalized_gap(uint64_t n, double p_d, double p_s, double delta,
                              const dsc_bound_options* options, double* rate_bound,
                              double* gap) {
  if (rate_bound == nullptr || gap == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const dsc::RateGap rg =
        dsc::normalized_gap(n, dsc::ChannelParams(p_d, p_s), delta, make_options(options));
    *rate_bound = rg.rate_bound;
    *gap = rg.gap;
  });
}

dsc_status dsc_collision_probability_exact(uint32_t n, const uint32_t* a_kept,
                                           size_t a_kept_len, const uint32_t* a_flips,
                                           size_t a_flips_len, const uint32_t* b_kept,
                                           size_t b_kept_len, const uint32_t* b_flips,
                                           size_t b_flips_len, uint64_t* num, uint64_t* den) {
  if (num == nullptr || den == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const dsc::ExactFraction f = dsc::collision_probability_exact(
        make_pair(n, a_kept, a_kept_len, a_flips, a_flips_len),
        make_pair(n, b_kept, b_kept_len, b_flips, b_flips_len), n);
    *num = f.numerator;
    *den = f.denominator;
  });
}

dsc_status dsc_count_confusable(uint32_t n, const uint32_t* kept, size_t kept_len,
                                const uint32_t* flips, size_t flips_len, uint64_t t, uint64_t s,
                                uint64_t* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = dsc::count_confusable(make_pair(n, kept, kept_len, flips, flips_len), t, s);
  });
}

dsc_status dsc_confusable_count_bound_log2(uint64_t q_d, uint64_t q_s, uint64_t t, uint64_t s,
                                           double* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = dsc::confusable_count_bound_log2(q_d, q_s, t, s); });
}

dsc_status dsc_count_ts_bad(uint32_t n, uint32_t q_d, uint32_t q_s, uint64_t t, uint64_t s,
                            uint64_t* out) {
  if (out == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = dsc::count_ts_bad(dsc::FixedCountParams(n, q_d, q_s), t, s);
  });
}

dsc_status dsc_optimal_guesser_success(const uint64_t* codewords, size_t count, uint32_t n,
                                       uint32_t q_d, uint32_t q_s, uint64_t* num,
                                       uint64_t* den) {
  if (codewords == nullptr || num == nullptr || den == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    std::vector<dsc::BitString> codebook;
    codebook.reserve(count);
    for (size_t i = 0; i < count; ++i)
      codebook.push_back(dsc::BitString::from_value(codewords[i], n));
    const dsc::ExactFraction f =
        dsc::optimal_guesser_success(codebook, dsc::FixedCountParams(n, q_d, q_s));
    *num = f.numerator;
    *den = f.denominator;
  });
}

dsc_status dsc_run_bounds_sweep(const dsc_bounds_sweep_config* config, const char* csv_path) {
  if (config == nullptr || csv_path == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    dsc::BoundsSweepConfig cfg;
    cfg.p_d.assign(config->p_d, config->p_d + config->p_d_count);
    cfg.p_s.assign(config->p_s, config->p_s + config->p_s_count);
    cfg.n.assign(config->n, config->n + config->n_count);
    cfg.delta = config->delta;
    cfg.options = make_options(&config->options);
    cfg.jobs = config->jobs;
    dsc::run_bounds_sweep_file(cfg, csv_path);
  });
}

void dsc_verify_config_init(dsc_verify_config* config) {
  if (config == nullptr) return;
  const dsc::VerifySweepConfig d;
  config->collision_max_n = static_cast<uint32_t>(d.collision_max_n);
  config->collision_max_q = static_cast<uint32_t>(d.collision_max_q);
  config->confusable_max_n = static_cast<uint32_t>(d.confusable_max_n);
  config->confusable_max_t = static_cast<uint32_t>(d.confusable_max_t);
  config->confusable_max_s = static_cast<uint32_t>(d.confusable_max_s);
  config->ts_bad_max_n = static_cast<uint32_t>(d.ts_bad_max_n);
  config->ts_bad_max_q_d = static_cast<uint32_t>(d.ts_bad_max_q_d);
  config->ts_bad_max_q_s = static_cast<uint32_t>(d.ts_bad_max_q_s);
  config->ts_bad_max_t = static_cast<uint32_t>(d.ts_bad_max_t);
  config->ts_bad_max_s = static_cast<uint32_t>(d.ts_bad_max_s);
  config->guesser_codebooks = static_cast<uint32_t>(d.guesser_codebooks);
  config->sample_limit = d.sample_limit;
  config->seed = d.seed;
  config->jobs = d.jobs;
  config->confusable_bound_adjust_log2 = d.confusable_bound_adjust_log2;
}

dsc_status dsc_run_verify(const dsc_verify_config* config, const char* text_path,
                          const char* csv_path, uint64_t* violations) {
  if (config == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null config");
  std::uint64_t found = 0;
  const dsc_status status = guarded([&] {
    dsc::VerifySweepConfig cfg;
    cfg.collision_max_n = config->collision_max_n;
    cfg.collision_max_q = config->collision_max_q;
    cfg.confusable_max_n = config->confusable_max_n;
    cfg.confusable_max_t = config->confusable_max_t;
    cfg.confusable_max_s = config->confusable_max_s;
    cfg.ts_bad_max_n = config->ts_bad_max_n;
    cfg.ts_bad_max_q_d = config->ts_bad_max_q_d;
    cfg.ts_bad_max_q_s = config->ts_bad_max_q_s;
    cfg.ts_bad_max_t = config->ts_bad_max_t;
    cfg.ts_bad_max_s = config->ts_bad_max_s;
    cfg.guesser_codebooks = config->guesser_codebooks;
    cfg.sample_limit = config->sample_limit;
    cfg.seed = config->seed;
    cfg.jobs = config->jobs;
    cfg.confusable_bound_adjust_log2 = config->confusable_bound_adjust_log2;
    found = dsc::run_verify_files(cfg, text_path == nullptr ? "" : text_path,
                                  csv_path == nullptr ? "" : csv_path)
                .violations;
  });
  if (violations != nullptr) *violations = found;
  if (status != DSC_OK) return status;
  if (found > 0) return fail(DSC_ERROR_VERIFICATION, "verification violations found");
  return DSC_OK;
}

dsc_status dsc_run_decode(const dsc_decode_config* config, const char* summary_path,
                          const char* trials_csv_path, dsc_decode_summary* out) {
  if (config == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null config");
  return guarded([&] {
    dsc::DecodeTrialConfig cfg{config->n,     config->codebook_size,
                               dsc::FixedCountParams(config->n, config->q_d, config->q_s),
                               config->trials, config->seed,
                               config->jobs,  make_options(&config->options)};
    const dsc::DecodeSummary s =
        dsc::run_decode_files(cfg, summary_path == nullptr ? "" : summary_path,
                              trials_csv_path == nullptr ? "" : trials_csv_path);
    if (out != nullptr) {
      out->trials = s.trials;
      out->successes = s.successes;
      out->none_consistent = s.none_consistent;
      out->delta_hat = s.delta_hat;
      out->ci_lo = s.ci_lo;
      out->ci_hi = s.ci_hi;
      out->log2_codebook = s.log2_codebook;
      out->rhs_log2_codebook =
          s.rhs_log2_codebook.value_or(std::numeric_limits<double>::infinity());
      out->bound_ok = s.bound_ok ? 1 : 0;
      out->guesser_rate = s.guesser_rate;
      out->guesser_bound = s.guesser_bound;
      out->optimal_guesser = s.optimal_guesser;
      out->guesser_ok = s.guesser_ok ? 1 : 0;
    }
  });
}

dsc_status dsc_run_concentration(const dsc_concentration_config* config,
                                 const char* report_path, dsc_concentration_summary* out) {
  if (config == nullptr) return fail(DSC_ERROR_INVALID_ARGUMENT, "null config");
  return guarded([&] {
    dsc::ConcentrationConfig cfg{config->n,
                                 config->p,
                                 config->trials,
                                 config->delta,
                                 config->seed,
                                 config->chernoff_log == 1 ? dsc::ChernoffLogBase::base2
                                                           : dsc::ChernoffLogBase::natural,
                                 config->jobs};
    const dsc::ConcentrationReport r =
        dsc::run_concentration_files(cfg, report_path == nullptr ? "" : report_path);
    if (out != nullptr) {
      out->gamma = r.gamma;
      out->bound = r.bound;
      out->empirical = r.empirical;
      out->sampling_sigma = r.sampling_sigma;
      out->tail_count = r.tail_count;
      out->pass_vs_bound = r.pass_vs_bound ? 1 : 0;
      out->pass_vs_delta4 = r.pass_vs_delta4 ? 1 : 0;
      out->below_min_n = r.below_min_n ? 1 : 0;
      out->min_n = r.min_n;
    }
  });
}

dsc_status dsc_run_decompose(const dsc_decompose_config* config, const char* report_path,
                             dsc_decompose_summary* out) {
  if (config == nullptr || config->p_d_decimal == nullptr || config->p_s_decimal == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    const dsc::DecompositionReport r = dsc::run_decompose_files(
        config->n, config->p_d_decimal, config->p_s_decimal, config->trials, config->seed,
        config->jobs, report_path == nullptr ? "" : report_path);
    if (out != nullptr) {
      out->exact_checked = r.exact_checked ? 1 : 0;
      out->exact_equal = r.exact_equal ? 1 : 0;
      out->inputs_checked = r.inputs_checked;
      out->chi_square = r.chi_square;
      out->p_value = r.p_value;
      out->dof = r.dof;
      out->sampled_pass = r.sampled_pass ? 1 : 0;
    }
  });
}

}  // extern "C"

namespace {

dsc_status transmit_common(const uint8_t* in_bits, size_t n, double p_d, double p_s,
                           dsc_rng* rng, uint8_t* out_bits, size_t* out_len, uint32_t* kept,
                           uint32_t* flips, size_t* flips_len, bool two_stage) {
  if ((in_bits == nullptr && n > 0) || rng == nullptr || out_bits == nullptr ||
      out_len == nullptr)
    return fail(DSC_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    dsc::BitString x(n);
    for (size_t i = 0; i < n; ++i) x.set_bit(i, in_bits[i] != 0);
    const dsc::ChannelParams params(p_d, p_s);
    const dsc::TransmitResult r = two_stage ? dsc::transmit_two_stage(x, params, rng->engine)
                                            : dsc::transmit_iid(x, params, rng->engine);
    *out_len = r.output.size();
    for (size_t i = 0; i < r.output.size(); ++i) out_bits[i] = r.output.bit(i) ? 1 : 0;
    if (kept != nullptr) {
      const auto& kv = r.realized.transmission.kept();
      std::copy(kv.begin(), kv.end(), kept);
    }
    if (flips != nullptr && flips_len != nullptr) {
      const auto& fv = r.realized.substitution.flips();
      std::copy(fv.begin(), fv.end(), flips);
      *flips_len = fv.size();
    }
  });
}

}  // namespace
