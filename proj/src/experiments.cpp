#include "dsc/experiments.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"
#include "dsc/oracles.hpp"
#include "dsc/parallel.hpp"

namespace dsc {

namespace {

std::size_t decode_cap() { return env_size_t("DSC_MAX_DECODE_N", 16); }

Rational rational_pow(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void check_rational_params(const Rational& p_d, const Rational& p_s) {
  if (p_d < 0 || p_d >= 1) throw std::domain_error("decomposition: p_d must be in [0,1)");
  if (p_s < 0 || p_s >= 1) throw std::domain_error("decomposition: p_s must be in [0,1)");
  if (p_d + p_s > 1) throw std::domain_error("decomposition: p_d + p_s must be <= 1");
}

using Law = std::map<std::pair<std::size_t, std::uint64_t>, Rational>;

std::vector<std::pair<BitString, Rational>> law_to_vector(const Law& law) {
  std::vector<std::pair<BitString, Rational>> out;
  out.reserve(law.size());
  for (const auto& [key, prob] : law)
    out.emplace_back(BitString::from_value(key.second, key.first), prob);
  return out;
}

// Enumerates every realization (kept subset, flip subset) of an n-bit input
// and accumulates the output law under per-realization probabilities
// supplied by `prob(q_d, q_s)`.
template <typename ProbFn>
Law realization_law(const BitString& x, ProbFn&& prob) {
  const std::size_t n = x.size();
  if (n > 20) throw CapExceededError("realization_law: n exceeds the enumeration cap 20");
  const std::uint64_t packed = x.packed();
  Law law;
  for (std::size_t q_d = 0; q_d <= n; ++q_d) {
    const std::size_t m = n - q_d;
    TransmissionPatternStream kept_stream(n, q_d);
    TransmissionPattern kept = TransmissionPattern::identity(0);
    while (kept_stream.next(kept)) {
      CompiledPattern comp = compile(PatternPair(kept, SubstitutionPattern::none(m)));
      const std::uint64_t z = apply_packed(packed, comp);
      for (std::size_t q_s = 0; q_s <= m; ++q_s) {
        const Rational p = prob(q_d, q_s);
        std::vector<std::uint32_t> flips(q_s);
        std::iota(flips.begin(), flips.end(), 1u);
        do {
          std::uint64_t flip_mask = 0;
          for (std::uint32_t f : flips) flip_mask |= std::uint64_t{1} << (f - 1);
          law[{m, z ^ flip_mask}] += p;
        } while (next_combination(flips, m));
      }
    }
  }
  return law;
}

}  // namespace

bool reachable(const BitString& x, const BitString& y, std::size_t q_s) {
  const std::size_t n = x.size(), m = y.size();
  if (m > n || q_s > m) return false;
  if (m >= 64) throw CapExceededError("reachable: output length must be < 64");
  // dp[j] = bitmask of achievable mismatch counts for matching a
  // j-prefix of y inside the scanned prefix of x
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const bool xb = x.bit(i);
    for (std::size_t j = std::min(m, i + 1); j >= 1; --j) {
      const int mismatch = xb != y.bit(j - 1);
      dp[j] |= dp[j - 1] << mismatch;
    }
  }
  return (dp[m] >> q_s) & 1;
}

bool reachable_within(const BitString& x, const BitString& y, std::size_t max_q_s) {
  const std::size_t n = x.size(), m = y.size();
  if (m > n) return false;
  if (m >= 64) throw CapExceededError("reachable_within: output length must be < 64");
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const bool xb = x.bit(i);
    for (std::size_t j = std::min(m, i + 1); j >= 1; --j) {
      const int mismatch = xb != y.bit(j - 1);
      dp[j] |= dp[j - 1] << mismatch;
    }
  }
  const std::size_t cut = std::min(max_q_s, m);
  const std::uint64_t mask = cut >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (cut + 1)) - 1;
  return (dp[m] & mask) != 0;
}

std::optional<BitString> consistent_decoder(const BitString& y,
                                            std::span<const BitString> codebook,
                                            std::size_t q_s) {
  const BitString* best = nullptr;
  for (const BitString& word : codebook) {
    if (best != nullptr && !lex_less(word, *best)) continue;
    if (reachable(word, y, q_s)) best = &word;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::vector<BitString> sample_codebook(std::size_t n, std::size_t count, Philox& rng) {
  if (n > 64) throw CapExceededError("sample_codebook: n must be <= 64");
  if (n < 64 && count > (std::uint64_t{1} << n))
    throw std::domain_error("sample_codebook: more codewords than strings");
  std::unordered_set<std::uint64_t> seen;
  std::vector<BitString> out;
  out.reserve(count);
  const std::uint64_t space = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  while (out.size() < count) {
    const std::uint64_t v = n == 64 ? rng.next_u64() : rng.uniform_below(space);
    if (seen.insert(v).second) out.push_back(BitString::from_value(v, n));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

double wilson_lower(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::domain_error("wilson_lower: no trials");
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = p + z2 / (2.0 * t);
  const double radius = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t));
  return std::max(0.0, (center - radius) / denom);
}

double wilson_upper(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::domain_error("wilson_upper: no trials");
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = p + z2 / (2.0 * t);
  const double radius = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t));
  return std::min(1.0, (center + radius) / denom);
}

DecodeSummary run_decode_experiment(const DecodeTrialConfig& cfg,
                                    std::vector<std::uint8_t>* success_log) {
  if (cfg.fc.n != cfg.n) throw std::invalid_argument("decode: fc.n must equal n");
  if (cfg.n > decode_cap())
    throw CapExceededError("decode: n exceeds the decoding cap (DSC_MAX_DECODE_N)");
  if (cfg.codebook_size == 0) throw std::invalid_argument("decode: empty codebook");
  if (cfg.n < 64 && cfg.codebook_size > (std::uint64_t{1} << cfg.n))
    throw std::invalid_argument("decode: codebook larger than 2^n");
  if (cfg.trials == 0) throw std::invalid_argument("decode: need at least one trial");

  Philox codebook_rng(cfg.seed, 0);
  const std::vector<BitString> codebook = sample_codebook(cfg.n, cfg.codebook_size, codebook_rng);
  std::vector<std::uint64_t> packed(codebook.size());
  for (std::size_t i = 0; i < codebook.size(); ++i) packed[i] = codebook[i].packed();

  // realizations in lexicographic order; sampled ranks index this list
  const std::vector<PatternPair> pairs = all_pattern_pairs(cfg.n, cfg.fc.q_d, cfg.fc.q_s);
  std::vector<CompiledPattern> compiled(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) compiled[i] = compile(pairs[i]);
  const std::uint64_t outer = combination_count(cfg.n, cfg.n - cfg.fc.q_d);
  const std::uint64_t inner = combination_count(cfg.n - cfg.fc.q_d, cfg.fc.q_s);

  if (success_log != nullptr) success_log->assign(cfg.trials, 0);

  const int jobs = std::max(1, cfg.jobs);
  struct Tally {
    std::uint64_t successes = 0, guesser = 0, none = 0;
  };
  std::vector<Tally> tallies(jobs);

  const std::size_t m = cfg.n - cfg.fc.q_d;
  parallel_chunks(cfg.trials, jobs, [&](std::size_t worker, std::uint64_t begin,
                                        std::uint64_t end) {
    Tally& tally = tallies[worker];
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      Philox rng(cfg.seed, trial + 1);
      const std::size_t z_index = static_cast<std::size_t>(rng.uniform_below(packed.size()));
      const std::uint64_t kept_rank = rng.uniform_below(outer);
      const std::uint64_t flip_rank = rng.uniform_below(inner);
      const std::size_t a_index = static_cast<std::size_t>(kept_rank * inner + flip_rank);
      const std::uint64_t y = apply_packed(packed[z_index], compiled[a_index]);
      const BitString y_bits = BitString::from_value(y, m);

      // codebook is lex-sorted, so the first consistent hit is the decode
      std::size_t decoded = codebook.size();
      for (std::size_t i = 0; i < codebook.size(); ++i) {
        if (reachable(codebook[i], y_bits, cfg.fc.q_s)) {
          decoded = i;
          break;
        }
      }

      if (decoded == codebook.size()) {
        ++tally.none;
        continue;
      }
      const bool success = decoded == z_index;
      tally.successes += success;
      if (success_log != nullptr) (*success_log)[trial] = success;
      if (success) {
        // two-stage guesser: decode, then the lexicographically first
        // realization consistent with the decoded word
        for (std::size_t i = 0; i < compiled.size(); ++i) {
          if (apply_packed(packed[decoded], compiled[i]) == y) {
            tally.guesser += i == a_index;
            break;
          }
        }
      }
    }
  });

  DecodeSummary s;
  s.n = cfg.n;
  s.codebook_size = cfg.codebook_size;
  s.q_d = cfg.fc.q_d;
  s.q_s = cfg.fc.q_s;
  s.seed = cfg.seed;
  s.trials = cfg.trials;
  for (const Tally& tally : tallies) {
    s.successes += tally.successes;
    s.guesser_successes += tally.guesser;
    s.none_consistent += tally.none;
  }
  s.delta_hat = static_cast<double>(s.successes) / static_cast<double>(s.trials);
  s.ci_lo = wilson_lower(s.successes, s.trials, kZ99);
  s.ci_hi = wilson_upper(s.successes, s.trials, kZ99);
  s.log2_codebook = std::log2(static_cast<double>(cfg.codebook_size));
  if (cfg.fc.q_d >= 1 && cfg.fc.q_s >= 1) {
    if (s.ci_lo > 0.0) {
      s.rhs_log2_codebook =
          fixed_count_codebook_bound(cfg.n, cfg.fc.q_d, cfg.fc.q_s, s.ci_lo, cfg.options)
              .total_log2_codebook;
    } else {
      // the ceiling diverges as the success floor vanishes
      s.rhs_log2_codebook = std::numeric_limits<double>::infinity();
    }
    s.bound_ok = s.log2_codebook <= *s.rhs_log2_codebook;
  }
  s.guesser_rate = static_cast<double>(s.guesser_successes) / static_cast<double>(s.trials);
  const GuesserBound gb = guesser_success_bound(cfg.codebook_size, cfg.fc);
  s.guesser_bound = static_cast<double>(gb.numerator) / static_cast<double>(gb.denominator);
  s.optimal_guesser = optimal_guesser_success(codebook, cfg.fc).value();
  s.guesser_ok = s.guesser_rate <= s.guesser_bound;
  return s;
}

std::string format_decode_summary(const DecodeSummary& s) {
  std::ostringstream os;
  os << "n=" << s.n << "\n"
     << "codebook_size=" << s.codebook_size << "\n"
     << "qd=" << s.q_d << "\n"
     << "qs=" << s.q_s << "\n"
     << "seed=" << s.seed << "\n"
     << "trials=" << s.trials << "\n"
     << "successes=" << s.successes << "\n"
     << "none_consistent=" << s.none_consistent << "\n"
     << "delta_hat=" << format_double(s.delta_hat) << "\n"
     << "ci_lo=" << format_double(s.ci_lo) << "\n"
     << "ci_hi=" << format_double(s.ci_hi) << "\n"
     << "log2N=" << format_double(s.log2_codebook) << "\n"
     << "rhs_log2N="
     << (s.rhs_log2_codebook ? format_double(*s.rhs_log2_codebook) : std::string("n/a")) << "\n"
     << "pass=" << (s.bound_ok ? 1 : 0) << "\n"
     << "guesser_rate=" << format_double(s.guesser_rate) << "\n"
     << "guesser_bound=" << format_double(s.guesser_bound) << "\n"
     << "optimal_guesser=" << format_double(s.optimal_guesser) << "\n"
     << "guesser_pass=" << (s.guesser_ok ? 1 : 0) << "\n";
  return os.str();
}

ConcentrationReport run_concentration_check(const ConcentrationConfig& cfg) {
  if (!(cfg.p >= 0.0 && cfg.p < 1.0))
    throw std::domain_error("concentration: p must be in [0,1)");
  if (cfg.trials == 0) throw std::invalid_argument("concentration: need at least one trial");

  ConcentrationReport r;
  r.n = cfg.n;
  r.p = cfg.p;
  r.delta = cfg.delta;
  r.trials = cfg.trials;
  r.seed = cfg.seed;

  const double mu = static_cast<double>(cfg.n) * cfg.p;
  if (cfg.p > 0.0) {
    r.gamma = chernoff_gamma(cfg.n, cfg.p, cfg.delta, cfg.log_base);
    r.bound = std::min(1.0, 2.0 * std::exp(-mu * r.gamma * r.gamma / 3.0));
    r.min_n = static_cast<std::uint64_t>(
        std::ceil(12.0 *
                  (cfg.log_base == ChernoffLogBase::natural ? std::log(8.0 / cfg.delta)
                                                            : std::log2(8.0 / cfg.delta)) /
                  cfg.p));
    r.below_min_n = cfg.n < r.min_n;
  } else {
    // degenerate process: the count is identically zero
    r.gamma = 0.0;
    r.bound = 1.0;
    r.min_n = 0;
    r.below_min_n = false;
  }

  const double threshold = r.gamma * mu;
  const int jobs = std::max(1, cfg.jobs);
  std::vector<std::uint64_t> tails(jobs, 0);
  parallel_chunks(cfg.trials, jobs, [&](std::size_t worker, std::uint64_t begin,
                                        std::uint64_t end) {
    std::uint64_t local = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      Philox rng(cfg.seed, trial + 1);
      std::uint64_t q = 0;
      for (std::size_t i = 0; i < cfg.n; ++i) q += rng.bernoulli(cfg.p);
      if (std::abs(static_cast<double>(q) - mu) > threshold) ++local;
    }
    tails[worker] = local;
  });
  for (std::uint64_t t : tails) r.tail_count += t;
  r.empirical = static_cast<double>(r.tail_count) / static_cast<double>(cfg.trials);
  r.sampling_sigma = std::sqrt(r.bound * (1.0 - r.bound) / static_cast<double>(cfg.trials));
  r.pass_vs_bound = r.empirical <= r.bound + 3.0 * r.sampling_sigma;
  const double delta4 = cfg.delta / 4.0;
  const double sigma4 = std::sqrt(delta4 * (1.0 - delta4) / static_cast<double>(cfg.trials));
  r.pass_vs_delta4 = r.empirical <= delta4 + 3.0 * sigma4;
  return r;
}

std::string format_concentration_report(const ConcentrationReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << "\n"
     << "p=" << format_double(r.p) << "\n"
     << "delta=" << format_double(r.delta) << "\n"
     << "trials=" << r.trials << "\n"
     << "seed=" << r.seed << "\n"
     << "gamma=" << format_double(r.gamma) << "\n"
     << "bound=" << format_double(r.bound) << "\n"
     << "tail_count=" << r.tail_count << "\n"
     << "empirical=" << format_double(r.empirical) << "\n"
     << "sampling_sigma=" << format_double(r.sampling_sigma) << "\n"
     << "pass_vs_bound=" << (r.pass_vs_bound ? 1 : 0) << "\n"
     << "pass_vs_delta4=" << (r.pass_vs_delta4 ? 1 : 0) << "\n";
  if (r.below_min_n)
    os << "warning=n below the concentration minimum " << r.min_n << "\n";
  return os.str();
}

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  boost::multiprecision::cpp_int num = 0, den = 1;
  bool any_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("parse_decimal: two decimal points");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
      any_digit = true;
    } else {
      throw std::invalid_argument("parse_decimal: unexpected character in '" + text + "'");
    }
  }
  if (!any_digit) throw std::invalid_argument("parse_decimal: no digits in '" + text + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::vector<std::pair<BitString, Rational>> one_stage_output_law(const BitString& x,
                                                                 const Rational& p_d,
                                                                 const Rational& p_s) {
  check_rational_params(p_d, p_s);
  const Rational p_c = 1 - p_d - p_s;
  const std::size_t n = x.size();
  std::vector<Rational> pd_pow(n + 1), ps_pow(n + 1), pc_pow(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    pd_pow[i] = rational_pow(p_d, i);
    ps_pow[i] = rational_pow(p_s, i);
    pc_pow[i] = rational_pow(p_c, i);
  }
  return law_to_vector(realization_law(x, [&](std::size_t q_d, std::size_t q_s) {
    return pd_pow[q_d] * ps_pow[q_s] * pc_pow[x.size() - q_d - q_s];
  }));
}

std::vector<std::pair<BitString, Rational>> two_stage_output_law(const BitString& x,
                                                                 const Rational& p_d,
                                                                 const Rational& p_s) {
  check_rational_params(p_d, p_s);
  const Rational keep = 1 - p_d;
  const Rational flip = p_s / keep;  // substitution rate after the deletion stage
  const Rational carry = 1 - flip;
  const std::size_t n = x.size();
  std::vector<Rational> pd_pow(n + 1), keep_pow(n + 1), flip_pow(n + 1), carry_pow(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    pd_pow[i] = rational_pow(p_d, i);
    keep_pow[i] = rational_pow(keep, i);
    flip_pow[i] = rational_pow(flip, i);
    carry_pow[i] = rational_pow(carry, i);
  }
  return law_to_vector(realization_law(x, [&](std::size_t q_d, std::size_t q_s) {
    const std::size_t m = x.size() - q_d;
    return pd_pow[q_d] * keep_pow[m] * flip_pow[q_s] * carry_pow[m - q_s];
  }));
}

DecompositionReport verify_decomposition(std::size_t n, const Rational& p_d, const Rational& p_s,
                                         std::uint64_t trials, std::uint64_t seed,
                                         double significance, std::size_t exact_cap, int jobs) {
  check_rational_params(p_d, p_s);
  DecompositionReport report;
  report.n = n;
  {
    std::ostringstream os;
    os << p_d;
    report.p_d = os.str();
    os.str("");
    os << p_s;
    report.p_s = os.str();
  }
  report.trials = trials;
  report.seed = seed;
  report.significance = significance;

  if (n <= exact_cap) {
    report.exact_checked = true;
    report.exact_equal = true;
    const std::uint64_t inputs = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < inputs; ++v) {
      const BitString x = BitString::from_value(v, n);
      const auto one = one_stage_output_law(x, p_d, p_s);
      const auto two = two_stage_output_law(x, p_d, p_s);
      Rational total = 0;
      for (const auto& [y, p] : one) total += p;
      if (one != two || total != 1) {
        report.exact_equal = false;
        break;
      }
      ++report.inputs_checked;
    }
  }

  if (trials > 0) {
    const double pd = p_d.convert_to<double>();
    const double ps_prime = (p_s / (1 - p_d)).convert_to<double>();

    // joint (q_d, q_s) counts from the two-stage construction
    const std::size_t cells = (n + 1) * (n + 1);
    const int workers = std::max(1, jobs);
    std::vector<std::vector<std::uint64_t>> counts(workers,
                                                   std::vector<std::uint64_t>(cells, 0));
    parallel_chunks(trials, workers, [&](std::size_t worker, std::uint64_t begin,
                                         std::uint64_t end) {
      auto& local = counts[worker];
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        Philox rng(seed, trial + 1);
        std::size_t q_d = 0;
        for (std::size_t i = 0; i < n; ++i) q_d += rng.bernoulli(pd);
        std::size_t q_s = 0;
        for (std::size_t i = 0; i < n - q_d; ++i) q_s += rng.bernoulli(ps_prime);
        ++local[q_d * (n + 1) + q_s];
      }
    });
    std::vector<std::uint64_t> observed(cells, 0);
    for (const auto& local : counts)
      for (std::size_t c = 0; c < cells; ++c) observed[c] += local[c];

    // expected counts from the exact trinomial pmf
    const Rational p_c = 1 - p_d - p_s;
    std::vector<double> expected(cells, 0.0);
    for (std::size_t q_d = 0; q_d <= n; ++q_d) {
      for (std::size_t q_s = 0; q_s + q_d <= n; ++q_s) {
        const Rational pmf = Rational(combination_count(n, q_d)) *
                             Rational(combination_count(n - q_d, q_s)) *
                             rational_pow(p_d, q_d) * rational_pow(p_s, q_s) *
                             rational_pow(p_c, n - q_d - q_s);
        expected[q_d * (n + 1) + q_s] =
            pmf.convert_to<double>() * static_cast<double>(trials);
      }
    }

    // cells with tiny expectation pool into one bucket
    double stat = 0.0, pooled_obs = 0.0, pooled_exp = 0.0;
    std::size_t used = 0;
    for (std::size_t q_d = 0; q_d <= n; ++q_d) {
      for (std::size_t q_s = 0; q_s + q_d <= n; ++q_s) {
        const std::size_t c = q_d * (n + 1) + q_s;
        if (expected[c] >= 5.0) {
          const double diff = static_cast<double>(observed[c]) - expected[c];
          stat += diff * diff / expected[c];
          ++used;
        } else {
          pooled_obs += static_cast<double>(observed[c]);
          pooled_exp += expected[c];
        }
      }
    }
    if (pooled_exp > 0.0) {
      const double diff = pooled_obs - pooled_exp;
      stat += diff * diff / pooled_exp;
      ++used;
    }
    report.chi_square = stat;
    report.dof = used > 1 ? used - 1 : 1;
    report.p_value = boost::math::gamma_q(static_cast<double>(report.dof) / 2.0, stat / 2.0);
    report.sampled_pass = report.p_value >= significance;
  } else {
    report.sampled_pass = true;
  }
  return report;
}

std::string format_decomposition_report(const DecompositionReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << "\n"
     << "pd=" << r.p_d << "\n"
     << "ps=" << r.p_s << "\n"
     << "exact_checked=" << (r.exact_checked ? 1 : 0) << "\n"
     << "exact_equal=" << (r.exact_equal ? 1 : 0) << "\n"
     << "inputs_checked=" << r.inputs_checked << "\n"
     << "trials=" << r.trials << "\n"
     << "seed=" << r.seed << "\n"
     << "chi_square=" << format_double(r.chi_square) << "\n"
     << "dof=" << r.dof << "\n"
     << "p_value=" << format_double(r.p_value) << "\n"
     << "significance=" << format_double(r.significance) << "\n"
     << "sampled_pass=" << (r.sampled_pass ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace dsc
