// Acceptance suite: every headline property of the toolkit, checked at desk
// scale with pinned tolerances. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <cmath>
#include <limits>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dsc/bounds.hpp"
#include "dsc/channel.hpp"
#include "dsc/experiments.hpp"
#include "dsc/numerics.hpp"
#include "dsc/oracles.hpp"
#include "dsc/runner.hpp"

using namespace dsc;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

// 1. Exact collision case table over every ordered realization pair with
//    n <= 7, q_d <= 2, q_s <= 2. Integer arithmetic, zero tolerance.
bool collision_case_table(std::string& detail) {
  std::uint64_t configs = 0, pairs = 0, violations = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t q_d = 0; q_d <= 2 && q_d <= n; ++q_d) {
      for (std::size_t q_s = 0; q_s <= 2 && q_s + q_d <= n; ++q_s) {
        const LemmaReport report = verify_collision_cases(FixedCountParams(n, q_d, q_s));
        ++configs;
        pairs += report.checked;
        violations += report.violations.size();
      }
    }
  }
  std::ostringstream os;
  os << configs << " configs, " << pairs << " ordered pairs, " << violations << " violations";
  detail = os.str();
  return violations == 0;
}

// 2. Confusable-pattern counts never exceed the closed-form ceiling for any
//    anchor at n <= 7, t <= 4, s <= 2. Exact integers.
bool confusable_ceiling(std::string& detail) {
  std::uint64_t anchors = 0, checks = 0, violations = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t q_d = 0; q_d <= n; ++q_d) {
      for (std::size_t q_s = 0; q_s + q_d <= n; ++q_s) {
        PatternPairStream stream(n, q_d, q_s);
        PatternPair anchor = PatternPair::identity(0);
        while (stream.next(anchor)) {
          ++anchors;
          for (std::uint64_t t = 0; t <= 4; ++t) {
            for (std::uint64_t s = 0; s <= 2; ++s) {
              ++checks;
              if (count_confusable(anchor, t, s) >
                  confusable_count_bound_exact(q_d, q_s, t, s))
                ++violations;
            }
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << anchors << " anchors, " << checks << " checks, " << violations << " violations";
  detail = os.str();
  return violations == 0;
}

// 3. Bad-input counts stay below #patterns^2 * 2^(n-t) for n <= 8,
//    q_d <= 2, q_s <= 1, t <= 4, s <= 1. Exact integers.
bool bad_input_ceiling(std::string& detail) {
  std::uint64_t checks = 0, violations = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t q_d = 0; q_d <= 2 && q_d <= n; ++q_d) {
      for (std::size_t q_s = 0; q_s <= 1 && q_s + q_d <= n; ++q_s) {
        const FixedCountParams fc(n, q_d, q_s);
        const std::uint64_t patterns = fc.pattern_count();
        for (std::uint64_t t = 0; t <= 4; ++t) {
          for (std::uint64_t s = 0; s <= 1; ++s) {
            ++checks;
            const std::uint64_t count = count_ts_bad(fc, t, s);
            const unsigned __int128 lhs = static_cast<unsigned __int128>(count) << t;
            const unsigned __int128 rhs =
                static_cast<unsigned __int128>(patterns) * patterns << n;
            if (lhs > rhs) ++violations;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << checks << " checks, " << violations << " violations";
  detail = os.str();
  return violations == 0;
}

// 4. Optimal-guesser success stays below 2^(n-q_d) / (N * #patterns) for 50
//    random codebooks, compared as exact rationals.
bool guesser_ceiling(std::string& detail) {
  std::uint64_t violations = 0;
  for (std::size_t index = 0; index < 50; ++index) {
    Philox rng(0xACCE5500u, index);
    const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform_below(5));  // 3..7
    const std::size_t sizes[3] = {2, 4, 8};
    const std::size_t count = sizes[rng.uniform_below(3)];
    const std::size_t q_d =
        static_cast<std::size_t>(rng.uniform_below(std::min<std::uint64_t>(n, 2) + 1));
    const std::size_t q_s =
        static_cast<std::size_t>(rng.uniform_below(std::min<std::uint64_t>(n - q_d, 2) + 1));
    const FixedCountParams fc(n, q_d, q_s);
    const std::vector<BitString> codebook = sample_codebook(n, count, rng);
    const ExactFraction success = optimal_guesser_success(codebook, fc);
    const GuesserBound bound = guesser_success_bound(count, fc);
    if (!success.leq(bound.numerator, bound.denominator)) ++violations;
  }
  std::ostringstream os;
  os << "50 codebooks, " << violations << " violations";
  detail = os.str();
  return violations == 0;
}

// 5. Exact output-law equality of the one-shot channel and its
//    delete-then-flip decomposition for every input at n <= 6.
bool decomposition_equality(std::string& detail) {
  std::uint64_t inputs = 0;
  for (const auto& [pd, ps] : std::vector<std::pair<Rational, Rational>>{
           {Rational(3, 10), Rational(2, 10)}, {Rational(1, 10), Rational(1, 20)}}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const DecompositionReport report = verify_decomposition(n, pd, ps, 0, 0);
      if (!report.exact_checked || !report.exact_equal) {
        std::ostringstream os;
        os << "law mismatch at n=" << n;
        detail = os.str();
        return false;
      }
      inputs += report.inputs_checked;
    }
  }
  std::ostringstream os;
  os << "two parameter sets, " << inputs << " inputs, exact rational equality";
  detail = os.str();
  return true;
}

// 6. Monte Carlo concentration: empirical tail within the Chernoff ceiling
//    and within delta/4, both padded by 3 sampling sigmas.
bool concentration_tail(std::string& detail) {
  const ConcentrationReport r = run_concentration_check({1000, 0.1, 100000, 0.5, 20250413});
  std::ostringstream os;
  os << "empirical=" << r.empirical << " bound=" << r.bound
     << " sigma=" << r.sampling_sigma;
  detail = os.str();
  return r.pass_vs_bound && r.pass_vs_delta4 && !r.below_min_n;
}

// 7. Closed-form arithmetic against high-precision references.
bool bound_arithmetic(std::string& detail) {
  const double gallager = gallager_lower_bound(ChannelParams(0.1, 0.0));
  const double asymptotic = asymptotic_capacity_estimate(ChannelParams(0.001, 0.001));
  const double gap = std::abs(gallager_lower_bound(ChannelParams(0.001, 0.001)) - asymptotic);
  std::ostringstream os;
  os << "gallager(0.1,0)=" << gallager << " asymptotic(1e-3)=" << asymptotic
     << " |g-a|=" << gap;
  detail = os.str();
  // references recomputed at 40 digits: 0.5310044064107188 and
  // 0.9771844845250777 (1 - 2 H(0.001))
  return std::abs(gallager - 0.5310044064107188) <= 1e-4 &&
         std::abs(asymptotic - 0.9771844845250777) <= 1e-4 && gap <= 0.01;
}

// 8. Finite-n convergence evidence: the gap-to-entropy ratio strictly
//    decreases as p sweeps down with n = 1000/p, and the upper bound
//    dominates the lower bound wherever it is nonvacuous.
bool convergence_trend(std::string& detail) {
  double prev_ratio = std::numeric_limits<double>::infinity();
  std::ostringstream os;
  for (const double p : {0.05, 0.02, 0.01, 0.005}) {
    const std::uint64_t n = static_cast<std::uint64_t>(1000.0 / p);
    const ChannelParams params(p, p);
    const RateGap rg = normalized_gap(n, params, 0.5);
    const double entropy_cost = 2.0 * binary_entropy(p);
    const double ratio = rg.gap / entropy_cost;
    os << " p=" << p << ":" << ratio;
    if (ratio >= prev_ratio) {
      detail = "ratio not strictly decreasing at p=" + std::to_string(p) + ";" + os.str();
      return false;
    }
    if (rg.rate_bound <= 1.0 && rg.rate_bound < gallager_lower_bound(params)) {
      detail = "upper bound fell below the lower bound at p=" + std::to_string(p);
      return false;
    }
    prev_ratio = ratio;
  }
  detail = "gap/(H+H) strictly decreasing:" + os.str();
  return true;
}

// 9. Decode experiment: log2 N stays under the fixed-count ceiling at the
//    99% lower confidence endpoint, and the summary is byte-reproducible.
bool decode_ceiling(std::string& detail) {
  const DecodeTrialConfig cfg{12, 16, FixedCountParams(12, 1, 1), 100000, 424242};
  const DecodeSummary first = run_decode_experiment(cfg);
  const DecodeSummary second = run_decode_experiment(cfg);
  const std::string a = format_decode_summary(first);
  const std::string b = format_decode_summary(second);
  std::ostringstream os;
  os << "delta_hat=" << first.delta_hat << " ci_lo=" << first.ci_lo << " rhs="
     << (first.rhs_log2_codebook ? *first.rhs_log2_codebook : -1.0)
     << " reproducible=" << (a == b ? "yes" : "no");
  detail = os.str();
  return first.rhs_log2_codebook.has_value() && first.log2_codebook == 4.0 &&
         first.bound_ok && a == b;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"collision case table (exact, n<=7, q<=2)", collision_case_table},
      {"confusable-count ceiling (exact, n<=7, t<=4, s<=2)", confusable_ceiling},
      {"bad-input count ceiling (exact, n<=8)", bad_input_ceiling},
      {"guesser ceiling on 50 random codebooks (exact rationals)", guesser_ceiling},
      {"channel decomposition output-law equality (exact, n<=6)", decomposition_equality},
      {"concentration tail vs Chernoff ceiling (1e5 trials)", concentration_tail},
      {"closed-form bound arithmetic (1e-4 / 1e-4 / 0.01)", bound_arithmetic},
      {"convergence trend of the normalized gap", convergence_trend},
      {"decode experiment ceiling and reproducibility (1e5 trials)", decode_ceiling},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %zu: %s: %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::printf("RESULT: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("RESULT: %d of %zu criteria FAILED\n", failed, criteria.size());
  return 1;
}
