#ifndef DSC_ORACLES_HPP
#define DSC_ORACLES_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsc/channel.hpp"
#include "dsc/fraction.hpp"
#include "dsc/patterns.hpp"
#include "dsc/rng.hpp"

namespace dsc {

// Enumeration caps. Exceeding one raises CapExceededError; a scan is never
// silently truncated. DSC_MAX_ENUM_N / DSC_MAX_PAIR_SCAN_N override the
// defaults.
struct OracleCaps {
  std::size_t input_scan_max_n = 20;  // 2^n input scans
  std::size_t pair_scan_max_n = 10;   // pattern-space x pattern-space scans

  static OracleCaps from_env();
};

/// One verification sweep's outcome. `violations` must stay empty for the
/// checked statement to hold; max_slack_log2 is the largest observed
/// (bound - achieved) over the sweep, in bits.
struct LemmaReport {
  std::string suite;
  FixedCountParams config{0, 0, 0};
  std::optional<std::uint64_t> t, s;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  double max_slack_log2 = -std::numeric_limits<double>::infinity();
  std::string note;

  bool ok() const { return violations.empty(); }
};

void write_reports_text(std::ostream& os, std::span<const LemmaReport> reports);
void write_reports_csv(std::ostream& os, std::span<const LemmaReport> reports);

/// Exact Pr over uniform X in {0,1}^n that a and b map X to the same output,
/// by full enumeration. Pairs with different output lengths collide with
/// probability zero by construction.
ExactFraction collision_probability_exact(const PatternPair& a, const PatternPair& b,
                                          std::size_t n, const OracleCaps& caps = OracleCaps::from_env());

/// Sweeps ordered pattern pairs at the given counts and checks the exact
/// collision probability against the case table: 1 iff a == b, 0 whenever
/// the flip-set symmetric difference is not contained in the transmission
/// discrepancy set (and a != b), at most 2^-|discrepancy| always, and
/// strictly positive when containment holds. sample_limit = 0 checks every
/// ordered pair, otherwise that many pairs drawn with the given seed.
LemmaReport verify_collision_cases(const FixedCountParams& fc, std::uint64_t sample_limit = 0,
                                   std::uint64_t seed = 0,
                                   const OracleCaps& caps = OracleCaps::from_env());

/// Number of pattern pairs B at the same counts that can produce the same
/// output as `a` for some input (collision probability > 0) within the
/// neighborhood |discrepancy| <= t, |flip difference| <= s. Includes B == a.
std::uint64_t count_confusable(const PatternPair& a, std::uint64_t t, std::uint64_t s,
                               const OracleCaps& caps = OracleCaps::from_env());

/// Closed-form ceiling for count_confusable, in bits:
/// log2[(s+1)(t+1) C(q_s+s,q_s) C(t+s,s) C(q_d+t,q_d) C(2q_d+t+1,2q_d+1)].
double confusable_count_bound_log2(std::uint64_t q_d, std::uint64_t q_s, std::uint64_t t,
                                   std::uint64_t s);

/// Same product as an exact integer; throws CapExceededError on overflow.
std::uint64_t confusable_count_bound_exact(std::uint64_t q_d, std::uint64_t q_s,
                                           std::uint64_t t, std::uint64_t s);

/// Exact number of inputs X admitting two realizations (same counts) with
/// |discrepancy| >= t, |flip difference| >= s and identical outputs.
std::uint64_t count_ts_bad(const FixedCountParams& fc, std::uint64_t t, std::uint64_t s,
                           const OracleCaps& caps = OracleCaps::from_env());

/// Exact success probability of the Bayes-optimal guesser of the
/// (codeword, realization) pair from the channel output, under a uniform
/// codeword and a uniform fixed-count realization. Equals
/// |reachable outputs| / (N * #patterns).
ExactFraction optimal_guesser_success(std::span<const BitString> codebook,
                                      const FixedCountParams& fc,
                                      const OracleCaps& caps = OracleCaps::from_env());

/// Right-hand side of the guesser ceiling 2^(n-q_d) / (N * #patterns) as an
/// exact fraction (numerator 2^(n-q_d), denominator N * #patterns),
/// unreduced; may exceed one, so it is returned as a raw pair.
struct GuesserBound {
  std::uint64_t numerator;
  std::uint64_t denominator;
};
GuesserBound guesser_success_bound(std::size_t codebook_size, const FixedCountParams& fc);

}  // namespace dsc

#endif
