#ifndef DSC_CHANNEL_HPP
#define DSC_CHANNEL_HPP

#include <cstdint>

#include "dsc/bitstring.hpp"
#include "dsc/patterns.hpp"
#include "dsc/rng.hpp"

namespace dsc {

/// i.i.d. channel parameters: each bit is deleted with probability p_d,
/// flipped with probability p_s, carried through otherwise.
class ChannelParams {
 public:
  ChannelParams(double p_d, double p_s);

  double p_d() const { return p_d_; }
  double p_s() const { return p_s_; }
  double p_correct() const { return 1.0 - p_d_ - p_s_; }
  /// Flip probability of the second stage in the delete-then-flip
  /// decomposition: p_s / (1 - p_d).
  double p_s_equivalent() const { return p_s_ / (1.0 - p_d_); }

 private:
  double p_d_, p_s_;
};

double equivalent_substitution_prob(const ChannelParams& params);

/// Side-information regime: exactly q_d deletions and q_s substitutions,
/// realization uniform over all C(n,q_d)*C(n-q_d,q_s) pattern pairs.
struct FixedCountParams {
  FixedCountParams(std::size_t n, std::size_t q_d, std::size_t q_s);

  std::size_t n, q_d, q_s;

  std::size_t output_length() const { return n - q_d; }
  std::uint64_t pattern_count() const;
};

struct TransmitResult {
  BitString output;
  PatternPair realized;
};

/// Per-bit trinomial channel draw. Deterministic given the rng state.
TransmitResult transmit_iid(const BitString& x, const ChannelParams& params, Philox& rng);

/// Deletion stage at p_d followed by a substitution stage at p_s/(1-p_d).
TransmitResult transmit_two_stage(const BitString& x, const ChannelParams& params, Philox& rng);

/// Exact-uniform pattern pair via rank unranking.
PatternPair sample_fixed_count_pair(const FixedCountParams& fc, Philox& rng);

}  // namespace dsc

#endif
