#include "dsc/channel.hpp"

#include <stdexcept>

#include "dsc/errors.hpp"

namespace dsc {

ChannelParams::ChannelParams(double p_d, double p_s) : p_d_(p_d), p_s_(p_s) {
  if (!(p_d >= 0.0 && p_d < 1.0)) throw std::domain_error("ChannelParams: p_d must be in [0,1)");
  if (!(p_s >= 0.0 && p_s < 1.0)) throw std::domain_error("ChannelParams: p_s must be in [0,1)");
  if (p_d + p_s > 1.0) throw std::domain_error("ChannelParams: p_d + p_s must be <= 1");
}

double equivalent_substitution_prob(const ChannelParams& params) {
  return params.p_s_equivalent();
}

FixedCountParams::FixedCountParams(std::size_t n_, std::size_t q_d_, std::size_t q_s_)
    : n(n_), q_d(q_d_), q_s(q_s_) {
  if (q_d > n) throw std::domain_error("FixedCountParams: q_d must be <= n");
  if (q_s > n - q_d) throw std::domain_error("FixedCountParams: q_s must be <= n - q_d");
}

std::uint64_t FixedCountParams::pattern_count() const {
  const std::uint64_t outer = combination_count(n, q_d);
  const std::uint64_t inner = combination_count(n - q_d, q_s);
  if (inner != 0 && outer > ~std::uint64_t{0} / inner)
    throw CapExceededError("FixedCountParams: pattern count exceeds 64 bits");
  return outer * inner;
}

TransmitResult transmit_iid(const BitString& x, const ChannelParams& params, Philox& rng) {
  const std::size_t n = x.size();
  std::vector<std::uint32_t> kept, flips;
  BitString y;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next_double();
    if (u < params.p_d()) continue;
    const bool flip = u < params.p_d() + params.p_s();
    kept.push_back(static_cast<std::uint32_t>(i + 1));
    if (flip) flips.push_back(static_cast<std::uint32_t>(kept.size()));
    y.push_back(x.bit(i) != flip);
  }
  const std::size_t m = kept.size();
  return {std::move(y), PatternPair(TransmissionPattern(n, std::move(kept)),
                                    SubstitutionPattern(m, std::move(flips)))};
}

TransmitResult transmit_two_stage(const BitString& x, const ChannelParams& params, Philox& rng) {
  const std::size_t n = x.size();
  std::vector<std::uint32_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rng.bernoulli(params.p_d())) kept.push_back(static_cast<std::uint32_t>(i + 1));
  }
  const double p_flip = params.p_s_equivalent();
  std::vector<std::uint32_t> flips;
  BitString y;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const bool flip = rng.bernoulli(p_flip);
    if (flip) flips.push_back(static_cast<std::uint32_t>(j + 1));
    y.push_back(x.bit(kept[j] - 1) != flip);
  }
  const std::size_t m = kept.size();
  return {std::move(y), PatternPair(TransmissionPattern(n, std::move(kept)),
                                    SubstitutionPattern(m, std::move(flips)))};
}

PatternPair sample_fixed_count_pair(const FixedCountParams& fc, Philox& rng) {
  const std::uint64_t kept_rank = rng.uniform_below(combination_count(fc.n, fc.n - fc.q_d));
  const std::uint64_t flip_rank =
      rng.uniform_below(combination_count(fc.n - fc.q_d, fc.q_s));
  return PatternPair(
      TransmissionPattern(fc.n, combination_unrank(fc.n, fc.n - fc.q_d, kept_rank)),
      SubstitutionPattern(fc.n - fc.q_d, combination_unrank(fc.n - fc.q_d, fc.q_s, flip_rank)));
}

}  // namespace dsc
