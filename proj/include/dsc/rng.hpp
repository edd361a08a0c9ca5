#ifndef DSC_RNG_HPP
#define DSC_RNG_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace dsc {

// Philox4x32-10 counter-based generator. A stream is identified by
// (seed, stream); distinct stream ids never share a counter block, which is
// what makes partitioned Monte Carlo runs reproducible regardless of how
// trials are split across workers.
class Philox {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox() : Philox(0, 0) {}
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  // One keyed permutation of a 128-bit counter block.
  static Block block(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{0xD2511F53} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
      key[0] += 0x9E3779B9;
      key[1] += 0xBB67AE85;
    }
    return ctr;
  }

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  /// Uniform double in [0,1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  /// Unbiased uniform integer in [0, bound) via masked rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("uniform_below: bound must be positive");
    if (bound == 1) return 0;
    const int bits = 64 - std::countl_zero(bound - 1);
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (;;) {
      const std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

 private:
  void refill() {
    buf_ = block({static_cast<std::uint32_t>(block_index_),
                  static_cast<std::uint32_t>(block_index_ >> 32),
                  static_cast<std::uint32_t>(stream_),
                  static_cast<std::uint32_t>(stream_ >> 32)},
                 key_);
    ++block_index_;
    pos_ = 0;
  }

  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Block buf_{};
  int pos_ = 4;
};

}  // namespace dsc

#endif
