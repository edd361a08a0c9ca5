#ifndef DSC_PATTERNS_HPP
#define DSC_PATTERNS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dsc/bitstring.hpp"

namespace dsc {

// Index sets use 1-based positions, converted to 0-based only when touching
// BitString storage.

/// The strictly increasing list of input positions that survive deletion.
class TransmissionPattern {
 public:
  TransmissionPattern(std::size_t parent_length, std::vector<std::uint32_t> kept);

  static TransmissionPattern identity(std::size_t n);

  std::size_t parent_length() const { return parent_length_; }
  const std::vector<std::uint32_t>& kept() const { return kept_; }
  std::size_t deletions() const { return parent_length_ - kept_.size(); }
  std::size_t output_length() const { return kept_.size(); }

  bool operator==(const TransmissionPattern&) const = default;

 private:
  std::size_t parent_length_;
  std::vector<std::uint32_t> kept_;
};

/// The strictly increasing list of output positions that get flipped.
class SubstitutionPattern {
 public:
  SubstitutionPattern(std::size_t output_length, std::vector<std::uint32_t> flips);

  static SubstitutionPattern none(std::size_t output_length);

  std::size_t output_length() const { return output_length_; }
  const std::vector<std::uint32_t>& flips() const { return flips_; }
  std::size_t substitutions() const { return flips_.size(); }

  bool operator==(const SubstitutionPattern&) const = default;

 private:
  std::size_t output_length_;
  std::vector<std::uint32_t> flips_;
};

/// One full channel realization: delete, then flip survivors.
struct PatternPair {
  PatternPair(TransmissionPattern t, SubstitutionPattern s);

  static PatternPair identity(std::size_t n);

  TransmissionPattern transmission;
  SubstitutionPattern substitution;

  std::size_t parent_length() const { return transmission.parent_length(); }
  std::size_t output_length() const { return transmission.output_length(); }
  std::size_t deletions() const { return transmission.deletions(); }
  std::size_t substitutions() const { return substitution.substitutions(); }

  bool operator==(const PatternPair&) const = default;
};

/// Push x through the realization: keep the non-deleted bits in order, then
/// flip the listed output positions.
BitString apply(const BitString& x, const PatternPair& a);

/// Positions (by index within the pattern) where two equal-shape
/// transmission patterns disagree. Defined only for equal parent length and
/// equal deletion count.
std::vector<std::uint32_t> transmission_discrepancy(const TransmissionPattern& a,
                                                    const TransmissionPattern& b);

/// Elements in exactly one of the two flip sets.
std::vector<std::uint32_t> substitution_symmetric_difference(const SubstitutionPattern& a,
                                                             const SubstitutionPattern& b);

/// Subset test for sorted index sets.
bool is_subset(std::span<const std::uint32_t> sub, std::span<const std::uint32_t> super);

// ---- combination plumbing (lexicographic, 1-based values) ----

/// C(n,k); throws CapExceededError if the count does not fit in 64 bits.
std::uint64_t combination_count(std::size_t n, std::size_t k);

/// The rank-th k-subset of [1..n] in lexicographic order.
std::vector<std::uint32_t> combination_unrank(std::size_t n, std::size_t k, std::uint64_t rank);

/// Advance c to its lexicographic successor; false when c was the last one.
bool next_combination(std::vector<std::uint32_t>& c, std::size_t n);

/// Streams each of the C(n,q_d) transmission patterns exactly once, in
/// lexicographic order of the kept sequence. seek() enables partitioned
/// parallel scans by rank range.
class TransmissionPatternStream {
 public:
  TransmissionPatternStream(std::size_t n, std::size_t q_d);

  std::uint64_t count() const { return count_; }
  void seek(std::uint64_t rank);
  bool next(TransmissionPattern& out);

 private:
  std::size_t n_, q_d_;
  std::uint64_t count_, emitted_ = 0;
  std::vector<std::uint32_t> kept_;
};

/// Streams all C(n,q_d)*C(n-q_d,q_s) pattern pairs, lexicographic by
/// (kept sequence, flip sequence).
class PatternPairStream {
 public:
  PatternPairStream(std::size_t n, std::size_t q_d, std::size_t q_s);

  std::uint64_t count() const { return count_; }
  void seek(std::uint64_t rank);
  bool next(PatternPair& out);

 private:
  std::size_t n_, q_d_, q_s_;
  std::uint64_t count_, inner_count_, emitted_ = 0;
  std::vector<std::uint32_t> kept_, flips_;
};

/// Materialize the full pair stream (small n only).
std::vector<PatternPair> all_pattern_pairs(std::size_t n, std::size_t q_d, std::size_t q_s);

// ---- packed fast path for n <= 64 ----

// keep_mask has input-position bits, flip_mask output-position bits; apply
// is "extract kept bits, xor flips".
struct CompiledPattern {
  std::uint64_t keep_mask = 0;
  std::uint64_t flip_mask = 0;
  std::uint32_t parent_length = 0;
  std::uint32_t output_length = 0;
};

CompiledPattern compile(const PatternPair& a);
std::uint64_t apply_packed(std::uint64_t x, const CompiledPattern& a);

}  // namespace dsc

#endif
