#include "dsc/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dsc/errors.hpp"
#include "dsc/numerics.hpp"

namespace dsc {

namespace {

void check_strictly_increasing(const std::vector<std::uint32_t>& v, std::size_t upper,
                               const char* what) {
  std::uint32_t prev = 0;
  for (std::uint32_t x : v) {
    if (x <= prev || x > upper)
      throw std::invalid_argument(std::string(what) +
                                  ": indices must be strictly increasing within range");
    prev = x;
  }
}

}  // namespace

TransmissionPattern::TransmissionPattern(std::size_t parent_length,
                                         std::vector<std::uint32_t> kept)
    : parent_length_(parent_length), kept_(std::move(kept)) {
  if (kept_.size() > parent_length_)
    throw std::invalid_argument("TransmissionPattern: more kept positions than bits");
  check_strictly_increasing(kept_, parent_length_, "TransmissionPattern");
}

TransmissionPattern TransmissionPattern::identity(std::size_t n) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 1u);
  return TransmissionPattern(n, std::move(all));
}

SubstitutionPattern::SubstitutionPattern(std::size_t output_length,
                                         std::vector<std::uint32_t> flips)
    : output_length_(output_length), flips_(std::move(flips)) {
  if (flips_.size() > output_length_)
    throw std::invalid_argument("SubstitutionPattern: more flips than output bits");
  check_strictly_increasing(flips_, output_length_, "SubstitutionPattern");
}

SubstitutionPattern SubstitutionPattern::none(std::size_t output_length) {
  return SubstitutionPattern(output_length, {});
}

PatternPair::PatternPair(TransmissionPattern t, SubstitutionPattern s)
    : transmission(std::move(t)), substitution(std::move(s)) {
  if (substitution.output_length() != transmission.output_length())
    throw std::invalid_argument("PatternPair: substitution pattern length mismatch");
}

PatternPair PatternPair::identity(std::size_t n) {
  return PatternPair(TransmissionPattern::identity(n), SubstitutionPattern::none(n));
}

BitString apply(const BitString& x, const PatternPair& a) {
  if (x.size() != a.parent_length())
    throw std::domain_error("apply: input length does not match pattern parent length");
  const auto& kept = a.transmission.kept();
  const auto& flips = a.substitution.flips();
  BitString out(kept.size());
  std::size_t f = 0;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    bool b = x.bit(kept[j] - 1);
    if (f < flips.size() && flips[f] == j + 1) {
      b = !b;
      ++f;
    }
    out.set_bit(j, b);
  }
  return out;
}

std::vector<std::uint32_t> transmission_discrepancy(const TransmissionPattern& a,
                                                    const TransmissionPattern& b) {
  if (a.parent_length() != b.parent_length() || a.output_length() != b.output_length())
    throw std::domain_error("transmission_discrepancy: patterns must have equal shape");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < a.kept().size(); ++i)
    if (a.kept()[i] != b.kept()[i]) out.push_back(static_cast<std::uint32_t>(i + 1));
  return out;
}

std::vector<std::uint32_t> substitution_symmetric_difference(const SubstitutionPattern& a,
                                                             const SubstitutionPattern& b) {
  if (a.output_length() != b.output_length())
    throw std::domain_error("substitution_symmetric_difference: output lengths differ");
  std::vector<std::uint32_t> out;
  std::set_symmetric_difference(a.flips().begin(), a.flips().end(), b.flips().begin(),
                                b.flips().end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const std::uint32_t> sub, std::span<const std::uint32_t> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::uint64_t combination_count(std::size_t n, std::size_t k) {
  if (k > n) throw std::domain_error("combination_count: k must be <= n");
  auto c = binomial_checked(n, k);
  if (!c) throw CapExceededError("combination_count: C(n,k) exceeds 64 bits");
  return *c;
}

std::vector<std::uint32_t> combination_unrank(std::size_t n, std::size_t k,
                                              std::uint64_t rank) {
  if (rank >= combination_count(n, k))
    throw std::domain_error("combination_unrank: rank out of range");
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::uint32_t next = 1;
  std::size_t remaining = k;
  while (remaining > 0) {
    // combinations starting with `next` cover C(n-next, remaining-1) ranks
    const std::uint64_t with_next = combination_count(n - next, remaining - 1);
    if (rank < with_next) {
      out.push_back(next);
      --remaining;
    } else {
      rank -= with_next;
    }
    ++next;
  }
  return out;
}

bool next_combination(std::vector<std::uint32_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

TransmissionPatternStream::TransmissionPatternStream(std::size_t n, std::size_t q_d)
    : n_(n), q_d_(q_d) {
  if (q_d > n) throw std::domain_error("TransmissionPatternStream: q_d must be <= n");
  count_ = combination_count(n, n - q_d);
  kept_.resize(n - q_d);
  std::iota(kept_.begin(), kept_.end(), 1u);
}

void TransmissionPatternStream::seek(std::uint64_t rank) {
  if (rank > count_) throw std::domain_error("TransmissionPatternStream::seek: rank out of range");
  emitted_ = rank;
  if (rank < count_) kept_ = combination_unrank(n_, n_ - q_d_, rank);
}

bool TransmissionPatternStream::next(TransmissionPattern& out) {
  if (emitted_ >= count_) return false;
  out = TransmissionPattern(n_, kept_);
  ++emitted_;
  if (emitted_ < count_) next_combination(kept_, n_);
  return true;
}

PatternPairStream::PatternPairStream(std::size_t n, std::size_t q_d, std::size_t q_s)
    : n_(n), q_d_(q_d), q_s_(q_s) {
  if (q_d > n) throw std::domain_error("PatternPairStream: q_d must be <= n");
  if (q_s > n - q_d) throw std::domain_error("PatternPairStream: q_s must be <= n - q_d");
  inner_count_ = combination_count(n - q_d, q_s);
  const std::uint64_t outer = combination_count(n, n - q_d);
  if (inner_count_ != 0 && outer > ~std::uint64_t{0} / inner_count_)
    throw CapExceededError("PatternPairStream: pair count exceeds 64 bits");
  count_ = outer * inner_count_;
  seek(0);
}

void PatternPairStream::seek(std::uint64_t rank) {
  if (rank > count_) throw std::domain_error("PatternPairStream::seek: rank out of range");
  emitted_ = rank;
  if (rank < count_) {
    kept_ = combination_unrank(n_, n_ - q_d_, rank / inner_count_);
    flips_ = combination_unrank(n_ - q_d_, q_s_, rank % inner_count_);
  }
}

bool PatternPairStream::next(PatternPair& out) {
  if (emitted_ >= count_) return false;
  out = PatternPair(TransmissionPattern(n_, kept_), SubstitutionPattern(n_ - q_d_, flips_));
  ++emitted_;
  if (emitted_ < count_) {
    if (!next_combination(flips_, n_ - q_d_)) {
      std::iota(flips_.begin(), flips_.end(), 1u);
      next_combination(kept_, n_);
    }
  }
  return true;
}

std::vector<PatternPair> all_pattern_pairs(std::size_t n, std::size_t q_d, std::size_t q_s) {
  PatternPairStream stream(n, q_d, q_s);
  std::vector<PatternPair> out;
  out.reserve(stream.count());
  PatternPair p = PatternPair::identity(0);
  while (stream.next(p)) out.push_back(p);
  return out;
}

CompiledPattern compile(const PatternPair& a) {
  if (a.parent_length() > 64) throw std::domain_error("compile: parent length exceeds 64");
  CompiledPattern c;
  c.parent_length = static_cast<std::uint32_t>(a.parent_length());
  c.output_length = static_cast<std::uint32_t>(a.output_length());
  for (std::uint32_t pos : a.transmission.kept()) c.keep_mask |= std::uint64_t{1} << (pos - 1);
  for (std::uint32_t pos : a.substitution.flips()) c.flip_mask |= std::uint64_t{1} << (pos - 1);
  return c;
}

std::uint64_t apply_packed(std::uint64_t x, const CompiledPattern& a) {
  // software bit-extract; kept positions come out in increasing order
  std::uint64_t m = a.keep_mask;
  std::uint64_t out = 0;
  int j = 0;
  while (m != 0) {
    const std::uint64_t low = m & (~m + 1);
    if (x & low) out |= std::uint64_t{1} << j;
    ++j;
    m ^= low;
  }
  return out ^ a.flip_mask;
}

}  // namespace dsc
