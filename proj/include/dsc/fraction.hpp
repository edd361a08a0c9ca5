#ifndef DSC_FRACTION_HPP
#define DSC_FRACTION_HPP

#include <cstdint>
#include <stdexcept>

namespace dsc {

// Exact nonnegative fraction for oracle verdicts. Comparisons cross-multiply
// in 128 bits; no floating point is involved in any check.
struct ExactFraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  ExactFraction() = default;
  ExactFraction(std::uint64_t num, std::uint64_t den) : numerator(num), denominator(den) {
    if (den == 0) throw std::domain_error("ExactFraction: zero denominator");
    if (num > den) throw std::domain_error("ExactFraction: probability above one");
  }

  bool is_zero() const { return numerator == 0; }
  bool is_one() const { return numerator == denominator; }

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }

  bool operator==(const ExactFraction& o) const {
    return static_cast<unsigned __int128>(numerator) * o.denominator ==
           static_cast<unsigned __int128>(o.numerator) * denominator;
  }

  /// this <= num/den, exactly.
  bool leq(std::uint64_t num, std::uint64_t den) const {
    return static_cast<unsigned __int128>(numerator) * den <=
           static_cast<unsigned __int128>(num) * denominator;
  }

  /// this <= 2^-exponent, exactly.
  bool at_most_inverse_pow2(unsigned exponent) const {
    if (numerator == 0) return true;
    if (exponent >= 64) return false;  // numerator << exponent >= 2^64 > denominator
    return (static_cast<unsigned __int128>(numerator) << exponent) <= denominator;
  }
};

}  // namespace dsc

#endif
