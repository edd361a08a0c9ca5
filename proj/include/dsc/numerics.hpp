#ifndef DSC_NUMERICS_HPP
#define DSC_NUMERICS_HPP

#include <cstdint>
#include <optional>

namespace dsc {

/// Binary entropy in bits, with the 0*log2(0) = 0 convention.
/// Throws std::domain_error for p outside [0,1].
double binary_entropy(double p);

/// Exact C(n,k) for n <= 64 (every value fits in 64 bits).
std::uint64_t exact_binomial(unsigned n, unsigned k);

/// C(n,k) for arbitrary n, if the exact value fits in 64 bits.
std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k);

/// log2 C(n,k) without overflow for n up to at least 1e7.
/// Exact-integer path for n <= 64, compensated sum of log ratios otherwise;
/// relative error stays below 1e-12 across the supported range.
double log2_binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dsc

#endif
