#include "dsc/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dsc {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p must lie in [0,1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

namespace {

// Pascal's triangle for n <= 64; C(64,32) = 1832624140942590534 fits uint64.
struct PascalTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  PascalTable() {
    for (unsigned n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (unsigned k = 1; k <= n; ++k) {
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
      }
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

std::uint64_t exact_binomial(unsigned n, unsigned k) {
  if (n > 64) throw std::domain_error("exact_binomial: n must be <= 64");
  if (k > n) throw std::domain_error("exact_binomial: k must be <= n");
  return pascal().c[n][k];
}

std::optional<std::uint64_t> binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return std::nullopt;
  if (n <= 64) return pascal().c[n][k];
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: a prefix product of a binomial row
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

double log2_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::domain_error("log2_binomial: k must be <= n");
  if (n <= 64) return std::log2(static_cast<double>(pascal().c[n][k]));
  if (k > n - k) k = n - k;
  // Kahan-compensated sum of log2((n-i)/(i+1)); keeps the absolute error
  // near k*eps so the relative error stays below 1e-12 even at k ~ n/2.
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    double term = std::log2(static_cast<double>(n - i) / static_cast<double>(i + 1));
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace dsc
