#include "dsc/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "dsc/rng.hpp"

using namespace dsc;

TEST_CASE("binary entropy values") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  // high-precision reference: H(0.11) = 0.4999159581645280
  CHECK(binary_entropy(0.11) == doctest::Approx(0.4999159581645280).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(std::nan("")), std::domain_error);
}

TEST_CASE("binary entropy symmetry") {
  Philox rng(2024, 0);
  for (int i = 0; i < 2000; ++i) {
    const double p = rng.next_double();
    CHECK(binary_entropy(p) == doctest::Approx(binary_entropy(1.0 - p)).epsilon(1e-12));
  }
}

TEST_CASE("exact binomial") {
  CHECK(exact_binomial(5, 2) == 10);
  CHECK(exact_binomial(8, 8) == 1);
  CHECK(exact_binomial(20, 10) == 184756);
  CHECK(exact_binomial(64, 32) == 1832624140942590534ull);
  CHECK(exact_binomial(0, 0) == 1);
  CHECK_THROWS_AS(exact_binomial(65, 1), std::domain_error);
  CHECK_THROWS_AS(exact_binomial(4, 5), std::domain_error);
}

TEST_CASE("binomial_checked") {
  CHECK(binomial_checked(100, 0) == 1);
  CHECK(binomial_checked(100, 3) == 161700);
  CHECK(binomial_checked(1000, 5) == 8250291250200ull);
  CHECK(!binomial_checked(100, 50).has_value());  // ~1e29
  CHECK(!binomial_checked(10, 11).has_value());
}

TEST_CASE("log2 binomial values") {
  CHECK(log2_binomial(4, 2) == doctest::Approx(2.584962500721156).epsilon(1e-12));
  CHECK(log2_binomial(10, 0) == 0.0);
  CHECK(log2_binomial(123456, 0) == 0.0);
  // C(30,15) = 155117520
  CHECK(log2_binomial(30, 15) == doctest::Approx(27.208786402208185).epsilon(1e-12));
  CHECK_THROWS_AS(log2_binomial(4, 5), std::domain_error);
}

TEST_CASE("log2 binomial large-n path agrees with exact integers") {
  // these values fit in 64 bits, so the compensated-sum path can be checked
  // against exact integer arithmetic
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {
      {65, 30}, {80, 12}, {1000, 5}, {100000, 3}, {1000000, 3}, {10000000, 2}};
  for (const auto& [n, k] : cases) {
    const auto exact = binomial_checked(n, k);
    REQUIRE(exact.has_value());
    const double reference = std::log2(static_cast<double>(*exact));
    CHECK(log2_binomial(n, k) == doctest::Approx(reference).epsilon(1e-12));
  }
}

TEST_CASE("log2 binomial symmetry and exact-path agreement") {
  for (unsigned n = 0; n <= 64; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const double lhs = log2_binomial(n, k);
      CHECK(lhs == doctest::Approx(log2_binomial(n, n - k)).epsilon(1e-12));
      const double direct = std::log2(static_cast<double>(exact_binomial(n, k)));
      CHECK(std::abs(lhs - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
  CHECK(log2_binomial(100001, 70000) ==
        doctest::Approx(log2_binomial(100001, 30001)).epsilon(1e-12));
}

TEST_CASE("binomial sandwich from the subset-count estimates") {
  // k log2(n/k) <= log2 C(n,k) <= k log2(n e / k)
  const double e = 2.718281828459045235;
  for (const std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{10000}}) {
    for (const double p : {0.01, 0.1}) {
      const std::uint64_t k = static_cast<std::uint64_t>(p * static_cast<double>(n));
      REQUIRE(static_cast<double>(k) == p * static_cast<double>(n));  // np integral
      const double value = log2_binomial(n, k);
      const double kd = static_cast<double>(k);
      const double nd = static_cast<double>(n);
      CHECK(value >= kd * std::log2(nd / kd));
      CHECK(value <= kd * std::log2(nd * e / kd));
    }
  }
}
