#include "dsc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "doctest.h"
#include "dsc/errors.hpp"
#include "dsc/numerics.hpp"

using namespace dsc;

TEST_CASE("gallager lower bound") {
  CHECK(gallager_lower_bound(ChannelParams(0, 0)) == 1.0);
  // symmetric in the two error masses
  CHECK(gallager_lower_bound(ChannelParams(0.07, 0.21)) ==
        doctest::Approx(gallager_lower_bound(ChannelParams(0.21, 0.07))).epsilon(1e-12));
  // high-precision reference: 1 + 0.1 log2 0.1 + 0.9 log2 0.9
  CHECK(gallager_lower_bound(ChannelParams(0.1, 0)) ==
        doctest::Approx(0.5310044064107188).epsilon(1e-12));
}

TEST_CASE("asymptotic capacity estimate") {
  CHECK(asymptotic_capacity_estimate(ChannelParams(0, 0)) == 1.0);
  CHECK(asymptotic_capacity_estimate(ChannelParams(0.5, 0)) == doctest::Approx(0.0));
  // high-precision reference: 1 - 2 H(0.001) = 0.9771844845250777
  CHECK(asymptotic_capacity_estimate(ChannelParams(0.001, 0.001)) ==
        doctest::Approx(0.9771844845250777).epsilon(1e-12));
  // the two closed forms collapse together as p -> 0
  CHECK(std::abs(gallager_lower_bound(ChannelParams(0.001, 0.001)) -
                 asymptotic_capacity_estimate(ChannelParams(0.001, 0.001))) < 0.01);
}

TEST_CASE("confusability threshold") {
  // ceil(1 + 3 log2(100e) + 3 log2(99e) + 1) = 51
  CHECK(confusability_threshold(100, 1, 1, 1.0) == 51);
  CHECK_THROWS_AS(confusability_threshold(100, 0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(confusability_threshold(100, 1, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(confusability_threshold(100, 1, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(confusability_threshold(100, 1, 1, 1.5), std::domain_error);
  CHECK_THROWS_AS(confusability_threshold(10, 11, 1, 1.0), std::domain_error);

  // the statement form simply drops the integer leading term
  for (std::uint64_t q_d : {1, 3, 9})
    for (std::uint64_t q_s : {1, 2, 7}) {
      const long long with = confusability_threshold(1000, q_d, q_s, 0.5);
      const long long without =
          confusability_threshold(1000, q_d, q_s, 0.5, TFormulaVariant::statement);
      CHECK(with == without + static_cast<long long>(q_d));
    }
}

TEST_CASE("threshold is monotone and dominates the counts") {
  long long prev = 0;
  for (std::uint64_t q_d : {1, 2, 4, 8}) {
    const long long t = confusability_threshold(1000, q_d, 1, 0.5);
    CHECK(t >= prev);
    prev = t;
  }
  prev = 0;
  for (std::uint64_t q_s : {1, 2, 4, 8}) {
    const long long t = confusability_threshold(1000, 1, q_s, 0.5);
    CHECK(t >= prev);
    prev = t;
  }
  prev = 0;
  for (double delta : {1.0, 0.5, 0.25, 0.01}) {
    const long long t = confusability_threshold(1000, 1, 1, delta);
    CHECK(t >= prev);
    prev = t;
  }
  // t >= 3 max(q_d, q_s) across a wide sweep
  for (std::uint64_t n : {100ull, 10000ull, 1000000ull}) {
    for (std::uint64_t q_d : {std::uint64_t{1}, n / 100, n / 10}) {
      for (std::uint64_t q_s : {std::uint64_t{1}, n / 100, n / 10}) {
        if (q_d == 0 || q_s == 0 || q_d + q_s > n) continue;
        const long long t = confusability_threshold(n, q_d, q_s, 0.5);
        CHECK(t >= 3 * static_cast<long long>(std::max(q_d, q_s)));
      }
    }
  }
}

TEST_CASE("ambiguity factor") {
  // log2(9 (2e)^2 15 15^4) term by term
  const double expected = std::log2(9.0) + 2.0 * std::log2(2.0 * 2.718281828459045235) +
                          5.0 * std::log2(15.0);
  CHECK(ambiguity_factor_log2(1, 1, 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(ambiguity_factor_log2(1, 1, 3) == doctest::Approx(27.58976806126283).epsilon(1e-12));
  // the substitution factor vanishes at q_s = 0
  CHECK(ambiguity_factor_log2(1, 0, 3) ==
        doctest::Approx(ambiguity_factor_log2(1, 1, 3) - std::log2(15.0)).epsilon(1e-12));
  CHECK_THROWS_AS(ambiguity_factor_log2(0, 1, 3), std::domain_error);
  CHECK_THROWS_AS(ambiguity_factor_log2(1, 1, 0), std::domain_error);

  // strictly increasing in t from 3*max(q_d,q_s) upward
  for (std::uint64_t q_d : {1, 2, 5})
    for (std::uint64_t q_s : {1, 2, 5}) {
      long long t = 3 * static_cast<long long>(std::max(q_d, q_s));
      double prev = ambiguity_factor_log2(q_d, q_s, t);
      for (int step = 0; step < 50; ++step) {
        const double next = ambiguity_factor_log2(q_d, q_s, ++t);
        CHECK(next > prev);
        prev = next;
      }
    }
}

TEST_CASE("fixed-count codebook ceiling") {
  const BoundBreakdown b = fixed_count_codebook_bound(200, 3, 2, 0.5);
  CHECK(b.t == confusability_threshold(200, 3, 2, 0.5));
  CHECK(b.n_minus_qd == 197.0);
  CHECK(b.minus_log_binom_deletion == doctest::Approx(-log2_binomial(200, 3)).epsilon(1e-12));
  CHECK(b.minus_log_binom_substitution ==
        doctest::Approx(-log2_binomial(197, 2)).epsilon(1e-12));
  CHECK(b.log_delta_term == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.log_alpha == doctest::Approx(ambiguity_factor_log2(3, 2, b.t)).epsilon(1e-12));
  const double sum = b.n_minus_qd + b.minus_log_binom_deletion + b.minus_log_binom_substitution +
                     b.log_delta_term + b.log_alpha;
  CHECK(std::abs(b.total_log2_codebook - sum) <= 1e-9);
  // added terms are nonnegative: alpha >= 1 and 2/delta >= 2
  CHECK(b.total_log2_codebook >=
        b.n_minus_qd + b.minus_log_binom_deletion + b.minus_log_binom_substitution);
  CHECK_THROWS_AS(fixed_count_codebook_bound(200, 0, 2, 0.5), std::domain_error);

  // halving delta adds exactly one bit plus the threshold-induced change
  const BoundBreakdown half = fixed_count_codebook_bound(200, 3, 2, 0.25);
  const double alpha_shift = ambiguity_factor_log2(3, 2, half.t) -
                             ambiguity_factor_log2(3, 2, b.t);
  CHECK(half.total_log2_codebook - b.total_log2_codebook ==
        doctest::Approx(1.0 + alpha_shift).epsilon(1e-9));
}

TEST_CASE("chernoff gamma") {
  // structural identity: gamma^2 n p / 3 = log(8/delta)
  for (const auto& [n, p, delta] :
       std::vector<std::tuple<std::uint64_t, double, double>>{
           {1000, 0.1, 0.5}, {50000, 0.01, 0.9}, {3328, 0.01, 0.5}}) {
    const double gamma = chernoff_gamma(n, p, delta);
    CHECK(gamma * gamma * static_cast<double>(n) * p / 3.0 ==
          doctest::Approx(std::log(8.0 / delta)).epsilon(1e-12));
  }
  // vanishes as n grows
  CHECK(chernoff_gamma(100000000, 0.1, 0.5) < 0.001);
  // base-2 variant inflates gamma by sqrt(1/ln 2)
  CHECK(chernoff_gamma(1000, 0.1, 0.5, ChernoffLogBase::base2) ==
        doctest::Approx(chernoff_gamma(1000, 0.1, 0.5) / std::sqrt(std::log(2.0)))
            .epsilon(1e-12));
  CHECK_THROWS_AS(chernoff_gamma(1000, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(chernoff_gamma(1000, 0.1, 1.0), std::domain_error);
}

TEST_CASE("minimum codeword length") {
  // ceil(12 ln 16 / 0.01) = 3328
  CHECK(min_codeword_length(ChannelParams(0.01, 0.01), 0.5) == 3328);
  // the substitution process mean collapses to p_s, so the minimum is
  // driven by whichever probability is smaller
  CHECK(min_codeword_length(ChannelParams(0.04, 0.01), 0.5) ==
        min_codeword_length(ChannelParams(0.01, 0.01), 0.5));
  CHECK(min_codeword_length(ChannelParams(0.01, 0.04), 0.5) ==
        min_codeword_length(ChannelParams(0.01, 0.01), 0.5));
  CHECK_THROWS_AS(min_codeword_length(ChannelParams(0.0, 0.1), 0.5), std::domain_error);

  // gamma at the minimum length respects the half design ceiling
  for (const double p : {0.01, 0.05}) {
    const std::uint64_t n_min = min_codeword_length(ChannelParams(p, p), 0.5);
    const double gamma = chernoff_gamma(n_min, p, 0.5);
    CHECK(gamma <= 0.5 + 1e-12);
    CHECK(gamma > 0.45);
  }
}

TEST_CASE("random-count codebook ceiling") {
  const ChannelParams params(0.01, 0.01);
  const double delta = 0.5;
  CHECK_THROWS_AS(random_count_codebook_bound(1000, params, delta), PreconditionError);
  try {
    random_count_codebook_bound(1000, params, delta);
  } catch (const PreconditionError& e) {
    CHECK(e.required() == 3328);
  }

  const BoundBreakdown b = random_count_codebook_bound(1000000, params, delta);
  CHECK(b.gamma <= 0.5);
  CHECK(b.gamma == doctest::Approx(chernoff_gamma(1000000, 0.01, delta)).epsilon(1e-12));
  CHECK(b.q_d_min == 9711);
  CHECK(b.q_d_max == 10289);
  CHECK(b.q_s_min == 9711);
  CHECK(b.q_s_max == 10289);
  CHECK(b.q_d_min <= static_cast<std::uint64_t>(10000.0 * (1.0 - b.gamma)));
  CHECK(b.q_d_max >= static_cast<std::uint64_t>(10000.0 * (1.0 + b.gamma)));
  const double sum = b.n_minus_qd + b.minus_log_binom_deletion + b.minus_log_binom_substitution +
                     b.log_delta_term + b.log_alpha;
  CHECK(std::abs(b.total_log2_codebook - sum) <= 1e-9);
  CHECK(b.log_delta_term == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(b.total_log2_codebook >=
        b.n_minus_qd + b.minus_log_binom_deletion + b.minus_log_binom_substitution);

  // the three dominant terms already sit near 1 - 2 H(0.01) = 0.8384137
  const double dominant =
      (static_cast<double>(b.n) + b.minus_log_binom_deletion + b.minus_log_binom_substitution) /
      static_cast<double>(b.n);
  CHECK(std::abs(dominant - asymptotic_capacity_estimate(params)) < 0.05);

  // per-process gamma narrows nothing here (p_d == p_s), but must evaluate
  BoundOptions per_process;
  per_process.gamma_variant = GammaVariant::per_process;
  const BoundBreakdown b2 = random_count_codebook_bound(1000000, params, delta, per_process);
  CHECK(b2.q_s_min == b.q_s_min);

  // asymmetric rates: per-process gamma gives the substitution interval its
  // own width
  const ChannelParams asym(0.04, 0.01);
  const BoundBreakdown single = random_count_codebook_bound(100000, asym, delta);
  const BoundBreakdown split = random_count_codebook_bound(100000, asym, delta, per_process);
  CHECK(split.q_s_min < single.q_s_min);  // wider interval from the smaller mean
  CHECK(split.q_s_max > single.q_s_max);
}

TEST_CASE("normalized gap shrinks with n") {
  const ChannelParams params(0.01, 0.01);
  double prev_gap = std::numeric_limits<double>::infinity();
  double prev_rate = std::numeric_limits<double>::infinity();
  for (const std::uint64_t n : {10000ull, 100000ull, 1000000ull, 10000000ull}) {
    const RateGap rg = normalized_gap(n, params, 0.5);
    CHECK(rg.gap > 0.0);
    CHECK(rg.gap < prev_gap);
    CHECK(rg.rate_bound <= prev_rate + 1e-6);
    prev_gap = rg.gap;
    prev_rate = rg.rate_bound;
  }
}

TEST_CASE("bounds csv rows") {
  const std::string header(kBoundsCsvHeader);
  const std::size_t header_fields = std::count(header.begin(), header.end(), ',') + 1;
  auto field_count = [](const std::string& row) {
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), ',')) + 1;
  };

  std::ostringstream ok_row;
  write_bounds_csv_row(ok_row, 100000, ChannelParams(0.01, 0.01), 0.5, {});
  CHECK(ok_row.str().find(",ok\n") != std::string::npos);
  CHECK(ok_row.str().rfind("100000,0.01,0.01,0.5,", 0) == 0);
  CHECK(field_count(ok_row.str()) == header_fields);

  // below the minimum length the row reports a status, not an abort, and
  // keeps every column in place
  std::ostringstream err_row;
  write_bounds_csv_row(err_row, 10, ChannelParams(0.01, 0.01), 0.5, {});
  CHECK(err_row.str().find("ok\n") == std::string::npos);
  CHECK(err_row.str().find("minimum") != std::string::npos);
  CHECK(field_count(err_row.str()) == header_fields);
  // the two always-computable closed forms stay in their columns
  std::istringstream fields(err_row.str());
  std::string field;
  std::vector<std::string> cells;
  while (std::getline(fields, field, ',')) cells.push_back(field);
  REQUIRE(cells.size() == header_fields);
  CHECK(cells[4].empty());   // gamma
  CHECK(cells[12].empty());  // rate_bound
  CHECK(std::stod(cells[13]) ==
        doctest::Approx(gallager_lower_bound(ChannelParams(0.01, 0.01))));
  CHECK(std::stod(cells[14]) ==
        doctest::Approx(asymptotic_capacity_estimate(ChannelParams(0.01, 0.01))));
  CHECK(cells[15].empty());  // gap
}
