#ifndef DSC_EXPERIMENTS_HPP
#define DSC_EXPERIMENTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsc/bitstring.hpp"
#include "dsc/bounds.hpp"
#include "dsc/channel.hpp"
#include "dsc/rng.hpp"

namespace dsc {

/// True iff some pattern pair with exactly |x|-|y| deletions and exactly
/// q_s substitutions maps x to y, i.e. some length-|y| subsequence of x has
/// Hamming distance exactly q_s from y. Dynamic program, no enumeration.
bool reachable(const BitString& x, const BitString& y, std::size_t q_s);

/// Same with at most max_q_s substitutions.
bool reachable_within(const BitString& x, const BitString& y, std::size_t max_q_s);

/// Lexicographically first codeword from which y is reachable with exactly
/// q_s substitutions; nullopt when none is (abstain).
std::optional<BitString> consistent_decoder(const BitString& y,
                                            std::span<const BitString> codebook,
                                            std::size_t q_s);

/// N distinct uniform codewords of length n, sorted lexicographically.
std::vector<BitString> sample_codebook(std::size_t n, std::size_t count, Philox& rng);

/// Wilson score interval bounds at confidence z (two-sided).
double wilson_lower(std::uint64_t successes, std::uint64_t trials, double z);
double wilson_upper(std::uint64_t successes, std::uint64_t trials, double z);

/// z for a two-sided 99% interval.
inline constexpr double kZ99 = 2.5758293035489004;

struct DecodeTrialConfig {
  std::size_t n;
  std::size_t codebook_size;
  FixedCountParams fc;
  std::uint64_t trials;
  std::uint64_t seed;
  int jobs = 1;
  BoundOptions options{};  // for the codebook-ceiling check
};

struct DecodeSummary {
  std::size_t n = 0, codebook_size = 0, q_d = 0, q_s = 0;
  std::uint64_t seed = 0, trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t guesser_successes = 0;
  std::uint64_t none_consistent = 0;
  double delta_hat = 0.0, ci_lo = 0.0, ci_hi = 0.0;
  double log2_codebook = 0.0;
  // codebook ceiling evaluated at the lower CI endpoint of delta_hat;
  // absent when q_d or q_s is zero (the ceiling needs both >= 1)
  std::optional<double> rhs_log2_codebook;
  bool bound_ok = true;
  double guesser_rate = 0.0;
  double guesser_bound = 0.0;   // 2^(n-q_d) / (N * #patterns)
  double optimal_guesser = 0.0; // exact Bayes success for this codebook
  bool guesser_ok = true;
};

/// Uniform codeword + uniform fixed-count realization per trial; decode with
/// the lexicographically-first consistent decoder; track decoder and
/// two-stage guesser success. Deterministic given the seed, for any jobs.
/// success_log, when given, receives one 0/1 flag per trial.
DecodeSummary run_decode_experiment(const DecodeTrialConfig& cfg,
                                    std::vector<std::uint8_t>* success_log = nullptr);

/// Line-oriented, byte-stable rendering.
std::string format_decode_summary(const DecodeSummary& s);

struct ConcentrationConfig {
  std::size_t n;
  double p;
  std::uint64_t trials;
  double delta;
  std::uint64_t seed;
  ChernoffLogBase log_base = ChernoffLogBase::natural;
  int jobs = 1;
};

struct ConcentrationReport {
  std::size_t n = 0;
  double p = 0.0, delta = 0.0;
  std::uint64_t trials = 0, seed = 0;
  double gamma = 0.0;
  double bound = 0.0;  // 2 exp(-mu gamma^2 / 3)
  std::uint64_t tail_count = 0;
  double empirical = 0.0;
  double sampling_sigma = 0.0;  // sqrt(bound (1-bound) / trials)
  bool pass_vs_bound = false;
  bool pass_vs_delta4 = false;
  bool below_min_n = false;
  std::uint64_t min_n = 0;
};

/// Monte Carlo tail mass of |q - np| > gamma*np for q ~ Binomial(n, p),
/// against the multiplicative Chernoff ceiling.
ConcentrationReport run_concentration_check(const ConcentrationConfig& cfg);

std::string format_concentration_report(const ConcentrationReport& r);

// ---- channel decomposition ----

using Rational = boost::multiprecision::cpp_rational;

/// Exact rational from a plain decimal string like "0.3" or "1".
Rational parse_decimal(const std::string& text);

struct DecompositionReport {
  std::size_t n = 0;
  std::string p_d, p_s;  // exact decimal inputs as given
  bool exact_checked = false;
  bool exact_equal = false;
  std::uint64_t inputs_checked = 0;
  std::uint64_t trials = 0, seed = 0;
  double chi_square = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  double significance = 0.0;
  bool sampled_pass = false;
};

/// Exact part (n <= exact_cap): enumerate the full conditional output law of
/// the one-shot channel and of the delete-then-flip construction for every
/// input and compare as exact rationals. Sampled part: chi-square of the
/// sampled (q_d, q_s) joint against the trinomial law.
DecompositionReport verify_decomposition(std::size_t n, const Rational& p_d, const Rational& p_s,
                                         std::uint64_t trials, std::uint64_t seed,
                                         double significance = 1e-3, std::size_t exact_cap = 8,
                                         int jobs = 1);

std::string format_decomposition_report(const DecompositionReport& r);

/// Exact conditional output law of the one-shot channel for input x:
/// realization probability p_d^qd p_s^qs p_c^(n-qd-qs) summed per output.
std::vector<std::pair<BitString, Rational>> one_stage_output_law(const BitString& x,
                                                                 const Rational& p_d,
                                                                 const Rational& p_s);

/// Same for the delete-then-flip construction with flip rate p_s/(1-p_d).
std::vector<std::pair<BitString, Rational>> two_stage_output_law(const BitString& x,
                                                                 const Rational& p_d,
                                                                 const Rational& p_s);

}  // namespace dsc

#endif
