#ifndef DSC_RUNNER_HPP
#define DSC_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsc/bounds.hpp"
#include "dsc/experiments.hpp"
#include "dsc/oracles.hpp"

namespace dsc {

// Batch sweep over (p_d, p_s, n) at one delta. Rows come out sorted by grid
// point regardless of the worker count; per-point evaluation failures become
// status rows, not aborts.
struct BoundsSweepConfig {
  std::vector<double> p_d, p_s;
  std::vector<std::uint64_t> n;
  double delta = 0.5;
  BoundOptions options;
  int jobs = 1;
};

void run_bounds_sweep(const BoundsSweepConfig& cfg, std::ostream& csv);
void run_bounds_sweep_file(const BoundsSweepConfig& cfg, const std::string& csv_path);

// The small-n verification suite: exhaustive collision case table,
// confusable-count ceiling, bad-input count ceiling, and guesser ceiling on
// random codebooks. Defaults match the acceptance grids.
struct VerifySweepConfig {
  std::size_t collision_max_n = 7;
  std::size_t collision_max_q = 2;

  std::size_t confusable_max_n = 7;
  std::size_t confusable_max_t = 4;
  std::size_t confusable_max_s = 2;

  std::size_t ts_bad_max_n = 8;
  std::size_t ts_bad_max_q_d = 2;
  std::size_t ts_bad_max_q_s = 1;
  std::size_t ts_bad_max_t = 4;
  std::size_t ts_bad_max_s = 1;

  std::size_t guesser_codebooks = 50;

  std::uint64_t sample_limit = 0;  // 0 = exhaustive collision pair scans
  std::uint64_t seed = 1;
  int jobs = 1;
  OracleCaps caps = OracleCaps::from_env();

  // Test hook: shifts the confusable-count ceiling by this many bits before
  // comparing, to prove the suite actually detects violations.
  double confusable_bound_adjust_log2 = 0.0;
};

struct VerifyOutcome {
  std::vector<LemmaReport> reports;
  std::uint64_t violations = 0;
};

VerifyOutcome run_verify(const VerifySweepConfig& cfg);
/// Writes the text report (and optionally CSV); returns the outcome.
VerifyOutcome run_verify_files(const VerifySweepConfig& cfg, const std::string& text_path,
                               const std::string& csv_path);

/// Decode experiment with optional summary and per-trial CSV emission
/// (columns: trial,qd,qs,success).
DecodeSummary run_decode_files(const DecodeTrialConfig& cfg, const std::string& summary_path,
                               const std::string& trials_csv_path);

ConcentrationReport run_concentration_files(const ConcentrationConfig& cfg,
                                            const std::string& report_path);

DecompositionReport run_decompose_files(std::size_t n, const std::string& p_d_decimal,
                                        const std::string& p_s_decimal, std::uint64_t trials,
                                        std::uint64_t seed, int jobs,
                                        const std::string& report_path);

}  // namespace dsc

#endif
