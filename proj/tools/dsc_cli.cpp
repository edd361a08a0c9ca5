// Batch front end for the deletion/substitution channel toolkit. All work
// happens behind the C API in libdsc; this binary only parses flags, fills
// config structs, and maps statuses to exit codes:
//   0 success, 1 verification violation, 2 configuration or runtime error.

#include <cinttypes>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsc/capi.h"

namespace {

int exit_code_for(dsc_status status) {
  if (status == DSC_OK) return 0;
  if (status == DSC_ERROR_VERIFICATION) return 1;
  return 2;
}

int report_failure(dsc_status status) {
  std::fprintf(stderr, "error: %s: %s\n", dsc_status_name(status), dsc_last_error_message());
  return exit_code_for(status);
}

struct GlobalFlags {
  std::uint64_t seed = 1;
  std::string out;
  int jobs = 1;
  std::string t_variant = "proof";
  std::string gamma_variant = "single";
  std::string log_base = "mixed";

  dsc_bound_options options() const {
    dsc_bound_options o{};
    o.t_variant = t_variant == "statement" ? 1 : 0;
    o.chernoff_log = log_base == "all-2" ? 1 : 0;
    o.gamma_variant = gamma_variant == "per-process" ? 1 : 0;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deletion/substitution channel bounds and verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "read options from an INI/TOML file (flags win)");

  GlobalFlags global;
  app.add_option("--seed", global.seed, "base seed for all random streams")
      ->capture_default_str();
  app.add_option("--out", global.out, "output file (CSV for bounds, report otherwise)");
  app.add_option("--jobs", global.jobs, "worker threads; output is identical for any value")
      ->capture_default_str();
  app.add_option("--t-variant", global.t_variant,
                 "confusability threshold formula: proof keeps the leading deletion-count term")
      ->check(CLI::IsMember({"proof", "statement"}))
      ->capture_default_str();
  app.add_option("--gamma-variant", global.gamma_variant,
                 "concentration half-width: one gamma or one per error process")
      ->check(CLI::IsMember({"single", "per-process"}))
      ->capture_default_str();
  app.add_option("--log-base", global.log_base,
                 "logs inside Chernoff quantities: mixed (natural) or all-2")
      ->check(CLI::IsMember({"mixed", "all-2"}))
      ->capture_default_str();

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "sweep the capacity bounds over a parameter grid");
  std::vector<double> pd_grid, ps_grid;
  std::vector<std::uint64_t> n_grid;
  double bounds_delta = 0.5;
  bounds->add_option("--pd", pd_grid, "deletion probability grid")->required()->expected(-1);
  bounds->add_option("--ps", ps_grid, "substitution probability grid")->required()->expected(-1);
  bounds->add_option("--n", n_grid, "codeword length grid")->required()->expected(-1);
  bounds->add_option("--delta", bounds_delta, "decoding success floor")->capture_default_str();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the exhaustive small-n verification suite");
  dsc_verify_config vcfg;
  dsc_verify_config_init(&vcfg);
  std::string verify_csv;
  verify->add_option("--collision-max-n", vcfg.collision_max_n, "collision suite: max n")
      ->capture_default_str();
  verify->add_option("--collision-max-q", vcfg.collision_max_q,
                     "collision suite: max deletions/substitutions")
      ->capture_default_str();
  verify->add_option("--confusable-max-n", vcfg.confusable_max_n, "confusable suite: max n")
      ->capture_default_str();
  verify->add_option("--confusable-max-t", vcfg.confusable_max_t, "confusable suite: max t")
      ->capture_default_str();
  verify->add_option("--confusable-max-s", vcfg.confusable_max_s, "confusable suite: max s")
      ->capture_default_str();
  verify->add_option("--tsbad-max-n", vcfg.ts_bad_max_n, "bad-input suite: max n")
      ->capture_default_str();
  verify->add_option("--tsbad-max-qd", vcfg.ts_bad_max_q_d, "bad-input suite: max deletions")
      ->capture_default_str();
  verify->add_option("--tsbad-max-qs", vcfg.ts_bad_max_q_s, "bad-input suite: max substitutions")
      ->capture_default_str();
  verify->add_option("--tsbad-max-t", vcfg.ts_bad_max_t, "bad-input suite: max t")
      ->capture_default_str();
  verify->add_option("--tsbad-max-s", vcfg.ts_bad_max_s, "bad-input suite: max s")
      ->capture_default_str();
  verify->add_option("--guesser-codebooks", vcfg.guesser_codebooks,
                     "number of random codebooks for the guesser suite")
      ->capture_default_str();
  verify->add_option("--sample-limit", vcfg.sample_limit,
                     "sample this many collision pairs instead of all (0 = exhaustive)")
      ->capture_default_str();
  verify->add_option("--csv", verify_csv, "also write the report as CSV");
  verify
      ->add_option("--test-corrupt-confusable", vcfg.confusable_bound_adjust_log2,
                   "shift the confusable ceiling by this many bits (suite self-test)")
      ->group("");

  // ---- decode ----
  auto* decode = app.add_subcommand("decode", "exhaustive-decoder experiment on the fixed-count channel");
  dsc_decode_config dcfg{12, 16, 1, 1, 100000, 0, 1, {0, 0, 0}};
  std::string trials_csv;
  decode->add_option("--n", dcfg.n, "codeword length")->capture_default_str();
  decode->add_option("--codebook-size,-N", dcfg.codebook_size, "number of codewords")
      ->capture_default_str();
  decode->add_option("--qd", dcfg.q_d, "deletions per transmission")->capture_default_str();
  decode->add_option("--qs", dcfg.q_s, "substitutions per transmission")->capture_default_str();
  decode->add_option("--trials", dcfg.trials, "number of trials")->capture_default_str();
  decode->add_option("--trials-csv", trials_csv, "per-trial log (trial,qd,qs,success)");

  // ---- concentration ----
  auto* concentration =
      app.add_subcommand("concentration", "Monte Carlo check of the count concentration bound");
  dsc_concentration_config ccfg{1000, 0.1, 100000, 0.5, 0, 0, 1};
  concentration->add_option("--n", ccfg.n, "number of Bernoulli draws per trial")
      ->capture_default_str();
  concentration->add_option("--p", ccfg.p, "per-draw probability")->capture_default_str();
  concentration->add_option("--trials", ccfg.trials, "number of trials")->capture_default_str();
  concentration->add_option("--delta", ccfg.delta, "success floor defining gamma")
      ->capture_default_str();

  // ---- decompose ----
  auto* decompose =
      app.add_subcommand("decompose", "check the delete-then-flip channel decomposition");
  std::uint32_t decompose_n = 6;
  std::string decompose_pd = "0.3", decompose_ps = "0.2";
  std::uint64_t decompose_trials = 1000000;
  decompose->add_option("--n", decompose_n, "input length for the exact law comparison")
      ->capture_default_str();
  decompose->add_option("--pd", decompose_pd, "deletion probability (exact decimal)")
      ->capture_default_str();
  decompose->add_option("--ps", decompose_ps, "substitution probability (exact decimal)")
      ->capture_default_str();
  decompose->add_option("--trials", decompose_trials, "samples for the joint-count chi-square")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (bounds->parsed()) {
    if (global.out.empty()) {
      std::fprintf(stderr, "error: bounds requires --out CSV_PATH\n");
      return 2;
    }
    dsc_bounds_sweep_config cfg{};
    cfg.p_d = pd_grid.data();
    cfg.p_d_count = pd_grid.size();
    cfg.p_s = ps_grid.data();
    cfg.p_s_count = ps_grid.size();
    cfg.n = n_grid.data();
    cfg.n_count = n_grid.size();
    cfg.delta = bounds_delta;
    cfg.options = global.options();
    cfg.jobs = global.jobs;
    const dsc_status status = dsc_run_bounds_sweep(&cfg, global.out.c_str());
    if (status != DSC_OK) return report_failure(status);
    std::printf("wrote %s\n", global.out.c_str());
    return 0;
  }

  if (verify->parsed()) {
    vcfg.seed = global.seed;
    vcfg.jobs = global.jobs;
    std::uint64_t violations = 0;
    const dsc_status status =
        dsc_run_verify(&vcfg, global.out.empty() ? nullptr : global.out.c_str(),
                       verify_csv.empty() ? nullptr : verify_csv.c_str(), &violations);
    if (status == DSC_OK || status == DSC_ERROR_VERIFICATION) {
      std::printf("verify: %" PRIu64 " violation(s)\n", violations);
      return status == DSC_OK ? 0 : 1;
    }
    return report_failure(status);
  }

  if (decode->parsed()) {
    dcfg.seed = global.seed;
    dcfg.jobs = global.jobs;
    dcfg.options = global.options();
    dsc_decode_summary summary{};
    const dsc_status status =
        dsc_run_decode(&dcfg, global.out.empty() ? nullptr : global.out.c_str(),
                       trials_csv.empty() ? nullptr : trials_csv.c_str(), &summary);
    if (status != DSC_OK) return report_failure(status);
    std::printf("delta_hat=%.6f ci=[%.6f,%.6f] log2N=%.4f rhs_log2N=%.4f pass=%d\n",
                summary.delta_hat, summary.ci_lo, summary.ci_hi, summary.log2_codebook,
                summary.rhs_log2_codebook, summary.bound_ok);
    return summary.bound_ok && summary.guesser_ok ? 0 : 1;
  }

  if (concentration->parsed()) {
    ccfg.seed = global.seed;
    ccfg.jobs = global.jobs;
    ccfg.chernoff_log = global.options().chernoff_log;
    dsc_concentration_summary summary{};
    const dsc_status status = dsc_run_concentration(
        &ccfg, global.out.empty() ? nullptr : global.out.c_str(), &summary);
    if (status != DSC_OK) return report_failure(status);
    std::printf("gamma=%.6f bound=%.6f empirical=%.6f pass=%d\n", summary.gamma, summary.bound,
                summary.empirical, summary.pass_vs_bound && summary.pass_vs_delta4);
    if (summary.below_min_n)
      std::printf("warning: n below the concentration minimum %" PRIu64 "\n", summary.min_n);
    return summary.pass_vs_bound && summary.pass_vs_delta4 ? 0 : 1;
  }

  if (decompose->parsed()) {
    dsc_decompose_config cfg{};
    cfg.n = decompose_n;
    cfg.p_d_decimal = decompose_pd.c_str();
    cfg.p_s_decimal = decompose_ps.c_str();
    cfg.trials = decompose_trials;
    cfg.seed = global.seed;
    cfg.jobs = global.jobs;
    dsc_decompose_summary summary{};
    const dsc_status status = dsc_run_decompose(
        &cfg, global.out.empty() ? nullptr : global.out.c_str(), &summary);
    if (status != DSC_OK) return report_failure(status);
    const bool pass = (!summary.exact_checked || summary.exact_equal) && summary.sampled_pass;
    std::printf("exact_equal=%d chi_square=%.4f p_value=%.6g pass=%d\n", summary.exact_equal,
                summary.chi_square, summary.p_value, pass);
    return pass ? 0 : 1;
  }

  return 2;
}
