#include "dsc/runner.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dsc/io.hpp"
#include "dsc/parallel.hpp"

namespace dsc {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

LemmaReport confusable_suite_report(const FixedCountParams& fc, std::size_t t_max,
                                    std::size_t s_max, double bound_adjust_log2,
                                    const OracleCaps& caps) {
  LemmaReport report;
  report.suite = "confusable";
  report.config = fc;
  report.t = t_max;
  report.s = s_max;

  std::uint64_t max_count_with_self = 0, max_count_without_self = 0;
  PatternPairStream anchors(fc.n, fc.q_d, fc.q_s);
  PatternPair anchor = PatternPair::identity(0);
  while (anchors.next(anchor)) {
    for (std::size_t t = 0; t <= t_max; ++t) {
      for (std::size_t s = 0; s <= s_max; ++s) {
        const std::uint64_t count = count_confusable(anchor, t, s, caps);
        max_count_with_self = std::max(max_count_with_self, count);
        max_count_without_self = std::max(max_count_without_self, count - 1);
        bool ok;
        double bound_log2 = confusable_count_bound_log2(fc.q_d, fc.q_s, t, s);
        if (bound_adjust_log2 == 0.0) {
          ok = count <= confusable_count_bound_exact(fc.q_d, fc.q_s, t, s);
        } else {
          bound_log2 += bound_adjust_log2;
          ok = static_cast<double>(count) <= std::exp2(bound_log2);
        }
        if (!ok) {
          std::ostringstream msg;
          msg << "confusable count " << count << " above ceiling 2^"
              << format_double(bound_log2) << " at t=" << t << " s=" << s;
          report.violations.push_back(msg.str());
        }
        if (count > 0) {
          report.max_slack_log2 = std::max(
              report.max_slack_log2, bound_log2 - std::log2(static_cast<double>(count)));
        }
        ++report.checked;
      }
    }
  }
  std::ostringstream note;
  note << "t<=" << t_max << " s<=" << s_max << " max_count_with_self=" << max_count_with_self
       << " max_count_without_self=" << max_count_without_self;
  report.note = note.str();
  return report;
}

LemmaReport ts_bad_suite_report(const FixedCountParams& fc, std::size_t t_max, std::size_t s_max,
                                const OracleCaps& caps) {
  LemmaReport report;
  report.suite = "ts_bad";
  report.config = fc;
  report.t = t_max;
  report.s = s_max;
  const std::uint64_t patterns = fc.pattern_count();
  for (std::size_t t = 0; t <= t_max; ++t) {
    for (std::size_t s = 0; s <= s_max; ++s) {
      const std::uint64_t count = count_ts_bad(fc, t, s, caps);
      // count <= C(n,qd)^2 C(n-qd,qs)^2 2^(n-t), compared as
      // count * 2^t <= patterns^2 * 2^n in 128 bits
      const unsigned __int128 lhs = static_cast<unsigned __int128>(count) << t;
      const unsigned __int128 rhs =
          static_cast<unsigned __int128>(patterns) * patterns << fc.n;
      if (lhs > rhs) {
        std::ostringstream msg;
        msg << "bad-input count " << count << " above ceiling at t=" << t << " s=" << s;
        report.violations.push_back(msg.str());
      }
      if (count > 0) {
        const double bound_log2 = 2.0 * std::log2(static_cast<double>(patterns)) +
                                  static_cast<double>(fc.n) - static_cast<double>(t);
        report.max_slack_log2 = std::max(
            report.max_slack_log2, bound_log2 - std::log2(static_cast<double>(count)));
      }
      ++report.checked;
    }
  }
  std::ostringstream note;
  note << "t<=" << t_max << " s<=" << s_max;
  report.note = note.str();
  return report;
}

LemmaReport guesser_case_report(std::size_t index, std::uint64_t seed,
                                const OracleCaps& caps) {
  Philox rng(seed, 0x67550000u + index);
  const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform_below(5));  // 3..7
  const std::size_t sizes[3] = {2, 4, 8};
  const std::size_t count = sizes[rng.uniform_below(3)];
  const std::size_t q_d = static_cast<std::size_t>(rng.uniform_below(std::min<std::uint64_t>(n, 2) + 1));
  const std::size_t q_s =
      static_cast<std::size_t>(rng.uniform_below(std::min<std::uint64_t>(n - q_d, 2) + 1));
  const FixedCountParams fc(n, q_d, q_s);

  LemmaReport report;
  report.suite = "guesser";
  report.config = fc;
  report.checked = 1;

  const std::vector<BitString> codebook = sample_codebook(n, count, rng);
  const ExactFraction success = optimal_guesser_success(codebook, fc, caps);
  const GuesserBound bound = guesser_success_bound(count, fc);
  if (!success.leq(bound.numerator, bound.denominator)) {
    std::ostringstream msg;
    msg << "optimal guesser success " << success.numerator << "/" << success.denominator
        << " above ceiling " << bound.numerator << "/" << bound.denominator;
    report.violations.push_back(msg.str());
  }
  if (!success.is_zero()) {
    report.max_slack_log2 =
        std::log2(static_cast<double>(bound.numerator) / static_cast<double>(bound.denominator)) -
        std::log2(success.value());
  }
  std::ostringstream note;
  note << "N=" << count;
  report.note = note.str();
  return report;
}

}  // namespace

void run_bounds_sweep(const BoundsSweepConfig& cfg, std::ostream& csv) {
  if (cfg.p_d.empty() || cfg.p_s.empty() || cfg.n.empty())
    throw std::invalid_argument("bounds sweep: empty parameter grid");
  const auto p_d = sorted_unique(cfg.p_d);
  const auto p_s = sorted_unique(cfg.p_s);
  const auto n = sorted_unique(cfg.n);

  struct Point {
    double p_d, p_s;
    std::uint64_t n;
  };
  std::vector<Point> grid;
  grid.reserve(p_d.size() * p_s.size() * n.size());
  for (double a : p_d)
    for (double b : p_s)
      for (std::uint64_t len : n) grid.push_back({a, b, len});

  std::vector<std::string> rows(grid.size());
  parallel_chunks(grid.size(), cfg.jobs, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      std::ostringstream row;
      try {
        const ChannelParams params(grid[i].p_d, grid[i].p_s);
        write_bounds_csv_row(row, grid[i].n, params, cfg.delta, cfg.options);
      } catch (const std::exception& e) {
        std::string reason = e.what();
        for (char& c : reason)
          if (c == ',' || c == '\n') c = ';';
        row << grid[i].n << "," << format_double(grid[i].p_d) << ","
            << format_double(grid[i].p_s) << "," << format_double(cfg.delta)
            << ",,,,,,,,,,,,," << reason << "\n";
      }
      rows[i] = row.str();
    }
  });

  csv << kBoundsCsvHeader << "\n";
  for (const std::string& row : rows) csv << row;
}

void run_bounds_sweep_file(const BoundsSweepConfig& cfg, const std::string& csv_path) {
  auto os = open_output(csv_path);
  run_bounds_sweep(cfg, os);
}

VerifyOutcome run_verify(const VerifySweepConfig& cfg) {
  if (cfg.collision_max_n == 0 && cfg.confusable_max_n == 0 && cfg.ts_bad_max_n == 0 &&
      cfg.guesser_codebooks == 0)
    throw std::invalid_argument("verify: empty suite grid");

  // enumerate the work items first so workers can pick them up by index
  struct Task {
    int kind;  // 0 collision, 1 confusable, 2 ts_bad, 3 guesser
    FixedCountParams fc{0, 0, 0};
    std::size_t index = 0;
  };
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= cfg.collision_max_n; ++n)
    for (std::size_t q_d = 0; q_d <= std::min(cfg.collision_max_q, n); ++q_d)
      for (std::size_t q_s = 0; q_s <= std::min(cfg.collision_max_q, n - q_d); ++q_s)
        tasks.push_back({0, FixedCountParams(n, q_d, q_s), 0});
  for (std::size_t n = 1; n <= cfg.confusable_max_n; ++n)
    for (std::size_t q_d = 0; q_d <= n; ++q_d)
      for (std::size_t q_s = 0; q_s <= n - q_d; ++q_s)
        tasks.push_back({1, FixedCountParams(n, q_d, q_s), 0});
  for (std::size_t n = 1; n <= cfg.ts_bad_max_n; ++n)
    for (std::size_t q_d = 0; q_d <= std::min(cfg.ts_bad_max_q_d, n); ++q_d)
      for (std::size_t q_s = 0; q_s <= std::min(cfg.ts_bad_max_q_s, n - q_d); ++q_s)
        tasks.push_back({2, FixedCountParams(n, q_d, q_s), 0});
  for (std::size_t i = 0; i < cfg.guesser_codebooks; ++i)
    tasks.push_back({3, FixedCountParams(1, 0, 0), i});

  std::vector<LemmaReport> reports(tasks.size());
  parallel_chunks(tasks.size(), cfg.jobs, [&](std::size_t, std::uint64_t begin,
                                              std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Task& task = tasks[i];
      switch (task.kind) {
        case 0:
          reports[i] = verify_collision_cases(task.fc, cfg.sample_limit, cfg.seed, cfg.caps);
          break;
        case 1:
          reports[i] = confusable_suite_report(task.fc, cfg.confusable_max_t,
                                               cfg.confusable_max_s,
                                               cfg.confusable_bound_adjust_log2, cfg.caps);
          break;
        case 2:
          reports[i] = ts_bad_suite_report(task.fc, cfg.ts_bad_max_t, cfg.ts_bad_max_s, cfg.caps);
          break;
        default:
          reports[i] = guesser_case_report(task.index, cfg.seed, cfg.caps);
          break;
      }
    }
  });

  VerifyOutcome outcome;
  outcome.reports = std::move(reports);
  for (const LemmaReport& r : outcome.reports) outcome.violations += r.violations.size();
  return outcome;
}

VerifyOutcome run_verify_files(const VerifySweepConfig& cfg, const std::string& text_path,
                               const std::string& csv_path) {
  VerifyOutcome outcome = run_verify(cfg);
  if (!text_path.empty()) {
    auto os = open_output(text_path);
    write_reports_text(os, outcome.reports);
    os << "total_violations=" << outcome.violations << "\n";
  }
  if (!csv_path.empty()) {
    auto os = open_output(csv_path);
    write_reports_csv(os, outcome.reports);
  }
  return outcome;
}

DecodeSummary run_decode_files(const DecodeTrialConfig& cfg, const std::string& summary_path,
                               const std::string& trials_csv_path) {
  std::vector<std::uint8_t> successes;
  DecodeSummary summary = run_decode_experiment(
      cfg, trials_csv_path.empty() ? nullptr : &successes);
  if (!summary_path.empty()) {
    auto os = open_output(summary_path);
    os << format_decode_summary(summary);
  }
  if (!trials_csv_path.empty()) {
    auto os = open_output(trials_csv_path);
    os << "trial,qd,qs,success\n";
    for (std::size_t i = 0; i < successes.size(); ++i)
      os << i << "," << cfg.fc.q_d << "," << cfg.fc.q_s << "," << int(successes[i]) << "\n";
  }
  return summary;
}

ConcentrationReport run_concentration_files(const ConcentrationConfig& cfg,
                                            const std::string& report_path) {
  ConcentrationReport report = run_concentration_check(cfg);
  if (!report_path.empty()) {
    auto os = open_output(report_path);
    os << format_concentration_report(report);
  }
  return report;
}

DecompositionReport run_decompose_files(std::size_t n, const std::string& p_d_decimal,
                                        const std::string& p_s_decimal, std::uint64_t trials,
                                        std::uint64_t seed, int jobs,
                                        const std::string& report_path) {
  const Rational p_d = parse_decimal(p_d_decimal);
  const Rational p_s = parse_decimal(p_s_decimal);
  DecompositionReport report = verify_decomposition(n, p_d, p_s, trials, seed, 1e-3, 8, jobs);
  if (!report_path.empty()) {
    auto os = open_output(report_path);
    os << format_decomposition_report(report);
  }
  return report;
}

}  // namespace dsc
