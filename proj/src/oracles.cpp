#include "dsc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"
#include "dsc/numerics.hpp"

namespace dsc {

namespace {

void require_input_scan(std::size_t n, const OracleCaps& caps, const char* who) {
  if (n > caps.input_scan_max_n) {
    std::ostringstream msg;
    msg << who << ": n=" << n << " exceeds the 2^n input scan cap " << caps.input_scan_max_n;
    throw CapExceededError(msg.str());
  }
}

void require_pair_scan(std::size_t n, const OracleCaps& caps, const char* who) {
  if (n > caps.pair_scan_max_n) {
    std::ostringstream msg;
    msg << who << ": n=" << n << " exceeds the pattern-pair scan cap " << caps.pair_scan_max_n;
    throw CapExceededError(msg.str());
  }
}

// Per-pattern precomputation for exhaustive scans: the packed output of
// every input x in [0, 2^n).
struct PatternScan {
  std::vector<PatternPair> pairs;
  std::vector<std::vector<std::uint32_t>> outputs;  // outputs[p][x]

  PatternScan(const FixedCountParams& fc) {
    pairs = all_pattern_pairs(fc.n, fc.q_d, fc.q_s);
    const std::uint64_t inputs = std::uint64_t{1} << fc.n;
    outputs.resize(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const CompiledPattern comp = compile(pairs[p]);
      auto& row = outputs[p];
      row.resize(inputs);
      for (std::uint64_t x = 0; x < inputs; ++x)
        row[x] = static_cast<std::uint32_t>(apply_packed(x, comp));
    }
  }
};

std::uint64_t collision_count(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < a.size(); ++x) count += a[x] == b[x];
  return count;
}

}  // namespace

OracleCaps OracleCaps::from_env() {
  OracleCaps caps;
  caps.input_scan_max_n = env_size_t("DSC_MAX_ENUM_N", caps.input_scan_max_n);
  caps.pair_scan_max_n = env_size_t("DSC_MAX_PAIR_SCAN_N", caps.pair_scan_max_n);
  return caps;
}

ExactFraction collision_probability_exact(const PatternPair& a, const PatternPair& b,
                                          std::size_t n, const OracleCaps& caps) {
  if (a.parent_length() != n || b.parent_length() != n)
    throw std::domain_error("collision_probability_exact: patterns disagree on n");
  require_input_scan(n, caps, "collision_probability_exact");
  const std::uint64_t inputs = std::uint64_t{1} << n;
  if (a.output_length() != b.output_length()) return ExactFraction(0, inputs);
  const CompiledPattern ca = compile(a), cb = compile(b);
  std::uint64_t hits = 0;
  for (std::uint64_t x = 0; x < inputs; ++x)
    hits += apply_packed(x, ca) == apply_packed(x, cb);
  return ExactFraction(hits, inputs);
}

LemmaReport verify_collision_cases(const FixedCountParams& fc, std::uint64_t sample_limit,
                                   std::uint64_t seed, const OracleCaps& caps) {
  require_input_scan(fc.n, caps, "verify_collision_cases");
  require_pair_scan(fc.n, caps, "verify_collision_cases");

  LemmaReport report;
  report.suite = "collision";
  report.config = fc;

  const PatternScan scan(fc);
  const std::uint64_t total = scan.pairs.size();
  const std::uint64_t total_ordered = total * total;
  const bool exhaustive = sample_limit == 0 || sample_limit >= total_ordered;
  const std::uint64_t inputs = std::uint64_t{1} << fc.n;

  std::uint64_t positive_pairs = 0;
  Philox rng(seed, 0);

  auto check_pair = [&](std::size_t i, std::size_t j) {
    const PatternPair& a = scan.pairs[i];
    const PatternPair& b = scan.pairs[j];
    const ExactFraction prob(collision_count(scan.outputs[i], scan.outputs[j]), inputs);

    const auto delta_t = transmission_discrepancy(a.transmission, b.transmission);
    const auto delta_s = substitution_symmetric_difference(a.substitution, b.substitution);
    const bool same_t = a.transmission == b.transmission;
    const bool same_s = a.substitution == b.substitution;
    const bool contained = is_subset(delta_s, delta_t);

    auto violation = [&](const char* what) {
      std::ostringstream msg;
      msg << what << " at pair (" << i << "," << j << ") prob=" << prob.numerator << "/"
          << prob.denominator << " |dt|=" << delta_t.size() << " |ds|=" << delta_s.size();
      report.violations.push_back(msg.str());
    };

    // discrepancy set is empty exactly when the transmission patterns match
    if (delta_t.empty() != same_t) violation("empty discrepancy without equality");

    if (same_t && same_s) {
      if (!prob.is_one()) violation("identical pair must collide always");
    } else if (same_t) {
      if (!prob.is_zero()) violation("equal transmission, different flips must never collide");
    } else if (!contained) {
      if (!prob.is_zero()) violation("flip difference outside discrepancy must never collide");
    } else {
      // containment holds and the transmission patterns differ
      if (prob.is_zero()) violation("contained flip difference must collide for some input");
      if (!prob.at_most_inverse_pow2(static_cast<unsigned>(delta_t.size())))
        violation("collision probability above 2^-|dt|");
    }
    // the unconditional ceiling, all cases
    if (!prob.at_most_inverse_pow2(static_cast<unsigned>(delta_t.size())))
      violation("unconditional ceiling 2^-|dt| violated");

    if (!prob.is_zero()) {
      ++positive_pairs;
      const double slack =
          -static_cast<double>(delta_t.size()) - std::log2(prob.value());
      report.max_slack_log2 = std::max(report.max_slack_log2, slack);
    }
    ++report.checked;
  };

  if (exhaustive) {
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j) check_pair(i, j);
  } else {
    for (std::uint64_t k = 0; k < sample_limit; ++k) {
      const std::uint64_t r = rng.uniform_below(total_ordered);
      check_pair(static_cast<std::size_t>(r / total), static_cast<std::size_t>(r % total));
    }
  }

  std::ostringstream note;
  note << "pairs_total=" << total_ordered << " positive=" << positive_pairs
       << (exhaustive ? " exhaustive" : " sampled");
  report.note = note.str();
  return report;
}

std::uint64_t count_confusable(const PatternPair& a, std::uint64_t t, std::uint64_t s,
                               const OracleCaps& caps) {
  const std::size_t n = a.parent_length();
  require_pair_scan(n, caps, "count_confusable");
  PatternPairStream stream(n, a.deletions(), a.substitutions());
  PatternPair b = PatternPair::identity(0);
  std::uint64_t count = 0;
  while (stream.next(b)) {
    const auto delta_t = transmission_discrepancy(a.transmission, b.transmission);
    if (delta_t.size() > t) continue;
    const auto delta_s = substitution_symmetric_difference(a.substitution, b.substitution);
    if (delta_s.size() > s) continue;
    if (is_subset(delta_s, delta_t)) ++count;
  }
  return count;
}

double confusable_count_bound_log2(std::uint64_t q_d, std::uint64_t q_s, std::uint64_t t,
                                   std::uint64_t s) {
  return std::log2(static_cast<double>(s + 1)) + std::log2(static_cast<double>(t + 1)) +
         log2_binomial(q_s + s, q_s) + log2_binomial(t + s, s) + log2_binomial(q_d + t, q_d) +
         log2_binomial(2 * q_d + t + 1, 2 * q_d + 1);
}

std::uint64_t confusable_count_bound_exact(std::uint64_t q_d, std::uint64_t q_s,
                                           std::uint64_t t, std::uint64_t s) {
  const std::uint64_t factors[6] = {
      s + 1,
      t + 1,
      combination_count(q_s + s, q_s),
      combination_count(t + s, s),
      combination_count(q_d + t, q_d),
      combination_count(2 * q_d + t + 1, 2 * q_d + 1),
  };
  unsigned __int128 product = 1;
  for (std::uint64_t f : factors) {
    product *= f;
    if (product > ~std::uint64_t{0})
      throw CapExceededError("confusable_count_bound_exact: product exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(product);
}

std::uint64_t count_ts_bad(const FixedCountParams& fc, std::uint64_t t, std::uint64_t s,
                           const OracleCaps& caps) {
  require_input_scan(fc.n, caps, "count_ts_bad");
  require_pair_scan(fc.n, caps, "count_ts_bad");

  const PatternScan scan(fc);
  const std::uint64_t inputs = std::uint64_t{1} << fc.n;
  std::vector<std::uint8_t> bad(inputs, 0);
  const std::size_t total = scan.pairs.size();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      const auto delta_t =
          transmission_discrepancy(scan.pairs[i].transmission, scan.pairs[j].transmission);
      if (delta_t.size() < t) continue;
      const auto delta_s = substitution_symmetric_difference(scan.pairs[i].substitution,
                                                             scan.pairs[j].substitution);
      if (delta_s.size() < s) continue;
      const auto& oa = scan.outputs[i];
      const auto& ob = scan.outputs[j];
      for (std::uint64_t x = 0; x < inputs; ++x)
        if (oa[x] == ob[x]) bad[x] = 1;
    }
  }
  std::uint64_t count = 0;
  for (std::uint8_t flag : bad) count += flag;
  return count;
}

ExactFraction optimal_guesser_success(std::span<const BitString> codebook,
                                      const FixedCountParams& fc, const OracleCaps& caps) {
  if (codebook.empty()) throw std::invalid_argument("optimal_guesser_success: empty codebook");
  require_input_scan(fc.n, caps, "optimal_guesser_success");
  std::unordered_set<std::uint64_t> seen;
  for (const BitString& word : codebook) {
    if (word.size() != fc.n)
      throw std::invalid_argument("optimal_guesser_success: codeword length mismatch");
    if (!seen.insert(word.packed()).second)
      throw std::invalid_argument("optimal_guesser_success: duplicate codewords");
  }

  // All (codeword, realization) pairs are equally likely, so the best guess
  // for an output is any one preimage: the success mass is one pair per
  // distinct reachable output.
  std::unordered_set<std::uint64_t> outputs;
  PatternPairStream stream(fc.n, fc.q_d, fc.q_s);
  PatternPair a = PatternPair::identity(0);
  while (stream.next(a)) {
    const CompiledPattern comp = compile(a);
    for (const BitString& word : codebook) outputs.insert(apply_packed(word.packed(), comp));
  }

  const std::uint64_t den = codebook.size() * fc.pattern_count();
  const ExactFraction success(outputs.size(), den);
  const GuesserBound bound = guesser_success_bound(codebook.size(), fc);
  if (!success.leq(bound.numerator, bound.denominator))
    throw std::logic_error("optimal_guesser_success: ceiling violated");
  return success;
}

GuesserBound guesser_success_bound(std::size_t codebook_size, const FixedCountParams& fc) {
  const std::size_t out_bits = fc.n - fc.q_d;
  if (out_bits >= 64)
    throw CapExceededError("guesser_success_bound: 2^(n-q_d) exceeds 64 bits");
  return {std::uint64_t{1} << out_bits, codebook_size * fc.pattern_count()};
}

void write_reports_text(std::ostream& os, std::span<const LemmaReport> reports) {
  for (const LemmaReport& r : reports) {
    os << "suite=" << r.suite << " n=" << r.config.n << " qd=" << r.config.q_d
       << " qs=" << r.config.q_s;
    if (r.t) os << " t=" << *r.t;
    if (r.s) os << " s=" << *r.s;
    os << " checked=" << r.checked << " violations=" << r.violations.size()
       << " max_slack_log2=" << format_double(r.max_slack_log2);
    if (!r.note.empty()) os << " " << r.note;
    os << "\n";
    for (const std::string& v : r.violations) os << "  violation: " << v << "\n";
  }
}

void write_reports_csv(std::ostream& os, std::span<const LemmaReport> reports) {
  os << "suite,n,qd,qs,t,s,checked,violations,max_slack_log2\n";
  for (const LemmaReport& r : reports) {
    os << r.suite << "," << r.config.n << "," << r.config.q_d << "," << r.config.q_s << ",";
    if (r.t) os << *r.t;
    os << ",";
    if (r.s) os << *r.s;
    os << "," << r.checked << "," << r.violations.size() << ","
       << format_double(r.max_slack_log2) << "\n";
  }
}

}  // namespace dsc
