#include "euler_padic/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "euler_padic/euler_series.hpp"
#include "euler_padic/primes.hpp"
#include "json.hpp"

namespace euler_padic {

namespace {

using u64 = std::uint64_t;

const char* verdict_name(Verdict v) {
  return v == Verdict::NonzeroCertified ? "nonzero_certified" : "undetermined_at_precision";
}

const char* valuation_kind_name(const ValuationResult& v) {
  return v.is_exact() ? "exact" : "at_least";
}

}  // namespace

std::vector<std::string> validate_scan_config(const ScanConfig& config) {
  std::vector<std::string> issues;
  if (config.b == 0) issues.push_back("b: must be nonzero");
  if (config.xi == 0) issues.push_back("xi: must be nonzero");
  if (config.m < 3) issues.push_back("m: must be >= 3");
  if (config.X < 2) issues.push_back("X: must be >= 2");
  if (config.K < 1) issues.push_back("K: must be >= 1");
  if (config.classes.empty()) issues.push_back("classes: must be nonempty");
  if (config.m >= 3) {
    for (u64 c : config.classes) {
      if (c < 1 || c >= config.m) {
        issues.push_back("classes: " + std::to_string(c) + " is outside [1, m)");
      } else if (std::gcd(c, config.m) != 1) {
        issues.push_back("classes: gcd(" + std::to_string(c) + ", " +
                         std::to_string(config.m) + ") != 1, not a reduced class");
      }
    }
    auto sorted = config.classes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      issues.push_back("classes: duplicate entries");
    }
  }
  return issues;
}

ScanReport scan(const ScanConfig& config, unsigned threads) {
  auto issues = validate_scan_config(config);
  if (!issues.empty()) {
    std::string msg = "invalid scan config:";
    for (const auto& issue : issues) msg += "\n  " + issue;
    throw InvalidConfigError(msg);
  }

  ScanConfig normalized = config;
  std::sort(normalized.classes.begin(), normalized.classes.end());

  std::vector<char> selected(normalized.m, 0);
  for (u64 c : normalized.classes) selected[c] = 1;

  std::vector<u64> targets;
  for (u64 p : sieve_primes(normalized.X)) {
    if (selected[p % normalized.m]) targets.push_back(p);
  }

  // Fixed-size chunks pulled from an atomic counter; each chunk's verdicts
  // land in their own slot, so the merged order is independent of scheduling.
  constexpr std::size_t kChunk = 64;
  const std::size_t n_chunks = (targets.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<PrimeVerdict>> slots(n_chunks);

  auto evaluate_chunk = [&](std::size_t chunk) {
    std::size_t begin = chunk * kChunk;
    std::size_t end = std::min(begin + kChunk, targets.size());
    auto& out = slots[chunk];
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      u64 p = targets[i];
      PadicRing ring(p, normalized.K);
      LambdaEvaluation lambda =
          evaluate_lambda(normalized.a, normalized.b, normalized.xi, ring);
      Verdict verdict = lambda.valuation.is_exact() ? Verdict::NonzeroCertified
                                                    : Verdict::UndeterminedAtPrecision;
      out.push_back(PrimeVerdict{p, p % normalized.m, lambda.valuation, verdict});
    }
  };

  unsigned n_workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (n_workers < 1) n_workers = 1;
  n_workers = static_cast<unsigned>(
      std::min<std::size_t>(n_workers, std::max<std::size_t>(n_chunks, 1)));

  if (n_workers <= 1) {
    for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) evaluate_chunk(chunk);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t chunk = next.fetch_add(1);
        if (chunk >= n_chunks) break;
        evaluate_chunk(chunk);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  report.config = std::move(normalized);
  report.verdicts.reserve(targets.size());
  for (auto& slot : slots) {
    report.verdicts.insert(report.verdicts.end(), slot.begin(), slot.end());
  }

  std::map<u64, ClassSummary> tally;
  for (u64 c : report.config.classes) tally[c] = ClassSummary{c, 0, 0, 0};
  for (const PrimeVerdict& v : report.verdicts) {
    ClassSummary& s = tally[v.class_rep];
    ++s.scanned;
    if (v.verdict == Verdict::NonzeroCertified) {
      ++s.certified_nonzero;
    } else {
      ++s.undetermined;
    }
  }
  for (auto& [c, summary] : tally) {
    if (summary.certified_nonzero > 0) ++report.witness_class_count;
    report.per_class.push_back(summary);
  }
  return report;
}

WitnessShortfallError::WitnessShortfallError(std::size_t found_, std::size_t requested_)
    : std::runtime_error("only " + std::to_string(found_) + " of " +
                         std::to_string(requested_) +
                         " requested witness classes have a certified prime in range; "
                         "increase X or K"),
      found(found_),
      requested(requested_) {}

std::vector<u64> find_witness_classes(const ScanReport& report, std::size_t target_count) {
  std::vector<u64> witnesses;
  for (const ClassSummary& s : report.per_class) {
    if (s.certified_nonzero > 0) witnesses.push_back(s.class_rep);
  }
  if (witnesses.size() < target_count) {
    throw WitnessShortfallError(witnesses.size(), target_count);
  }
  witnesses.resize(target_count);
  return witnesses;
}

std::string scan_report_to_json(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["config"] = {
      {"a", report.config.a},   {"b", report.config.b}, {"xi", report.config.xi},
      {"m", report.config.m},   {"classes", report.config.classes},
      {"X", report.config.X},   {"K", report.config.K},
  };
  j["summary"] = {
      {"scanned_total", report.verdicts.size()},
      {"witness_class_count", report.witness_class_count},
  };
  auto& per_class = j["summary"]["per_class"] = nlohmann::ordered_json::array();
  for (const ClassSummary& s : report.per_class) {
    per_class.push_back({{"class", s.class_rep},
                         {"scanned", s.scanned},
                         {"certified_nonzero", s.certified_nonzero},
                         {"undetermined", s.undetermined}});
  }
  auto& verdicts = j["verdicts"] = nlohmann::ordered_json::array();
  for (const PrimeVerdict& v : report.verdicts) {
    verdicts.push_back({{"p", v.p},
                        {"class", v.class_rep},
                        {"valuation_kind", valuation_kind_name(v.valuation)},
                        {"valuation_value", v.valuation.value},
                        {"verdict", verdict_name(v.verdict)}});
  }
  return j.dump(2) + "\n";
}

std::string scan_report_to_csv(const ScanReport& report) {
  std::string csv = "p,class,valuation_kind,valuation_value,verdict\n";
  for (const PrimeVerdict& v : report.verdicts) {
    csv += std::to_string(v.p);
    csv += ',';
    csv += std::to_string(v.class_rep);
    csv += ',';
    csv += valuation_kind_name(v.valuation);
    csv += ',';
    csv += std::to_string(v.valuation.value);
    csv += ',';
    csv += verdict_name(v.verdict);
    csv += '\n';
  }
  return csv;
}

}  // namespace euler_padic
