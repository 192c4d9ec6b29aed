#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "euler_padic/padic.hpp"

namespace euler_padic {

// One scan campaign: evaluate Lambda(F_p(xi)) = a - b F_p(xi) at precision K
// for every prime p <= X lying in the selected reduced classes mod m.
struct ScanConfig {
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::int64_t xi = 1;
  std::uint64_t m = 3;
  std::vector<std::uint64_t> classes;  // reduced class representatives
  std::uint64_t X = 2;
  unsigned K = 16;
};

// Empty when valid; otherwise one message per offending field.
std::vector<std::string> validate_scan_config(const ScanConfig& config);

class InvalidConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Verdict { NonzeroCertified, UndeterminedAtPrecision };

struct PrimeVerdict {
  std::uint64_t p;
  std::uint64_t class_rep;  // p mod m
  ValuationResult valuation;
  Verdict verdict;
};

struct ClassSummary {
  std::uint64_t class_rep;
  std::uint64_t scanned = 0;
  std::uint64_t certified_nonzero = 0;
  std::uint64_t undetermined = 0;
};

struct ScanReport {
  ScanConfig config;                  // normalized echo (classes ascending)
  std::vector<ClassSummary> per_class;
  std::vector<PrimeVerdict> verdicts;  // sorted by p
  std::uint64_t witness_class_count = 0;
};

// threads == 0 picks hardware concurrency. The report is deterministic:
// byte-identical for any thread count.
ScanReport scan(const ScanConfig& config, unsigned threads = 0);

// Classes with at least one certified witness, ascending, truncated to
// target_count. Throws WitnessShortfallError when the range gave fewer.
class WitnessShortfallError : public std::runtime_error {
 public:
  WitnessShortfallError(std::size_t found, std::size_t requested);
  std::size_t found;
  std::size_t requested;
};

std::vector<std::uint64_t> find_witness_classes(const ScanReport& report,
                                                std::size_t target_count);

// JSON: config echo + per-class summary + verdict array. Stable field order.
std::string scan_report_to_json(const ScanReport& report);

// CSV with header p,class,valuation_kind,valuation_value,verdict.
std::string scan_report_to_csv(const ScanReport& report);

}  // namespace euler_padic
