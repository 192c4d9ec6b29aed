// Command-line front end: eval, scan, theta, decay, lemma2, dm.
//
// Every subcommand emits one payload (JSON or CSV). With --out FILE the
// payload goes to the file and a run manifest lands next to it as
// FILE.manifest.json; otherwise the payload goes to stdout. Exit codes:
// 0 success, 2 bad arguments, 3 resource limits.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "euler_padic/decay.hpp"
#include "euler_padic/euler_series.hpp"
#include "euler_padic/primes.hpp"
#include "euler_padic/scanner.hpp"
#include "euler_padic/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double_cli(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

struct Output {
  std::string payload;
  std::string path;  // empty: stdout
  std::string extra_path;
  std::string extra_payload;
};

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << bytes;
  if (!f) throw std::runtime_error("short write to " + path);
}

void deliver(const Output& out, const std::string& subcommand,
             const ordered_json& parameters, double duration_seconds) {
  if (out.path.empty()) {
    std::fputs(out.payload.c_str(), stdout);
    return;
  }
  write_file(out.path, out.payload);
  std::vector<std::string> outputs = {out.path};
  if (!out.extra_path.empty()) {
    write_file(out.extra_path, out.extra_payload);
    outputs.push_back(out.extra_path);
  }

  ordered_json manifest;
  manifest["subcommand"] = subcommand;
  manifest["version"] = euler_padic::kVersion;
  manifest["parameters"] = parameters;
  manifest["outputs"] = outputs;
  char dur[32];
  std::snprintf(dur, sizeof(dur), "%.3f", duration_seconds);
  manifest["duration_seconds"] = std::strtod(dur, nullptr);
  write_file(out.path + ".manifest.json", manifest.dump(2) + "\n");
}

ordered_json valuation_json(const euler_padic::ValuationResult& v) {
  return {{"kind", v.is_exact() ? "exact" : "at_least"}, {"value", v.value}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler factorial series over the p-adics: evaluation, prime scans, decay diagnostics"};
  app.require_subcommand(1);

  std::int64_t xi = 1, a = 0, b = 1;
  std::uint64_t p = 2, m = 3, a_class = 1, X = 100, nmax = 1000, n_cap = 1000;
  unsigned K = 16;
  unsigned threads = 0;
  bool with_lambda = false;
  std::vector<std::uint64_t> classes;
  std::vector<std::uint64_t> excluded;
  std::vector<double> xs;
  std::string out_path, csv_path;

  auto* eval = app.add_subcommand("eval", "Evaluate F_p(xi) to K p-adic digits");
  eval->add_option("--xi", xi, "series argument")->required();
  eval->add_option("--p", p, "prime")->required();
  eval->add_option("--K", K, "precision in p-adic digits")->required();
  auto* opt_a = eval->add_option("--a", a, "relation constant term");
  eval->add_option("--b", b, "relation coefficient, Lambda(x) = a - b x")->needs(opt_a);
  eval->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* scan = app.add_subcommand("scan", "Classify Lambda(F_p(xi)) for primes in residue classes");
  scan->add_option("--a", a, "relation constant term")->required();
  scan->add_option("--b", b, "relation coefficient")->required();
  scan->add_option("--xi", xi, "series argument")->required();
  scan->add_option("--m", m, "modulus")->required();
  scan->add_option("--classes", classes, "reduced classes, comma separated")
      ->required()
      ->delimiter(',');
  scan->add_option("--X", X, "scan primes up to X")->required();
  scan->add_option("--K", K, "p-adic precision");
  scan->add_option("--threads", threads, "worker threads, 0 = hardware");
  scan->add_option("--out", out_path, "write the JSON report here");
  scan->add_option("--csv", csv_path, "also write the verdict table as CSV");

  auto* theta = app.add_subcommand("theta", "Chebyshev theta/psi error profile for one class");
  theta->add_option("--m", m, "modulus")->required();
  theta->add_option("--a", a_class, "residue class")->required();
  theta->add_option("--xs", xs, "sample points, comma separated")->delimiter(',');
  theta->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* decay = app.add_subcommand("decay", "L(n) three-term decay series on a geometric grid");
  decay->add_option("--m", m, "modulus")->required();
  decay->add_option("--classes", classes, "selected reduced classes")
      ->required()
      ->delimiter(',');
  decay->add_option("--xi", xi, "series argument")->required();
  decay->add_option("--exclude", excluded, "primes to drop from the product")
      ->delimiter(',');
  decay->add_option("--nmax", nmax, "largest sample n")->required();
  decay->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* lemma2 = app.add_subcommand("lemma2", "valuation main-term ratio for one class");
  lemma2->add_option("--m", m, "modulus")->required();
  lemma2->add_option("--a", a_class, "residue class")->required();
  lemma2->add_option("--nmax", nmax, "largest sample n")->required();
  lemma2->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* dm = app.add_subcommand("dm", "empirical decay threshold for a half-sized class union");
  dm->add_option("--m", m, "modulus")->required();
  dm->add_option("--classes", classes, "exactly phi(m)/2 reduced classes")
      ->required()
      ->delimiter(',');
  dm->add_option("--N", n_cap, "sup taken over 3 <= n <= N")->required();
  dm->add_option("--out", out_path, "write the value here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };

  try {
    Output out;
    out.path = out_path;
    ordered_json params;
    std::string name;

    if (app.got_subcommand(eval)) {
      name = "eval";
      with_lambda = opt_a->count() > 0;
      auto series = euler_padic::evaluate_euler(xi, p, K);
      ordered_json j{{"p", p},
                     {"K", K},
                     {"xi", xi},
                     {"truncation_index", series.truncation_index},
                     {"terms_summed", series.terms_summed},
                     {"residue", series.value.residue().get_str()},
                     {"valuation", valuation_json(series.value.valuation())}};
      if (with_lambda) {
        auto lambda = euler_padic::evaluate_lambda(a, b, xi, p, K);
        j["lambda"] = ordered_json{{"a", a},
                                   {"b", b},
                                   {"residue", lambda.value.residue().get_str()},
                                   {"valuation", valuation_json(lambda.valuation)}};
      }
      out.payload = j.dump(2) + "\n";
      params = ordered_json{{"xi", xi}, {"p", p}, {"K", K}};
      if (with_lambda) {
        params["a"] = a;
        params["b"] = b;
      }
    } else if (app.got_subcommand(scan)) {
      name = "scan";
      euler_padic::ScanConfig config;
      config.a = a;
      config.b = b;
      config.xi = xi;
      config.m = m;
      config.classes = classes;
      config.X = X;
      config.K = K;
      auto report = euler_padic::scan(config, threads);
      out.payload = euler_padic::scan_report_to_json(report);
      if (!csv_path.empty()) {
        out.extra_path = csv_path;
        out.extra_payload = euler_padic::scan_report_to_csv(report);
      }
      params = ordered_json{{"a", a},   {"b", b}, {"xi", xi},
                            {"m", m},   {"classes", classes},
                            {"X", X},   {"K", K}, {"threads", threads}};
    } else if (app.got_subcommand(theta)) {
      name = "theta";
      auto profile = euler_padic::theta_error_profile(xs, m, a_class);
      out.payload = euler_padic::profile_to_csv(profile);
      params = ordered_json{{"m", m}, {"a", a_class}, {"xs", xs}};
    } else if (app.got_subcommand(decay)) {
      name = "decay";
      euler_padic::DecayConfig config;
      config.m = m;
      config.classes = classes;
      config.excluded_primes = excluded;
      config.xi = xi;
      config.n_samples = euler_padic::geometric_samples(nmax);
      auto issues = euler_padic::validate_decay_config(config);
      if (!issues.empty()) {
        std::string msg = "invalid decay configuration:";
        for (const auto& issue : issues) msg += "\n  " + issue;
        throw std::invalid_argument(msg);
      }
      out.payload = euler_padic::decay_to_csv(euler_padic::l_sequence(config));
      params = ordered_json{{"m", m},
                            {"classes", classes},
                            {"exclude", excluded},
                            {"xi", xi},
                            {"nmax", nmax}};
    } else if (app.got_subcommand(lemma2)) {
      name = "lemma2";
      std::string csv = "n,ratio,abs_err,grh_indicator\n";
      for (std::uint64_t n : euler_padic::geometric_samples(nmax)) {
        if (n < 3) continue;
        double ratio = euler_padic::lemma2_ratio(n, m, a_class);
        double abs_err = std::abs(ratio - 1.0);
        csv += std::to_string(n);
        csv += ',';
        csv += format_double_cli(ratio);
        csv += ',';
        csv += format_double_cli(abs_err);
        csv += ',';
        csv += format_double_cli(abs_err * std::log(static_cast<double>(n)));
        csv += '\n';
      }
      out.payload = csv;
      params = ordered_json{{"m", m}, {"a", a_class}, {"nmax", nmax}};
    } else if (app.got_subcommand(dm)) {
      name = "dm";
      double estimate = euler_padic::estimate_dm(m, classes, n_cap);
      out.payload = format_double_cli(estimate) + "\n";
      params = ordered_json{{"m", m}, {"classes", classes}, {"N", n_cap}};
    }

    deliver(out, name, params, elapsed());
  } catch (const euler_padic::SieveBudgetError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::bad_alloc&) {
    std::fprintf(stderr, "error: out of memory\n");
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
