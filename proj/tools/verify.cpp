// verify run --suite NAME | --all [options]
// verify list

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mahler/errors.hpp"
#include "mahler/harness.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad grid value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Mahler measure identities"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "print the suite registry");
  auto* run = app.add_subcommand("run", "run verification suites");

  mahler::SuiteConfig config;
  std::vector<std::string> suites;
  bool all = false, no_timing = false, quiet = false;
  std::string out_path, cache_path, grid_k, grid_v, grid_u;
  auto* suite_opt = run->add_option("--suite", suites, "suite name (repeatable)");
  auto* all_opt = run->add_flag("--all", all, "run every suite");
  suite_opt->excludes(all_opt);
  run->add_option("--digits", config.digits, "target decimal digits")->capture_default_str();
  run->add_option("--out", out_path, "write the JSON report here");
  run->add_option("--coeff-cache", cache_path, "coefficient cache file");
  run->add_option("--grid-k", grid_k, "comma-separated k values for theorem2");
  run->add_option("--grid-v", grid_v, "comma-separated v values for elliptic-lemmas");
  run->add_option("--grid-u", grid_u, "comma-separated u values for elliptic-lemmas");
  run->add_option("--tau-samples", config.tau_samples, "tau points for parametrization")
      ->capture_default_str();
  run->add_option("--threads", config.threads, "worker threads (0: all cores)")->capture_default_str();
  run->add_flag("--no-timing", no_timing, "write wall_time_ms as 0 for reproducible reports");
  run->add_flag("--quiet", quiet, "only print failures and the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*list) {
    for (const auto& s : mahler::suite_registry()) std::cout << s.name << "  " << s.claim << "\n";
    return 0;
  }

  try {
    if (!all && suites.empty()) throw mahler::DomainError("give --suite NAME or --all");
    config.suites = suites;
    if (!cache_path.empty()) config.coeff_cache = cache_path;
    if (!grid_k.empty()) config.k_grid = parse_grid(grid_k);
    if (!grid_v.empty()) config.v_grid = parse_grid(grid_v);
    if (!grid_u.empty()) config.u_grid = parse_grid(grid_u);
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  auto results = mahler::run_suites(config);
  int failures = 0;
  for (const auto& r : results) {
    bool failed = r.status == mahler::CheckStatus::fail;
    failures += failed;
    if (quiet && !failed) continue;
    std::cout << mahler::to_string(r.status) << "  " << r.check_id;
    if (!r.abs_diff.empty()) std::cout << "  diff " << r.abs_diff << " (tol " << r.tolerance << ")";
    if (failed && r.lhs.rfind("error:", 0) == 0) std::cout << "  " << r.lhs;
    std::cout << "\n";
  }
  std::cout << results.size() - failures << "/" << results.size() << " checks without failure\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitConfig;
    }
    out << mahler::report_json(results, config, !no_timing).dump(2) << "\n";
  }
  return failures ? kExitFail : 0;
}
