// One PASS/FAIL line per acceptance criterion, built on the verification suites
// at the default 30-digit configuration. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mahler/harness.hpp"

using namespace mahler;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  // Restricts which checks of the suites count; null keeps all of them.
  std::function<bool(const std::string&)> keep;
};

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "m(P3) = 2 L'(f21, 0)", {"boyd21"}, nullptr},
      {2, "m-, m+ at (sqrt7, 3) and their sum", {"theorem3"}, nullptr},
      {3, "m(P_{1,k}) = m- - 3 m+ on the k grid", {"theorem2"}, nullptr},
      // The grid=256 example is reported by the harness on its own; the
      // criterion is about the sampled points.
      {4, "trivial region: quadrature and brute-force oracle", {"trivial-region"},
       [](const std::string& id) { return id.find(".grid=") == std::string::npos; }},
      {5, "elliptic integral lemmas and derivatives", {"elliptic-lemmas"}, nullptr},
      {6, "torsion orders and the 2-isogeny", {"curve-torsion", "isogeny"}, nullptr},
      {7, "tame symbol magnitudes", {"tame-symbols"}, nullptr},
      {8, "eta identity, parametrization, CM points, Atkin-Lehner",
       {"ramanujan68", "parametrization", "atkin-lehner"}, nullptr},
      {9, "L(g, 2) and the f expansion prefix", {"lvalue-eisenstein"}, nullptr},
      {10, "regulator rational is 3/4", {"regulator-p"}, nullptr},
      {11, "conclusion family identity", {"conclusion-family"}, nullptr},
  };

  SuiteConfig config;
  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    int total = 0, failed = 0, skipped = 0;
    std::string first_failure;
    for (const std::string& suite : c.suites) {
      for (const CheckResult& r : run_suite(suite, config)) {
        if (c.keep && !c.keep(r.check_id)) continue;
        ++total;
        if (r.status == CheckStatus::skipped) ++skipped;
        if (r.status == CheckStatus::fail) {
          ++failed;
          if (first_failure.empty())
            first_failure = r.check_id + " diff " + r.abs_diff + " tol " + r.tolerance;
        }
      }
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Skipped checks are outside a criterion's range; an empty criterion is a failure.
    bool ok = failed == 0 && total > skipped;
    all_ok = all_ok && ok;
    std::printf("criterion %2d: %s  %s  (%d checks, %d skipped, %.2f s)%s%s\n", c.number,
                ok ? "PASS" : "FAIL", c.title.c_str(), total, skipped, secs,
                first_failure.empty() ? "" : "  first failure: ", first_failure.c_str());
  }
  return all_ok ? 0 : 1;
}
