#pragma once

// L-values of the conductor-21 newform f21 attached to x + 1/x + y + 1/y + 3,
// of the Eisenstein combination g, and the measure identities built on them.

#include <filesystem>
#include <optional>
#include <vector>

#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

/// Sign in Lambda(s) = eps Lambda(2 - s), Lambda(s) = (sqrt(21)/(2 pi))^s Gamma(s) L(s).
/// Fixed by `root_number_self_test`.
inline constexpr int kRootNumber = 1;
inline constexpr long kConductor = 21;

/// a_p for the minimal model y^2 + xy = x^3 + x, which is the curve
/// x + 1/x + y + 1/y + 3 = 0 after a change of variables. For p = 3, 7 it is
/// p - #E_ns(F_p), the nonsingular points including infinity.
long ap_point_count(long p);

/// a_1..a_N; index 0 is unused.
struct CoefficientTable {
  std::vector<long> a;

  long size() const { return static_cast<long>(a.size()) - 1; }
  long operator[](long n) const { return a.at(n); }
};

CoefficientTable build_coefficients(long n_max);

/// Plain text: '#' header lines naming the model, then `n a_n` lines.
void save_coefficients(const CoefficientTable& table, const std::filesystem::path& path);
/// Empty if the file is missing, has a different header, or holds fewer than n_max terms.
std::optional<CoefficientTable> load_coefficients(const std::filesystem::path& path, long n_max);
/// Load from `cache` when possible, otherwise build and (if a path is given) save.
CoefficientTable cached_coefficients(long n_max, const std::optional<std::filesystem::path>& cache);

/// Number of coefficients the smoothed series needs at split lambda.
long smoothed_terms_needed(const Real& lambda, const PrecisionContext& ctx);

/// L(f21, 2) = sum a_n/n^2 Gamma(2, n lambda/A) + eps A^-2 sum a_n Gamma(0, n/(lambda A)),
/// A = sqrt(21)/(2 pi). The sum is independent of lambda > 0 only for the
/// correct eps. Throws NonConvergence if `table` is too short.
Real L_f21_smoothed(const CoefficientTable& table, int eps, const Real& lambda,
                    const PrecisionContext& ctx);

struct RootNumberTest {
  Real spread_plus;   // |L(lambda1) - L(lambda2)| with eps = +1
  Real spread_minus;  // same with eps = -1
  /// The sign whose spread is below tolerance, 0 if neither or both are.
  int selected;
};
RootNumberTest root_number_self_test(const PrecisionContext& ctx);

/// Builds the coefficients it needs unless `table` is given.
Real L_f21_at_2(const PrecisionContext& ctx, const CoefficientTable* table = nullptr);
/// 21/(4 pi^2) L(f21, 2).
Real Lprime_f21_at_0(const PrecisionContext& ctx, const CoefficientTable* table = nullptr);

/// Riemann zeta for real s != 1 by Euler-Maclaurin with 20 correction terms.
Real zeta(const Real& s, const PrecisionContext& ctx);

struct EisensteinLValue {
  Real numeric;      // symmetric limit s -> 2 of the zeta product formula
  Real closed_form;  // (8 pi^2/3) log 7
};
/// L(g, s) = -24(-1 + 3^(1-s) + 49/7^s - 147/21^s) zeta(s - 1) zeta(s) at s = 2.
EisensteinLValue L_g_at_2(const PrecisionContext& ctx);

struct Theorem3Check {
  Real lhs;            // m^-(P_{sqrt7,3})
  Real rhs;            // L'(f21, 0)/2 + (3/8) log 7
  Real decomposition;  // L(f, 2)/(2 pi^2), f = (21/4) f21 + (9/32) g
  Real companion_lhs;  // m^+(P_{sqrt7,3})
  Real companion_rhs;  // -L'(f21, 0)/2 + (1/8) log 7
  Real half_log7;
};
Theorem3Check theorem3_check(const PrecisionContext& ctx, const CoefficientTable* table = nullptr);

/// (m^-(P_{a,c}) - m(P_{1,k})/4)/log a with (c, k) from boyd_params(a); a > 1.
Real regulator_p_estimate(const Real& a, const PrecisionContext& ctx);

}  // namespace mahler
