#pragma once

// Mahler measures of a(x + 1/x) + b(y + 1/y) + c and of the companion
// family (1 + x)(1 + y)(x + y) - (a^2 - 1)xy, reduced by Jensen's formula
// to one-dimensional integrals over the unit circle.

#include <optional>
#include <utility>

#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

/// Coefficients of the Laurent polynomial a(x + 1/x) + b(y + 1/y) + c.
struct FamilyParams {
  Real a;
  Real b;
  Real c;

  /// The two-parameter family with b = 1.
  static FamilyParams normalized(Real a, Real c);
  bool is_normalized() const { return b == 1L; }
};

/// Endpoints of the arcs of |x| = 1 on which one branch y(x) leaves the
/// unit disc: cos(theta) > t_plus for y_-, cos(theta) < t_minus for y_+.
struct CriticalData {
  Real t_minus;
  Real t_plus;
  Real theta_minus;
  Real theta_plus;
};

/// Requires b = 1 and a > 0. Both t values are clamped to [-1, 1].
CriticalData critical_data(const FamilyParams& p);

/// log max(|a|, |b|) when |c| <= 2 ||a| - |b||, otherwise empty.
std::optional<Real> trivial_region_value(const FamilyParams& p);

/// Roots (y_plus, y_minus) of y^2 + (a(x + 1/x) + c) y + 1 at x = e^{i theta}.
std::pair<Complex, Complex> y_branches(const Real& theta, const FamilyParams& p);

/// m(P_{a,b,c}) for real a, b, c with ab != 0.
Real mahler_full(const FamilyParams& p, const PrecisionContext& ctx);

/// Contribution of the branch y_- (|y_-| > 1 for cos(theta) > t_plus).
/// Requires b = 1, a >= 1 and c > 0. Throws EmptyRegion if t_plus >= 1.
Real mahler_minus(const FamilyParams& p, const PrecisionContext& ctx);

/// Contribution of the branch y_+ (|y_+| > 1 for cos(theta) < t_minus);
/// zero when t_minus = -1.
Real mahler_plus(const FamilyParams& p, const PrecisionContext& ctx);

struct BoydParams {
  Real c;
  Real k;
};

/// For a > 1: c = sqrt(2)(a^2 - 1)/sqrt(a^2 + 1) and k = 4(a^2 - 1)/(a^2 + 1).
BoydParams boyd_params(const Real& a);
/// Inverse of boyd_params: a = sqrt((4 + k)/(4 - k)) for 0 < k < 4.
Real boyd_a_from_k(const Real& k);

/// m((1 + x)(1 + y)(x + y) - (a^2 - 1)xy) for a >= 1.
Real mahler_conclusion_family(const Real& a, const PrecisionContext& ctx);

}  // namespace mahler
