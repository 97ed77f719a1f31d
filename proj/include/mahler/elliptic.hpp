#pragma once

// Complete elliptic integrals in the modulus convention
//   K(z) = int_0^1 dx / sqrt((1 - x^2)(1 - z^2 x^2)),
// with E and Pi(n, z) defined likewise, plus the period integrals that
// appear when differentiating the half-measures.

#include <utility>

#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

/// 0 <= z < 1.
Real ellint_K(const Real& z, const PrecisionContext& ctx);
/// 0 <= z < 1.
Real ellint_E(const Real& z, const PrecisionContext& ctx);
/// n < 1 and 0 <= z < 1.
Real ellint_Pi(const Real& n, const Real& z, const PrecisionContext& ctx);

/// 2F1(1/2, 1/2; 1; z) by its binomial-square series, 0 <= z < 1.
/// Throws NonConvergence if more than `max_terms` terms would be needed.
Real hyp2f1_half(const Real& z, const PrecisionContext& ctx, int max_terms = 10000);

// Closed-form derivatives. They need z != 0, and n not in {0, 1, z^2}.
Real dK_dz(const Real& z, const PrecisionContext& ctx);
Real dPi_dn(const Real& n, const Real& z, const PrecisionContext& ctx);
Real dPi_dz(const Real& n, const Real& z, const PrecisionContext& ctx);

/// The parameter chain u -> v -> (alpha, beta, w, r) for u > 1 + sqrt(2).
struct SubstitutionParams {
  Real u;
  Real v;
  Real w;
  Real r;
  Real alpha;
  Real beta;

  /// 1 < v < sqrt(2).
  static SubstitutionParams from_v(const Real& v, const PrecisionContext& ctx);
  static SubstitutionParams from_u(const Real& u, const PrecisionContext& ctx);
};

/// Both sides of the elliptic-integral identity in T and t, each evaluated by
/// quadrature. 1 < v < sqrt(2).
std::pair<Real, Real> lemma_EI1_check(const Real& v, const PrecisionContext& ctx);

/// v * int_alpha^1 (2t + v) dt / sqrt((1 - t^2) Q_v(t)); constant 3pi/2 on (1, sqrt(2)).
Real lemma_EI2_check(const Real& v, const PrecisionContext& ctx);

/// The integral of lemma_EI2_check rewritten through K and Pi:
/// (1 - r)((1 - r - 2s) K(r^2) + 4s Pi(f(r), r^2)) with s = sqrt(r^2 + 1).
Real legendre_form(const Real& r, const PrecisionContext& ctx);
/// d/dr of legendre_form from the closed-form derivatives of K and Pi.
Real legendre_form_derivative(const Real& r, const PrecisionContext& ctx);
/// f(r) = r (s + 1)(s - r) and its derivative.
Real legendre_f(const Real& r);
Real legendre_f_prime(const Real& r);

struct Periods {
  Real I;        // over [t_plus, 1]
  Real I_lower;  // the same integrand over [-1, t_minus]
  Real J_minus;
  Real J_plus;
  Real Kp;
};

/// Period integrals for the family member a = (u^2 + 2u - 1)/(u^2 - 2u - 1),
/// u > 1 + sqrt(2).
Periods periods_IJK(const Real& u, const PrecisionContext& ctx);

/// Both sides of the derivative identity that compares
/// (u^4 - 6u^2 + 1)/(u^2 + 1)^3 Kp with the combination of I and J_+-.
std::pair<Real, Real> derivative_identity_sides(const Real& u, const Periods& p);

}  // namespace mahler
