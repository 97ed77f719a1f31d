#include "doctest.h"
#include "mahler/elliptic.hpp"
#include "mahler/errors.hpp"
#include "mahler/quadrature.hpp"
#include "test_support.hpp"

using namespace mahler;
using mahler::testing::check_close;

namespace {

// Direct quadrature of the defining integrals.
Real k_quad(const Real& z, const PrecisionContext& ctx) {
  Real z2 = square(z);
  IntegrandSpec spec{[&](const Node& n) {
                       return 1 / sqrt(n.from_right * (1 + n.x) * (1 - z2 * square(n.x)));
                     },
                     ctx.real(0L), ctx.real(1L), Singularity::inverse_sqrt_right};
  return integrate(spec, ctx);
}

Real e_quad(const Real& z, const PrecisionContext& ctx) {
  Real z2 = square(z);
  IntegrandSpec spec{[&](const Node& n) {
                       return sqrt((1 - z2 * square(n.x)) / (n.from_right * (1 + n.x)));
                     },
                     ctx.real(0L), ctx.real(1L), Singularity::inverse_sqrt_right};
  return integrate(spec, ctx);
}

template <class F>
Real central_difference(F f, const Real& x, const Real& h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("elliptic integrals at zero") {
  PrecisionContext ctx;
  Real zero = ctx.real(0L);
  check_close(ellint_K(zero, ctx), ctx.pi() / 2, 30);
  check_close(ellint_E(zero, ctx), ctx.pi() / 2, 30);
  check_close(ellint_Pi(zero, zero, ctx), ctx.pi() / 2, 30);
}

TEST_CASE("AGM values of K and E match quadrature") {
  PrecisionContext ctx;
  for (long i = 1; i <= 9; ++i) {
    Real z = ctx.ratio(i, 10);
    INFO("z = " << i << "/10");
    check_close(ellint_K(z, ctx), k_quad(z, ctx), 30);
    check_close(ellint_E(z, ctx), e_quad(z, ctx), 30);
  }
  // Legendre's relation at z = 1/sqrt(2): 2EK - K^2 = pi/2.
  Real z = 1 / sqrt(ctx.real(2L));
  Real k = ellint_K(z, ctx), e = ellint_E(z, ctx);
  check_close(2 * e * k - square(k), ctx.pi() / 2, 30);
}

TEST_CASE("Pi against a closed form") {
  PrecisionContext ctx;
  // Pi(n, 0) = pi / (2 sqrt(1 - n)).
  for (double n : {-2.0, -0.5, 0.3, 0.9}) {
    Real nn = ctx.real(n);
    check_close(ellint_Pi(nn, ctx.real(0L), ctx), ctx.pi() / (2 * sqrt(1 - nn)), 30);
  }
  // Pi(z^2, z) = E(z) / (1 - z^2).
  Real z = ctx.real(0.6);
  check_close(ellint_Pi(square(z), z, ctx), ellint_E(z, ctx) / (1 - square(z)), 30);
}

TEST_CASE("elliptic domain errors") {
  PrecisionContext ctx;
  CHECK_THROWS_AS(ellint_K(ctx.real(1L), ctx), DomainError);
  CHECK_THROWS_AS(ellint_E(ctx.real(-0.1), ctx), DomainError);
  CHECK_THROWS_AS(ellint_Pi(ctx.real(1L), ctx.real(0.5), ctx), DomainError);
  CHECK_THROWS_AS(dK_dz(ctx.real(0L), ctx), DomainError);
  CHECK_THROWS_AS(dPi_dn(ctx.real(0.25), ctx.real(0.5), ctx), DomainError);
  CHECK_THROWS_AS(lemma_EI2_check(ctx.real(1.5), ctx), DomainError);
  CHECK_THROWS_AS(periods_IJK(ctx.real(2L), ctx), DomainError);
}

TEST_CASE("derivative formulas match finite differences") {
  PrecisionContext ctx;
  Real h = pow10(-ctx.target_digits() / 3, ctx.work_bits());
  int digits = ctx.target_digits() / 3;

  Real z = ctx.real(0.3);
  check_close(dK_dz(z, ctx),
              central_difference([&](const Real& x) { return ellint_K(x, ctx); }, z, h), digits);

  Real n = ctx.real(0.2), z2 = ctx.real(0.4);
  check_close(dPi_dn(n, z2, ctx),
              central_difference([&](const Real& x) { return ellint_Pi(x, z2, ctx); }, n, h),
              digits);
  check_close(dPi_dz(n, z2, ctx),
              central_difference([&](const Real& x) { return ellint_Pi(n, x, ctx); }, z2, h),
              digits);

  Real r = ctx.real(0.45);
  auto f = [](const Real& x) { return legendre_f(x); };
  check_close(legendre_f_prime(r), central_difference(f, r, h), digits);
}

TEST_CASE("hypergeometric series") {
  PrecisionContext ctx;
  CHECK(hyp2f1_half(ctx.real(0L), ctx) == 1L);
  Real z = ctx.real(0.37);
  check_close(hyp2f1_half(4 * z / square(1 + z), ctx), (1 + z) * hyp2f1_half(square(z), ctx), 30);
  Real half = ctx.real(0.5);
  check_close(hyp2f1_half(half, ctx), 2 * k_quad(sqrt(half), ctx) / ctx.pi(), 30);
  check_close(hyp2f1_half(half, ctx), 2 * ellint_K(sqrt(half), ctx) / ctx.pi(), 30);
  CHECK_THROWS_AS(hyp2f1_half(ctx.real(0.9999), ctx), NonConvergence);
  CHECK_THROWS_AS(hyp2f1_half(ctx.real(1L), ctx), DomainError);
}

TEST_CASE("substitution parameters") {
  PrecisionContext ctx;
  for (double vd : {1.05, 1.2, 1.4}) {
    auto s = SubstitutionParams::from_v(ctx.real(vd), ctx);
    Real v2 = square(s.v);
    INFO("v = " << vd);
    check_close(4 * s.w / square(1 + s.w), square(v2 - 1), 30);
    check_close(1 + s.w, 2 / sqrt(1 + 2 * s.v * sqrt(2 - v2) + 2 * v2 - square(v2)), 30);
    CHECK(s.w > 0L);
    CHECK(s.w < 1L);
    check_close(square(s.r), s.w, 30);
    check_close(square(s.u) + 2 * s.u - 1, s.v * (square(s.u) + 1), 28);
    auto back = SubstitutionParams::from_u(s.u, ctx);
    check_close(back.v, s.v, 30);
  }
}

TEST_CASE("two quadratures of the same period") {
  PrecisionContext ctx;
  auto [lhs, rhs] = lemma_EI1_check(ctx.real(1.2), ctx);
  check_close(lhs, rhs, 30);

  Real v = ctx.real(1.3);
  Real v2 = square(v);
  auto s = SubstitutionParams::from_v(v, ctx);
  auto [l13, r13] = lemma_EI1_check(v, ctx);
  check_close(l13, ctx.pi() / 2 * hyp2f1_half(square(v2 - 1), ctx), 30);
  check_close(r13,
              ctx.pi() * hyp2f1_half(square(s.w), ctx) /
                  sqrt(1 + 2 * v * sqrt(2 - v2) + 2 * v2 - square(v2)),
              30);
}

TEST_CASE("weighted period is constant") {
  PrecisionContext ctx;
  Real target = 3 * ctx.pi() / 2;
  Real lo = ctx.real(100L), hi = ctx.real(-100L);
  for (long i = 0; i < 8; ++i) {
    Real v = ctx.ratio(105 + 5 * i, 100);
    Real value = lemma_EI2_check(v, ctx);
    INFO("v = " << v.to_string(4));
    check_close(value, target, 30);
    lo = min(lo, value);
    hi = max(hi, value);
  }
  CHECK(hi - lo <= ctx.tolerance());

  auto s = SubstitutionParams::from_v(ctx.real(1.25), ctx);
  check_close(legendre_form(s.r, ctx), target, 30);
  for (double r : {0.1, 0.5, 0.9}) {
    INFO("r = " << r);
    check_close(legendre_form_derivative(ctx.real(r), ctx), ctx.real(0L), 28);
  }
}

TEST_CASE("period relations along the u-parameterization") {
  PrecisionContext ctx;
  for (double ud : {2.5, 3.0, 4.0, 5.0, 7.0, 10.0}) {
    Real u = ctx.real(ud);
    Real u2 = square(u);
    Periods p = periods_IJK(u, ctx);
    INFO("u = " << ud);
    check_close(p.J_minus - p.J_plus, ctx.real(4L), 29);
    check_close(p.I, p.I_lower, 29);
    check_close(p.Kp, 2 * (u2 + 1) / (u2 + 2 * u - 1) * p.I, 29);
    check_close(p.J_minus + 3 * p.J_plus, -2 * (u2 + 2 * u - 1) / (u2 + 1) * p.I, 29);
    auto [lhs, rhs] = derivative_identity_sides(u, p);
    check_close(lhs, rhs, 29);
  }
}
