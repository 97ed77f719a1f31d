#include <random>

#include "doctest.h"
#include "mahler/errors.hpp"
#include "mahler/quadrature.hpp"
#include "test_support.hpp"

using namespace mahler;
using mahler::testing::check_close;

namespace {

// Complete elliptic integral of the first kind, by direct quadrature of
// its defining integral (modulus z, z^2 inside the radical).
Real k_by_quadrature(const Real& z, const PrecisionContext& ctx) {
  Real z2 = square(z);
  IntegrandSpec spec{[&](const Node& n) {
                       return 1 / sqrt(n.from_right * (1 + n.x) * (1 - z2 * square(n.x)));
                     },
                     ctx.real(0L), ctx.real(1L), Singularity::inverse_sqrt_right};
  return integrate(spec, ctx);
}

}  // namespace

TEST_CASE("precision context enforces its invariants") {
  PrecisionContext ctx;
  CHECK(ctx.target_digits() == 30);
  CHECK(ctx.guard_bits() == 32);
  CHECK(ctx.work_bits() == 100 + 32);
  CHECK_THROWS_AS(PrecisionContext(30, 8), DomainError);
  CHECK_THROWS_AS(PrecisionContext(30, 32, 100L), DomainError);
  CHECK(ctx.doubled().work_bits() == 264);
}

TEST_CASE("decimal serialization round-trips at target digits") {
  PrecisionContext ctx;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 50; ++i) {
    Real x = exp(ctx.real(dist(rng))) / 3;
    std::string s = to_decimal(x, 30);
    Real back(s, ctx.work_bits());
    CHECK(to_decimal(back, 30) == s);
    CHECK(abs(back - x) <= abs(x) * pow10(-29, ctx.work_bits()));
  }
  CHECK(to_decimal(ctx.real(0.5), 30) == "5e-01");
}

TEST_CASE("integrate reproduces closed forms") {
  PrecisionContext ctx;
  SUBCASE("arcsine endpoint values") {
    IntegrandSpec spec{[](const Node& n) { return 1 / sqrt(n.from_right * (1 + n.x)); },
                       ctx.real(0L), ctx.real(1L), Singularity::inverse_sqrt_right};
    check_close(integrate(spec, ctx), ctx.pi() / 2, 30);
  }
  SUBCASE("logarithmic endpoint") {
    auto spec = IntegrandSpec::plain([](const Real& t) { return log(t); }, ctx.real(0L),
                                     ctx.real(1L), Singularity::log_endpoint);
    check_close(integrate(spec, ctx), ctx.real(-1L), 30);
  }
}

TEST_CASE("period integral at (sqrt7, 3) matches the AGM route") {
  PrecisionContext ctx;
  Real a = sqrt(ctx.real(7L));
  Real c = ctx.real(3L);
  Real t_plus = (2 - c) / (2 * a);
  Real t_minus = -(2 + c) / (2 * a);
  // (a t + c/2)^2 - 1 = a^2 (t - t_plus)(t - t_minus)
  IntegrandSpec spec{[&](const Node& n) {
                       return 1 / (a * sqrt(n.from_right * (1 + n.x) * n.from_left *
                                            (n.x - t_minus)));
                     },
                     t_plus, ctx.real(1L), Singularity::inverse_sqrt_both};
  Real quad = integrate(spec, ctx);
  // Four real roots -1 < t_minus < t_plus < 1, integral over the top gap:
  // 2K(k)/sqrt((1 - t_minus)(t_plus + 1)), k^2 = (1 - t_plus)(t_minus + 1)/((1 - t_minus)(t_plus + 1)).
  Real denom = (1 - t_minus) * (t_plus + 1);
  Real k = sqrt((1 - t_plus) * (t_minus + 1) / denom);
  Real via_agm = 2 * (ctx.pi() / (2 * agm(ctx.real(1L), sqrt(1 - square(k)), ctx))) /
                 (a * sqrt(denom));
  check_close(quad, via_agm, 30);
}

TEST_CASE("integrate is linear and additive over subintervals") {
  PrecisionContext ctx;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  auto f = [](const Real& t) { return exp(-square(t)) * cos(3 * t); };
  auto g = [](const Real& t) { return 1 / (2 + sin(t)); };
  Real lo = ctx.real(-1L), hi = ctx.real(2L);
  Real int_f = integrate(IntegrandSpec::plain(f, lo, hi), ctx);
  Real int_g = integrate(IntegrandSpec::plain(g, lo, hi), ctx);
  for (int trial = 0; trial < 3; ++trial) {
    Real alpha = ctx.real(coef(rng)), beta = ctx.real(coef(rng));
    auto h = [&](const Real& t) { return alpha * f(t) + beta * g(t); };
    check_close(integrate(IntegrandSpec::plain(h, lo, hi), ctx), alpha * int_f + beta * int_g,
                29);
  }
  std::uniform_real_distribution<double> split(-0.9, 1.9);
  for (int trial = 0; trial < 3; ++trial) {
    Real m = ctx.real(split(rng));
    Real sum = integrate(IntegrandSpec::plain(f, lo, m), ctx) +
               integrate(IntegrandSpec::plain(f, m, hi), ctx);
    check_close(sum, int_f, 29);
  }
}

TEST_CASE("integrate is stable under doubled working precision") {
  PrecisionContext ctx;
  IntegrandSpec spec{[](const Node& n) { return log(n.x + 2) / sqrt(n.from_right * (1 + n.x)); },
                     ctx.real(0L), ctx.real(1L), Singularity::inverse_sqrt_right};
  Real base = integrate(spec, ctx);
  PrecisionContext wide = ctx.doubled();
  IntegrandSpec wide_spec{spec.evaluator, wide.real(0L), wide.real(1L), spec.singularity};
  check_close(base, integrate(wide_spec, wide), 30);
}

TEST_CASE("integrate reports errors") {
  PrecisionContext ctx;
  auto f = [](const Real& t) { return t; };
  CHECK_THROWS_AS(integrate(IntegrandSpec::plain(f, ctx.real(1L), ctx.real(0L)), ctx),
                  DomainError);
  auto bad = [&](const Real& t) { return t > 0.5 ? log(t - 1) : t; };
  CHECK_THROWS_AS(integrate(IntegrandSpec::plain(bad, ctx.real(0L), ctx.real(1L)), ctx),
                  DomainError);
  // A jump in the interior defeats level agreement when only one level is allowed.
  auto step = [&](const Real& t) { return t > 0.3 ? ctx.real(1L) : ctx.real(0L); };
  QuadratureOptions tight;
  tight.max_level = 2;
  tight.min_level = 1;
  CHECK_THROWS_AS(integrate(IntegrandSpec::plain(step, ctx.real(0L), ctx.real(1L)), ctx, tight),
                  NonConvergence);
}

TEST_CASE("agm") {
  PrecisionContext ctx;
  check_close(agm(ctx.real(1L), ctx.real(1L), ctx), ctx.real(1L), 30);

  Real z = sqrt(ctx.real(3L)) / 2;
  Real k_agm = ctx.pi() / (2 * agm(ctx.real(1L), ctx.real(0.5), ctx));
  check_close(k_agm, k_by_quadrature(z, ctx), 30);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.01, 100.0);
  for (int i = 0; i < 20; ++i) {
    Real x = ctx.real(dist(rng)), y = ctx.real(dist(rng));
    Real m = agm(x, y, ctx);
    CHECK(m == agm(y, x, ctx));
    check_close(agm((x + y) / 2, sqrt(x * y), ctx) / m, ctx.real(1L), 29);
  }
  CHECK_THROWS_AS(agm(ctx.real(0L), ctx.real(1L), ctx), DomainError);
  CHECK_THROWS_AS(agm(ctx.real(1L), ctx.real(-2L), ctx), DomainError);
}
