#include <random>

#include "doctest.h"
#include "mahler/errors.hpp"
#include "mahler/measures.hpp"
#include "test_support.hpp"

using namespace mahler;
using mahler::testing::check_close;

namespace {

FamilyParams family(const Real& a, const Real& b, const Real& c) { return {a, b, c}; }

}  // namespace

TEST_CASE("trivial region") {
  PrecisionContext ctx;
  Real s7 = sqrt(ctx.real(7L));
  auto v = trivial_region_value(family(s7, ctx.real(1L), ctx.real(3L)));
  REQUIRE(v.has_value());
  check_close(*v, log(ctx.real(7L)) / 2, 30);
  CHECK(abs(*v - ctx.real("0.97295507452765665255267637172")) < ctx.real(1e-28));

  CHECK_FALSE(trivial_region_value(family(ctx.real(1L), ctx.real(1L), ctx.real(3L))).has_value());
  auto w = trivial_region_value(family(ctx.real(5L), ctx.real(2L), ctx.real(6L)));
  REQUIRE(w.has_value());
  check_close(*w, log(ctx.real(5L)), 30);
}

TEST_CASE("critical data at (sqrt7, 3)") {
  PrecisionContext ctx;
  Real s7 = sqrt(ctx.real(7L));
  auto cd = critical_data(FamilyParams::normalized(s7, ctx.real(3L)));
  check_close(cd.t_minus, -5 / (2 * s7), 30);
  check_close(cd.t_plus, -1 / (2 * s7), 30);
  check_close(cos(cd.theta_minus), cd.t_minus, 30);
  CHECK(cd.theta_minus > cd.theta_plus);
  CHECK(cd.t_minus <= cd.t_plus);

  auto boyd = critical_data(FamilyParams::normalized(ctx.real(1L), ctx.real(3L)));
  CHECK(boyd.t_minus == -1L);
  check_close(boyd.theta_minus, ctx.pi(), 30);
}

TEST_CASE("y branches") {
  PrecisionContext ctx;
  Real s7 = sqrt(ctx.real(7L));
  auto p = FamilyParams::normalized(s7, ctx.real(3L));
  auto cd = critical_data(p);
  Real nudge = ctx.real(1e-3);
  {
    auto [yp, ym] = y_branches(acos(cd.t_plus + nudge), p);
    CHECK(abs(yp) < 1L);
    CHECK(abs(ym) > 1L);
  }
  {
    auto [yp, ym] = y_branches(acos(cd.t_minus - nudge), p);
    CHECK(abs(ym) < 1L);
    CHECK(abs(yp) > 1L);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(-3.14159, 3.14159);
  for (int i = 0; i < 20; ++i) {
    auto [yp, ym] = y_branches(ctx.real(theta(rng)), p);
    Complex prod = yp * ym;
    check_close(prod.re(), ctx.real(1L), 30);
    check_close(prod.im(), ctx.real(0L), 30);
  }
}

TEST_CASE("full measure on closed-form cases") {
  PrecisionContext ctx;
  Real s7 = sqrt(ctx.real(7L));
  check_close(mahler_full(family(s7, ctx.real(1L), ctx.real(3L)), ctx), log(s7), 30);
  check_close(mahler_full(family(ctx.real(2L), ctx.real(1L), ctx.real(0L)), ctx),
              log(ctx.real(2L)), 30);
  CHECK_THROWS_AS(mahler_full(family(ctx.real(0L), ctx.real(1L), ctx.real(1L)), ctx),
                  DomainError);
}

TEST_CASE("half measures") {
  PrecisionContext ctx;
  Real s7 = sqrt(ctx.real(7L));
  auto p = FamilyParams::normalized(s7, ctx.real(3L));
  Real minus = mahler_minus(p, ctx);
  Real plus = mahler_plus(p, ctx);
  check_close(minus + plus, log(s7), 30);
  CHECK(plus > 0L);

  for (double k : {0.5, 1.0, 2.0, 3.0, 3.5}) {
    auto pk = FamilyParams::normalized(ctx.real(1L), ctx.real(k));
    CHECK(mahler_plus(pk, ctx).is_zero());
    check_close(mahler_minus(pk, ctx), mahler_full(family(ctx.real(1L), ctx.real(1L), ctx.real(k)), ctx),
                30);
  }

  CHECK_THROWS_AS(mahler_minus(FamilyParams::normalized(ctx.real(1L), ctx.real(0L)), ctx),
                  DomainError);
  CHECK_THROWS_AS(mahler_minus(FamilyParams::normalized(ctx.real(0.5), ctx.real(1L)), ctx),
                  DomainError);
  // c <= 0 and b != 1 fall outside the normalized domain.
  CHECK_THROWS_AS(mahler_minus(FamilyParams::normalized(ctx.real(1L), ctx.real(-1L)), ctx),
                  DomainError);
  CHECK_THROWS_AS(mahler_minus(family(ctx.real(2L), ctx.real(2L), ctx.real(1L)), ctx), DomainError);
}

TEST_CASE("boyd parameterization") {
  PrecisionContext ctx;
  auto bp = boyd_params(sqrt(ctx.real(7L)));
  check_close(bp.c, ctx.real(3L), 30);
  check_close(bp.k, ctx.real(3L), 30);

  auto near_one = boyd_params(ctx.real(1L) + ctx.real(1e-12));
  CHECK(near_one.c < ctx.real(1e-11));
  CHECK(near_one.k < ctx.real(1e-11));

  Real a = boyd_a_from_k(ctx.real(2L));
  check_close(a, sqrt(ctx.real(3L)), 30);
  check_close(boyd_params(a).k, ctx.real(2L), 30);
  check_close(boyd_params(a).c, 2 / sqrt(ctx.real(2L)), 30);
  CHECK_THROWS_AS(boyd_params(ctx.real(1L)), DomainError);
  CHECK_THROWS_AS(boyd_a_from_k(ctx.real(4L)), DomainError);
}

TEST_CASE("half measures add up to log a in the trivial region") {
  PrecisionContext ctx;
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> cdist(0.05, 4.0);
  std::uniform_real_distribution<double> slack(0.0, 2.0);
  for (int i = 0; i < 6; ++i) {
    Real c = ctx.real(cdist(rng));
    Real a = 1 + c / 2 + ctx.real(slack(rng));
    auto p = FamilyParams::normalized(a, c);
    check_close(mahler_minus(p, ctx) + mahler_plus(p, ctx), log(a), 30);
  }
}

TEST_CASE("half-measure relation for the Boyd family") {
  PrecisionContext ctx;
  for (double kd : {0.5, 1.0, 2.0, 3.0, 3.5}) {
    Real k = ctx.real(kd);
    Real a = boyd_a_from_k(k);
    auto bp = boyd_params(a);
    check_close(bp.k, k, 30);
    auto p = FamilyParams::normalized(a, bp.c);
    Real rhs = mahler_minus(p, ctx) - 3 * mahler_plus(p, ctx);
    Real lhs = mahler_full(family(ctx.real(1L), ctx.real(1L), k), ctx);
    INFO("k = " << kd);
    check_close(lhs, rhs, 28);
  }
}

TEST_CASE("symmetries of the full measure") {
  PrecisionContext ctx;
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(0.3, 3.0);
  for (int i = 0; i < 4; ++i) {
    Real a = ctx.real(dist(rng)), b = ctx.real(dist(rng)), c = ctx.real(2 * dist(rng));
    Real base = mahler_full(family(a, b, c), ctx);
    check_close(mahler_full(family(b, a, c), ctx), base, 29);
    check_close(mahler_full(family(a, b, -c), ctx), base, 29);
    check_close(mahler_full(family(-a, b, c), ctx), base, 29);
    check_close(log(b) + mahler_full(family(a / b, ctx.real(1L), c / b), ctx), base, 29);
    if (auto trivial = trivial_region_value(family(a, b, c))) check_close(*trivial, base, 29);
  }
}

TEST_CASE("conclusion family") {
  PrecisionContext ctx;
  CHECK(mahler_conclusion_family(ctx.real(1L), ctx).is_zero());
  for (long a2 : {2L, 4L}) {
    Real a = sqrt(ctx.real(a2));
    Real lhs = mahler_conclusion_family(a, ctx);
    Real rhs = 3 * mahler_full(family(a, ctx.real(1L), ctx.real(a2 - 1)), ctx) / 2 - log(a);
    INFO("a^2 = " << a2);
    check_close(lhs, rhs, 28);
  }
  // Beyond a = 3 the whole circle contributes.
  Real a = ctx.real(4L);
  check_close(mahler_conclusion_family(a, ctx),
              3 * mahler_full(family(a, ctx.real(1L), ctx.real(15L)), ctx) / 2 - log(a), 28);
  CHECK_THROWS_AS(mahler_conclusion_family(ctx.real(0.5), ctx), DomainError);
}
