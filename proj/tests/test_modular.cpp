#include <sstream>

#include "doctest.h"
#include "mahler/errors.hpp"
#include "mahler/modular.hpp"
#include "test_support.hpp"

using namespace mahler;
using mahler::testing::check_close;

namespace {

long sigma1(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Euler's pentagonal theorem: prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2), k in Z.
std::vector<long> pentagonal(int order) {
  std::vector<long> c(order, 0);
  for (long k = -100; k <= 100; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e < order) c[e] += (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

void check_small(const Real& v, int digits) { check_close(v, Real(0L, v.precision()), digits); }

}  // namespace

TEST_CASE("eta series matches the pentagonal number theorem") {
  auto want = pentagonal(200);
  QSeries e = eta_series(1, 200);
  CHECK(e.grading() == mpq_class(1, 24));
  for (int n = 0; n < 200; ++n) CHECK(e.coeff(n) == want[n]);

  QSeries e7 = eta_series(7, 100);
  CHECK(e7.grading() == mpq_class(7, 24));
  for (int n = 0; n < 100; ++n) CHECK(e7.coeff(n) == (n % 7 == 0 ? want[n / 7] : 0));
}

TEST_CASE("q-series arithmetic") {
  QSeries e = eta_series(1, 60);
  QSeries one = e * e.inverse();
  CHECK(one.grading() == 0);
  CHECK(one.coeff(0) == 1);
  for (int n = 1; n < 60; ++n) CHECK(one.coeff(n) == 0);

  // 1/prod(1 - q^n) generates partitions.
  QSeries p = e.inverse();
  CHECK(p.coeff(10) == 42);
  CHECK(p.coeff(50) == 204226);

  QSeries cube = e.pow(3);
  CHECK(cube.grading() == mpq_class(1, 8));
  // Jacobi: prod (1 - q^n)^3 = sum (-1)^k (2k+1) q^(k(k+1)/2).
  for (int n = 0; n < 60; ++n) {
    long want = 0;
    for (long k = 0; k * (k + 1) / 2 <= n; ++k)
      if (k * (k + 1) / 2 == n) want = (k % 2 ? -1 : 1) * (2 * k + 1);
    CHECK(cube.coeff(n) == want);
  }

  QSeries sum = e + eta_series(25, 60);  // gradings 1/24 and 25/24 differ by 1
  CHECK(sum.grading() == mpq_class(1, 24));
  CHECK(sum.coeff(0) == 1);
  CHECK(sum.coeff(1) == 0);  // -1 from eta(tau), +1 from eta(25 tau)

  CHECK_THROWS_AS(e + eta_series(2, 60), DomainError);
  CHECK_THROWS_AS(QSeries(0, {0, 1}).inverse(), DomainError);
  CHECK(QSeries(0, {0, 0, 3}).normalized().grading() == 2);
  CHECK(e.coeff_at(mpq_class(1, 24) + 1) == -1);
  CHECK(e.coeff_at(mpq_class(1, 24) + 5) == 1);
  CHECK(e.coeff_at(mpq_class(1, 2)) == 0);
}

TEST_CASE("Bernoulli polynomial and unit gradings") {
  CHECK(bernoulli2(mpq_class(1, 2)) == mpq_class(-1, 12));
  CHECK(bernoulli2(0) == mpq_class(1, 6));
  CHECK(modular_unit_g(1, 10).grading() == mpq_class(107, 84));
  CHECK_THROWS_AS(modular_unit_g(11, 10), DomainError);
}

TEST_CASE("eta quotients agree with the modular-unit products") {
  const int N = 100;
  QSeries x0 = x0_series(N), xu = x0_from_units(N);
  QSeries y = y_tilde_series(N), yu = y_tilde_from_units(N);
  CHECK(x0.grading() == -1);
  CHECK(y.grading() == 1);
  CHECK(xu.grading() == -1);
  CHECK(yu.grading() == 1);
  CHECK((x0 - xu).is_zero());
  CHECK((y - yu).is_zero());
  CHECK(x0.coeff(0) == 1);
  CHECK(y.coeff(0) == -1);
}

TEST_CASE("modular identities vanish as power series") {
  for (int order : {50, 200}) {
    QSeries r = ramanujan_entry68_residual(order);
    CHECK(r.order() == order);
    CHECK(r.is_zero());
  }
  QSeries c = curve_residual_series(100);
  CHECK(c.order() == 100);
  CHECK(c.is_zero());

  // A wrong constant must not vanish.
  QSeries broken = curve_residual_series(50) + mpq_class(1);
  CHECK_FALSE(broken.is_zero());
}

TEST_CASE("Eisenstein series") {
  QSeries e2 = E2_series(200);
  CHECK(e2.coeff(0) == 1);
  CHECK(e2.coeff(1) == -24);
  CHECK(e2.coeff(6) == -288);
  for (int n = 1; n < 200; ++n) CHECK(e2.coeff(n) == -24 * sigma1(n));

  QSeries g = eisenstein_g_series(120);
  CHECK(g.order() == 120);
  CHECK(g.coeff(0) == 0);
  for (int n = 1; n < 120; ++n) {
    long want = 24 * sigma1(n);
    if (n % 3 == 0) want -= 72 * sigma1(n / 3);
    if (n % 7 == 0) want -= 49 * 24 * sigma1(n / 7);
    if (n % 21 == 0) want += 147 * 24 * sigma1(n / 21);
    CHECK(g.coeff(n) == want);
  }

  QSeries f = lemma_f_series({1, -1, 1, -1}, 5);
  CHECK(f.coeff(0) == 0);
  CHECK(f.coeff(1) == 12);
  CHECK(f.coeff(2) == 15);
  CHECK(f.coeff(3) == 12);
  CHECK(f.coeff(4) == 42);

  QSeries gn = g.normalized();
  QSeries round_trip = (f * gn) / gn;
  for (int n = 0; n < round_trip.order(); ++n) CHECK(round_trip.coeff(n) == f.coeff(n));
}

TEST_CASE("numeric evaluation") {
  PrecisionContext ctx;
  Complex tau(ctx.ratio(1, 5), ctx.ratio(7, 10));
  // Truncation error at order 200 is |q|^200, far below the tolerance.
  Complex series = eta_series(1, 200).evaluate(tau, ctx);
  Complex product = eta_numeric(1, tau, ctx);
  check_small(abs(series - product), 28);

  Complex e2s = E2_series(300).evaluate(tau, ctx);
  check_small(abs(e2s - E2_numeric(tau, ctx)), 28);

  // eta(-1/tau) = sqrt(tau/i) eta(tau).
  Complex tau2(ctx.ratio(1, 10), ctx.ratio(11, 10));
  Complex lhs = eta_numeric(1, -inverse(tau2), ctx);
  Complex rhs = sqrt(tau2 / Complex(ctx.real(0L), ctx.real(1L))) * eta_numeric(1, tau2, ctx);
  check_small(abs(lhs - rhs), 28);

  // E2(-1/tau) = tau^2 E2(tau) + 6 tau / (pi i).
  Complex i(ctx.real(0L), ctx.real(1L));
  Complex e2l = E2_numeric(-inverse(tau2), ctx);
  Complex e2r = tau2 * tau2 * E2_numeric(tau2, ctx) + 6L * tau2 / (ctx.pi() * i);
  check_small(abs(e2l - e2r), 26);

  CHECK_THROWS_AS(eta_numeric(1, Complex(ctx.real(0L), ctx.real(1e-4)), ctx), DomainError);
  CHECK_THROWS_AS(E2_numeric(Complex(ctx.real(0L), ctx.real(1e-4)), ctx), DomainError);
}

TEST_CASE("parametrization lies on the curve") {
  PrecisionContext ctx;
  std::vector<Complex> taus = geodesic_samples(6, ctx);
  taus.emplace_back(ctx.ratio(1, 3), ctx.ratio(1, 2));
  taus.emplace_back(ctx.ratio(-2, 7), ctx.ratio(1, 10));
  taus.emplace_back(ctx.real(0L), ctx.real(1L));
  taus.emplace_back(ctx.ratio(1, 2), ctx.ratio(1, 20));
  REQUIRE(taus.size() == 10);
  for (const auto& t : taus) check_small(abs(parametrization_residual(t, ctx)), 25);
}

TEST_CASE("geodesic, CM points and Atkin-Lehner involutions") {
  PrecisionContext ctx;
  auto samples = geodesic_samples(5, ctx);
  CMPoints p = cm_points(ctx);
  check_small(abs(samples.front() - p.tau_plus), 30);
  check_small(abs(samples.back() - p.tau_minus), 30);
  for (const auto& t : samples) check_close(norm(t), ctx.ratio(1, 21), 30);

  for (const auto& r : atkin_lehner_matrix_checks(ctx)) {
    INFO(r.name);
    check_small(r.value, 30);
  }
  for (const auto& t : samples) {
    check_close(abs(x_tilde(t, ctx)), ctx.real(1L), 25);
    check_small(abs(y_tilde(t, ctx).im()), 25);
    for (const auto& r : atkin_lehner_checks(t, ctx)) {
      INFO(r.name);
      check_small(r.value, 24);
    }
  }
  for (const auto& r : cm_image_checks(ctx)) {
    INFO(r.name);
    check_small(r.value, 24);
  }

  Complex fixed(ctx.real(0L), 1 / sqrt(ctx.real(21L)));
  check_close(abs(x_tilde(fixed, ctx)), ctx.real(1L), 25);
  CHECK(abs(y_tilde(fixed, ctx)) < 1);
}

TEST_CASE("dump format") {
  std::ostringstream os;
  QSeries(mpq_class(-1, 4), {1, -1, mpq_class(1, 2)}).dump(os);
  CHECK(os.str() == "grading -6/24, order 3\n0 1\n1 -1\n2 1/2\n");
  std::ostringstream os2;
  modular_unit_g(1, 1).dump(os2);
  CHECK(os2.str() == "grading 107/84, order 1\n0 1\n");
}
