#include "mahler/measures.hpp"

#include "mahler/errors.hpp"
#include "mahler/quadrature.hpp"

namespace mahler {

FamilyParams FamilyParams::normalized(Real a, Real c) {
  Real one(1L, a.precision());
  return {std::move(a), std::move(one), std::move(c)};
}

namespace {

Real clamp_unit(const Real& t) {
  if (t < -1L) return Real(-1L, t.precision());
  if (t > 1L) return Real(1L, t.precision());
  return t;
}

// acosh(1 + d) where d = u - 1 >= 0 and root = sqrt(u^2 - 1) are supplied
// without cancellation.
Real acosh_from_offset(const Real& d, const Real& root) { return log1p(d + root); }

// (1/pi) * integral over [t_plus, 1] of acosh(a t + c/2) / sqrt(1 - t^2),
// for a > 0, c >= 0.
Real half_minus(const Real& a, const Real& c, const PrecisionContext& ctx) {
  Real raw = (2 - c) / (2 * a);
  if (raw >= 1L) return ctx.real(0L);
  const bool has_root = raw > -1L;  // otherwise |y_-| > 1 on the whole circle
  Real left = has_root ? raw : ctx.real(-1L);
  Real half_c = c / 2;
  IntegrandSpec spec{
      [&](const Node& n) {
        Real u = a * n.x + half_c;
        Real offset = has_root ? a * n.from_left : u - 1;
        Real root = sqrt(offset * (u + 1));
        Real one_plus_t = has_root ? n.x + 1 : n.from_left;
        return acosh_from_offset(offset, root) / sqrt(n.from_right * one_plus_t);
      },
      left, ctx.real(1L),
      has_root ? Singularity::inverse_sqrt_right : Singularity::inverse_sqrt_both};
  return integrate(spec, ctx) / ctx.pi();
}

// (1/pi) * integral over [-1, t_minus] of acosh(-(a t + c/2)) / sqrt(1 - t^2).
Real half_plus(const Real& a, const Real& c, const PrecisionContext& ctx) {
  Real raw = -(2 + c) / (2 * a);
  if (raw <= -1L) return ctx.real(0L);
  Real half_c = c / 2;
  IntegrandSpec spec{
      [&](const Node& n) {
        Real v = -(a * n.x + half_c);  // >= 1 on the range
        Real offset = a * n.from_right;
        Real root = sqrt(offset * (v + 1));
        Real one_minus_t = 1 - n.x;
        return acosh_from_offset(offset, root) / sqrt(n.from_left * one_minus_t);
      },
      ctx.real(-1L), raw, Singularity::inverse_sqrt_left};
  return integrate(spec, ctx) / ctx.pi();
}

void require_half_measure_domain(const FamilyParams& p) {
  if (!p.is_normalized()) throw DomainError("half-measures require b = 1");
  if (p.a < 1L) throw DomainError("half-measures require a >= 1");
  if (!(p.c > 0L)) throw DomainError("half-measures require c > 0");
}

}  // namespace

CriticalData critical_data(const FamilyParams& p) {
  if (!p.is_normalized()) throw DomainError("critical_data requires b = 1");
  if (!(p.a > 0L)) throw DomainError("critical_data requires a > 0");
  Real t_minus = clamp_unit(-(2 + p.c) / (2 * p.a));
  Real t_plus = clamp_unit((2 - p.c) / (2 * p.a));
  Real theta_minus = acos(t_minus);
  Real theta_plus = acos(t_plus);
  return {std::move(t_minus), std::move(t_plus), std::move(theta_minus), std::move(theta_plus)};
}

std::optional<Real> trivial_region_value(const FamilyParams& p) {
  Real abs_a = abs(p.a);
  Real abs_b = abs(p.b);
  if (abs(p.c) <= 2 * abs(abs_a - abs_b)) return log(max(abs_a, abs_b));
  return std::nullopt;
}

std::pair<Complex, Complex> y_branches(const Real& theta, const FamilyParams& p) {
  if (!p.is_normalized()) throw DomainError("y_branches requires b = 1");
  // On |x| = 1, a(x + 1/x) + c = 2a cos(theta) + c is real.
  Real big_a = 2 * p.a * cos(theta) + p.c;
  Complex root = csqrt(square(big_a) - 4);
  Complex minus_a(-big_a);
  return {(minus_a + root) / Real(2L, theta.precision()),
          (minus_a - root) / Real(2L, theta.precision())};
}

Real mahler_full(const FamilyParams& p, const PrecisionContext& ctx) {
  if (p.a.is_zero() || p.b.is_zero()) throw DomainError("mahler_full requires ab != 0");
  // m(P_{a,b,c}) = log|b| + m(P_{a/b,1,c/b}), and the measure only depends
  // on |a/b| and |c/b| (substitute x -> -x, and (x, y) -> (-x, -y)).
  Real a = abs(p.a / p.b).at_precision(ctx.work_bits());
  Real c = abs(p.c / p.b).at_precision(ctx.work_bits());
  return log(abs(p.b)) + half_minus(a, c, ctx) + half_plus(a, c, ctx);
}

Real mahler_minus(const FamilyParams& p, const PrecisionContext& ctx) {
  require_half_measure_domain(p);
  if ((2 - p.c) / (2 * p.a) >= 1L) throw EmptyRegion("t_plus >= 1: the y_- arc is empty");
  return half_minus(p.a.at_precision(ctx.work_bits()), p.c.at_precision(ctx.work_bits()), ctx);
}

Real mahler_plus(const FamilyParams& p, const PrecisionContext& ctx) {
  require_half_measure_domain(p);
  return half_plus(p.a.at_precision(ctx.work_bits()), p.c.at_precision(ctx.work_bits()), ctx);
}

BoydParams boyd_params(const Real& a) {
  if (!(a > 1L)) throw DomainError("boyd_params requires a > 1");
  Real a2 = square(a);
  Real c = sqrt(Real(2L, a.precision())) * (a2 - 1) / sqrt(a2 + 1);
  Real k = 4 * (a2 - 1) / (a2 + 1);
  return {std::move(c), std::move(k)};
}

Real boyd_a_from_k(const Real& k) {
  if (!(k > 0L) || !(k < 4L)) throw DomainError("boyd_a_from_k requires 0 < k < 4");
  return sqrt((4 + k) / (4 - k));
}

Real mahler_conclusion_family(const Real& a_in, const PrecisionContext& ctx) {
  if (a_in < 1L) throw DomainError("mahler_conclusion_family requires a >= 1");
  Real a = a_in.at_precision(ctx.work_bits());
  // With x = e^{i theta}, t = cos(theta), dividing the quadratic in y by
  // x^{3/2} gives s w^2 + b w + s with s = 2cos(theta/2), b = 2t + 3 - a^2
  // and |w| = |y|. The roots have product 1, so the Jensen integrand is
  // acosh(|b| / 2|s|) where b^2 > 4s^2, i.e. for t < t1.
  Real a2 = square(a);
  Real t1 = (square(a - 1) - 2) / 2;
  Real t2 = (square(a + 1) - 2) / 2;
  if (t1 <= -1L) return ctx.real(0L);
  const bool has_root = t1 < 1L;
  Real right = has_root ? t1 : ctx.real(1L);
  IntegrandSpec spec{
      [&](const Node& n) {
        Real s2 = 2 * n.from_left;  // 4cos^2(theta/2) = 2(1 + t)
        Real b = 2 * n.x + 3 - a2;
        Real abs_b = abs(b);
        // b^2 - 4s^2 = 4(t - t1)(t - t2)
        Real disc = has_root ? 4 * n.from_right * (t2 - n.x) : square(b) - 4 * s2;
        Real s = sqrt(s2);
        Real offset = disc / (2 * s * (abs_b + 2 * s));  // |b|/(2|s|) - 1
        Real root = sqrt(disc) / (2 * s);
        Real one_minus_t = has_root ? 1 - n.x : n.from_right;
        return log1p(offset + root) / sqrt(n.from_left * one_minus_t);
      },
      ctx.real(-1L), right, Singularity::log_endpoint};
  return integrate(spec, ctx) / ctx.pi();
}

}  // namespace mahler
