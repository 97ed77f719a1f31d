#include "mahler/elliptic.hpp"

#include "mahler/errors.hpp"
#include "mahler/quadrature.hpp"

namespace mahler {

namespace {

void require_modulus(const Real& z, const char* who) {
  if (z < 0L || !(z < 1L)) throw DomainError(std::string(who) + " requires 0 <= z < 1");
}

void require_v(const Real& v, const char* who) {
  if (!(v > 1L) || !(square(v) < 2L)) throw DomainError(std::string(who) + " requires 1 < v < sqrt(2)");
}

Real complementary(const Real& z) { return sqrt((1 - z) * (1 + z)); }

// Q_v(t) = v^2 t^2 + 2(v^2 - 1) v t + v^4 - v^2 - 1 = v^2 (t - alpha)(t - beta).
IntegrandSpec lemma_integrand(const SubstitutionParams& s, bool weighted,
                              const PrecisionContext& ctx) {
  return {[&s, weighted](const Node& n) {
            Real q = square(s.v) * n.from_left * (n.x - s.beta);
            Real base = 1 / sqrt(n.from_right * (1 + n.x) * q);
            return weighted ? (2 * n.x + s.v) * base : base;
          },
          s.alpha, ctx.real(1L), Singularity::inverse_sqrt_both};
}

}  // namespace

Real ellint_K(const Real& z_in, const PrecisionContext& ctx) {
  require_modulus(z_in, "ellint_K");
  Real z = z_in.at_precision(ctx.work_bits());
  return ctx.pi() / (2 * agm(ctx.real(1L), complementary(z), ctx));
}

Real ellint_E(const Real& z_in, const PrecisionContext& ctx) {
  require_modulus(z_in, "ellint_E");
  Real z = z_in.at_precision(ctx.work_bits());
  // E = K (1 - sum_{n>=0} 2^{n-1} c_n^2) with c_0 = z, c_{n+1} = (a_n - b_n)/2.
  Real a = ctx.real(1L);
  Real b = complementary(z);
  Real sum = square(z) / 2;
  Real weight = ctx.real(1L);
  Real stop = ldexp(ctx.real(1L), -(ctx.work_bits() - ctx.guard_bits()));
  for (int i = 0; i < 10000 && !(abs(a - b) < stop * a); ++i) {
    Real c = (a - b) / 2;
    sum += weight * square(c);
    weight *= 2;
    Real next = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next);
  }
  Real k = ctx.pi() / (a + b);
  return k * (1 - sum);
}

Real ellint_Pi(const Real& n_in, const Real& z_in, const PrecisionContext& ctx) {
  require_modulus(z_in, "ellint_Pi");
  if (!(n_in < 1L)) throw DomainError("ellint_Pi requires n < 1");
  Real n = n_in.at_precision(ctx.work_bits());
  Real z2 = square(z_in.at_precision(ctx.work_bits()));
  IntegrandSpec spec{[&](const Node& node) {
                       Real x2 = square(node.x);
                       return 1 / ((1 - n * x2) *
                                   sqrt(node.from_right * (1 + node.x) * (1 - z2 * x2)));
                     },
                     ctx.real(0L), ctx.real(1L), Singularity::inverse_sqrt_right};
  return integrate(spec, ctx);
}

Real hyp2f1_half(const Real& z_in, const PrecisionContext& ctx, int max_terms) {
  require_modulus(z_in, "hyp2f1_half");
  Real z = z_in.at_precision(ctx.work_bits());
  Real sum = ctx.real(1L);
  Real term = ctx.real(1L);
  if (z.is_zero()) return sum;
  // Successive terms have ratio z (2n + 1)^2 / (2n + 2)^2 < z, so the tail
  // after the current term is below term * z / (1 - z).
  Real tail_factor = z / (1 - z);
  Real tol = ldexp(ctx.real(1L), -ctx.work_bits());
  for (long n = 0; n < max_terms; ++n) {
    term *= z * square(ctx.real(2 * n + 1) / (2 * n + 2));
    sum += term;
    if (term * tail_factor < tol * sum) return sum;
  }
  throw NonConvergence("hyp2f1_half: series needs more than " + std::to_string(max_terms) +
                       " terms at z = " + z.to_string(10));
}

Real dK_dz(const Real& z_in, const PrecisionContext& ctx) {
  if (z_in.is_zero()) throw DomainError("dK_dz requires z != 0");
  Real z = z_in.at_precision(ctx.work_bits());
  return ellint_E(z, ctx) / (z * (1 - square(z))) - ellint_K(z, ctx) / z;
}

Real dPi_dn(const Real& n_in, const Real& z_in, const PrecisionContext& ctx) {
  Real n = n_in.at_precision(ctx.work_bits());
  Real z2 = square(z_in.at_precision(ctx.work_bits()));
  if (n.is_zero() || n == 1L || n == z2) throw DomainError("dPi_dn requires n not in {0, 1, z^2}");
  Real e = ellint_E(z_in, ctx), k = ellint_K(z_in, ctx), p = ellint_Pi(n, z_in, ctx);
  return (n * e + (z2 - n) * k + (square(n) - z2) * p) / (2 * n * (n - 1) * (z2 - n));
}

Real dPi_dz(const Real& n_in, const Real& z_in, const PrecisionContext& ctx) {
  Real n = n_in.at_precision(ctx.work_bits());
  Real z = z_in.at_precision(ctx.work_bits());
  Real z2 = square(z);
  if (z.is_zero() || n == z2) throw DomainError("dPi_dz requires z != 0 and n != z^2");
  Real e = ellint_E(z, ctx), p = ellint_Pi(n, z, ctx);
  return z / ((z2 - 1) * (n - z2)) * (e + (z2 - 1) * p);
}

SubstitutionParams SubstitutionParams::from_v(const Real& v_in, const PrecisionContext& ctx) {
  require_v(v_in, "SubstitutionParams::from_v");
  Real v = v_in.at_precision(ctx.work_bits());
  Real v2 = square(v);
  Real root = sqrt(2 - v2);
  // Inverse of v = (u^2 + 2u - 1)/(u^2 + 1) on u > 1 + sqrt(2).
  Real u = (1 + root) / (v - 1);
  Real w = (1 - 2 * v * root + 2 * v2 - square(v2)) / square(v2 - 1);
  Real r = sqrt(w);
  Real alpha = (root - v2 + 1) / v;
  Real beta = (-root - v2 + 1) / v;
  return {std::move(u), std::move(v), std::move(w), std::move(r), std::move(alpha),
          std::move(beta)};
}

SubstitutionParams SubstitutionParams::from_u(const Real& u_in, const PrecisionContext& ctx) {
  Real u = u_in.at_precision(ctx.work_bits());
  if (!(u > 1 + sqrt(ctx.real(2L)))) throw DomainError("SubstitutionParams requires u > 1 + sqrt(2)");
  Real u2 = square(u);
  SubstitutionParams s = from_v((u2 + 2 * u - 1) / (u2 + 1), ctx);
  s.u = std::move(u);
  return s;
}

std::pair<Real, Real> lemma_EI1_check(const Real& v_in, const PrecisionContext& ctx) {
  SubstitutionParams s = SubstitutionParams::from_v(v_in, ctx);
  Real two_v2 = 2 * square(s.v);
  IntegrandSpec left{[&](const Node& n) {
                       // (T + 2v^2 - 3) vanishes at the lower limit 3 - 2v^2.
                       return 1 / sqrt(n.from_right * (1 + n.x) * (n.x + two_v2 - 1) * n.from_left);
                     },
                     3 - two_v2, ctx.real(1L), Singularity::inverse_sqrt_both};
  Real lhs = integrate(left, ctx);
  Real rhs = integrate(lemma_integrand(s, false, ctx), ctx);
  return {std::move(lhs), std::move(rhs)};
}

Real lemma_EI2_check(const Real& v_in, const PrecisionContext& ctx) {
  SubstitutionParams s = SubstitutionParams::from_v(v_in, ctx);
  return s.v * integrate(lemma_integrand(s, true, ctx), ctx);
}

Real legendre_f(const Real& r) {
  Real s = sqrt(square(r) + 1);
  return r * (s + 1) * (s - r);
}

Real legendre_f_prime(const Real& r) {
  // f = r^3 + r - r^2 + (r - r^2) s
  Real s = sqrt(square(r) + 1);
  Real r2 = square(r);
  return 3 * r2 + 1 - 2 * r + (1 - 2 * r) * s + (r2 - r2 * r) / s;
}

Real legendre_form(const Real& r_in, const PrecisionContext& ctx) {
  Real r = r_in.at_precision(ctx.work_bits());
  if (!(r > 0L) || !(r < 1L)) throw DomainError("legendre_form requires 0 < r < 1");
  Real s = sqrt(square(r) + 1);
  Real z = square(r);
  return (1 - r) * ((1 - r - 2 * s) * ellint_K(z, ctx) + 4 * s * ellint_Pi(legendre_f(r), z, ctx));
}

Real legendre_form_derivative(const Real& r_in, const PrecisionContext& ctx) {
  Real r = r_in.at_precision(ctx.work_bits());
  if (!(r > 0L) || !(r < 1L)) throw DomainError("legendre_form_derivative requires 0 < r < 1");
  Real s = sqrt(square(r) + 1);
  Real r3 = r * square(r);
  Real r4 = square(square(r));
  Real z = square(r);
  Real f = legendre_f(r);
  Real fp = legendre_f_prime(r);
  Real e = ellint_E(z, ctx), k = ellint_K(z, ctx), p = ellint_Pi(f, z, ctx);

  // Chain rule through z = r^2 and n = f(r).
  Real dk = 2 * e / (r * (1 - r4)) - 2 * k / r;
  Real dp = (fp / (2 * (f - 1) * (r4 - f)) + 2 * r3 / ((r4 - 1) * (f - r4))) * e +
            fp / (2 * f * (f - 1)) * k +
            ((square(f) - r4) * fp / (2 * f * (f - 1) * (r4 - f)) + 2 * r3 / (f - r4)) * p;

  Real g = (1 - r - 2 * s) * k + 4 * s * p;
  Real dg = (-1 - 2 * r / s) * k + (1 - r - 2 * s) * dk + 4 * (r / s) * p + 4 * s * dp;
  return -g + (1 - r) * dg;
}

Periods periods_IJK(const Real& u_in, const PrecisionContext& ctx) {
  Real u = u_in.at_precision(ctx.work_bits());
  if (!(u > 1 + sqrt(ctx.real(2L)))) throw DomainError("periods_IJK requires u > 1 + sqrt(2)");
  Real u2 = square(u);
  Real u3 = u2 * u;
  Real u4 = square(u2);
  Real den = (u2 + 1) * (u2 + 2 * u - 1);
  Real t_minus = -(u4 + 2 * u3 - 6 * u - 1) / den;
  Real t_plus = (u4 - 6 * u3 + 2 * u - 1) / den;
  Real half_k = 8 * u * (u2 - 1) / square(u2 + 1);
  Real scale = 4 / ctx.pi();

  // (1 - t^2)(t - t_minus)(t - t_plus) near each end of the two gaps.
  auto upper = [&](bool weighted) {
    return IntegrandSpec{[&, weighted](const Node& n) {
                           Real base = 1 / sqrt(n.from_right * (1 + n.x) * n.from_left *
                                                (n.x - t_minus));
                           return weighted ? n.x * base : base;
                         },
                         t_plus, ctx.real(1L), Singularity::inverse_sqrt_both};
  };
  auto lower = [&](bool weighted) {
    return IntegrandSpec{[&, weighted](const Node& n) {
                           Real base = 1 / sqrt(n.from_left * (1 - n.x) * n.from_right *
                                                (t_plus - n.x));
                           return weighted ? n.x * base : base;
                         },
                         ctx.real(-1L), t_minus, Singularity::inverse_sqrt_both};
  };
  IntegrandSpec kp{[&](const Node& n) {
                     return 1 / sqrt(n.from_right * (1 + n.x) * n.from_left * (n.x + half_k + 1));
                   },
                   1 - half_k, ctx.real(1L), Singularity::inverse_sqrt_both};

  Periods p{scale * integrate(upper(false), ctx), scale * integrate(lower(false), ctx),
            scale * integrate(upper(true), ctx), scale * integrate(lower(true), ctx),
            2 * scale * integrate(kp, ctx)};
  return p;
}

std::pair<Real, Real> derivative_identity_sides(const Real& u, const Periods& p) {
  Real u2 = square(u);
  Real u4 = square(u2);
  Real q = u4 - 6 * u2 + 1;
  Real w = u2 + 1;
  Real w3 = w * square(w);
  Real lhs = q / w3 * p.Kp;
  Real rhs = (w3 * (p.J_minus + 3 * p.J_plus) +
              4 * (u2 + 2 * u - 1) * (u4 - 2 * u2 * u + 2 * u2 + 2 * u + 1) * p.I) /
             (square(w) * q);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace mahler
