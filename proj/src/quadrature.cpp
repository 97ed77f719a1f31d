#include "mahler/quadrature.hpp"

#include <cmath>
#include <string>

#include "mahler/errors.hpp"

namespace mahler {

IntegrandSpec IntegrandSpec::plain(std::function<Real(const Real&)> f, Real left, Real right,
                                   Singularity singularity) {
  return {[f = std::move(f)](const Node& node) { return f(node.x); }, std::move(left),
          std::move(right), singularity};
}

namespace {

// Contribution of the symmetric node pair at parameter t, i.e. the weight
// times f(x) + f(-x) mapped onto [left, right]. Returns false once the
// weight has dropped below `cutoff`.
struct PairEvaluator {
  const IntegrandSpec& spec;
  const Real& mid;
  const Real& half;
  const Real& half_pi;
  const Real& cutoff;

  bool operator()(const Real& t, Real& out) const {
    Real u = exp(t);
    Real sinh_t = (u - 1 / u) / 2;
    Real cosh_t = (u + 1 / u) / 2;
    Real e = exp(half_pi * sinh_t);
    Real e2 = square(e);
    Real denom = e2 + 1;
    // x = tanh(pi/2 sinh t); weight = pi/2 cosh t / cosh^2(pi/2 sinh t).
    Real weight = half_pi * cosh_t * 4 * e2 / square(denom);
    if (weight < cutoff) return false;
    Real near = half * 2 / denom;        // distance to the closer endpoint
    Real far = half * 2 * e2 / denom;    // distance to the farther endpoint
    Real x_right = spec.right - near;
    Real x_left = spec.left + near;
    Real f_right = spec.evaluator(Node{x_right, far, near});
    Real f_left = spec.evaluator(Node{x_left, near, far});
    if (!f_right.is_finite() || !f_left.is_finite()) {
      throw DomainError("integrand is not finite at an interior node near " +
                        x_right.to_string(12) + " / " + x_left.to_string(12));
    }
    out = weight * (f_right + f_left);
    return true;
  }
};

Real sum_nodes(const PairEvaluator& pair, const Real& h, long step, long offset, bool include_center,
               const PrecisionContext& ctx) {
  Real sum = ctx.real(0L);
  if (include_center) {
    Real center = pair.spec.evaluator(Node{pair.mid, pair.half, pair.half});
    if (!center.is_finite()) throw DomainError("integrand is not finite at the midpoint");
    sum += pair.half_pi * center;
  }
  Real term(ctx.work_bits());
  for (long j = offset;; j += step) {
    Real t = h * j;
    if (!pair(t, term)) break;
    sum += term;
  }
  return sum;
}

}  // namespace

Real integrate(const IntegrandSpec& spec, const PrecisionContext& ctx,
               const QuadratureOptions& options) {
  if (!(spec.left < spec.right)) throw DomainError("integrate: left endpoint must be below right");
  const long bits = ctx.work_bits();
  Real mid = (spec.left + spec.right) / 2;
  Real half = (spec.right - spec.left) / 2;
  Real half_pi = Real::pi(bits) / 2;
  // Weights below eps^2 cannot matter even against inverse-sqrt growth.
  Real cutoff = square(ctx.epsilon());
  PairEvaluator pair{spec, mid, half, half_pi, cutoff};

  Real h = ctx.real(1L);
  // Level 0: all integer multiples of h.
  Real sum = sum_nodes(pair, h, 1, 1, true, ctx);
  Real estimate = half * h * sum;
  Real agreement = pow10(-(ctx.target_digits() + 2), bits);
  for (int level = 1; level <= options.max_level; ++level) {
    h /= 2;
    sum += sum_nodes(pair, h, 2, 1, false, ctx);
    Real next = half * h * sum;
    Real diff = abs(next - estimate);
    Real scale = max(ctx.real(1L), abs(next));
    estimate = std::move(next);
    if (level >= options.min_level && diff <= agreement * scale) return estimate;
  }
  throw NonConvergence("tanh-sinh quadrature did not converge within " +
                       std::to_string(options.max_level) + " levels");
}

Real agm(const Real& a0, const Real& b0, const PrecisionContext& ctx) {
  if (!(a0 > 0L) || !(b0 > 0L)) throw DomainError("agm requires positive arguments");
  Real a = a0.at_precision(ctx.work_bits());
  Real b = b0.at_precision(ctx.work_bits());
  Real stop = ldexp(ctx.real(1L), -(ctx.work_bits() - ctx.guard_bits()));
  for (int i = 0; i < 10000; ++i) {
    if (abs(a - b) < stop * max(a, b)) break;
    Real next = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next);
  }
  return (a + b) / 2;
}

}  // namespace mahler
