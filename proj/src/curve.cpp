#include "mahler/curve.hpp"

#include <array>
#include <sstream>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

Real scale_of(const Complex& z) { return max(Real(1L, z.precision()), abs(z)); }

bool near_zero(const Complex& z, const Complex& reference) {
  long bits = z.precision();
  return abs(z) <= ldexp(Real(1L, bits), -(bits - 8)) * scale_of(reference);
}

}  // namespace

WeierstrassCurve WeierstrassCurve::from_family(const Real& a, const Real& c) {
  Real a2 = square(a);
  return {square(c) / 4 - 1 - a2, a2};
}

WeierstrassCurve WeierstrassCurve::isogeny_target(const Real& a) {
  Real a2 = square(a);
  return {2 * (square(a2) - 6 * a2 + 1) / square(a2 + 1), Real(1L, a.precision())};
}

Complex WeierstrassCurve::rhs(const Complex& X) const { return X * ((X + A2) * X + A4); }

Real WeierstrassCurve::residual(const Complex& X, const Complex& Y) const {
  Complex y2 = Y * Y;
  return abs(y2 - rhs(X)) / scale_of(y2);
}

Real WeierstrassCurve::discriminant() const {
  // X(X^2 + A2 X + A4): 16 A4^2 (A2^2 - 4 A4).
  return 16 * square(A4) * (square(A2) - 4 * A4);
}

bool CurvePoint::is_real(const Real& tol) const {
  if (is_infinity()) return true;
  return abs(X().im()) <= tol * scale_of(X()) && abs(Y().im()) <= tol * scale_of(Y());
}

bool approx_equal(const CurvePoint& p, const CurvePoint& q, const Real& tol) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
  return abs(p.X() - q.X()) <= tol * scale_of(p.X()) && abs(p.Y() - q.Y()) <= tol * scale_of(p.Y());
}

Real point_tolerance(const PrecisionContext& ctx) {
  return pow10(-ctx.target_digits() / 2, ctx.work_bits());
}

CurvePoint negate(const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint::affine(p.X(), -p.Y());
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q, const WeierstrassCurve& e,
               const PrecisionContext& ctx) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Real tol = point_tolerance(ctx);
  const Complex& x1 = p.X();
  const Complex& y1 = p.Y();
  const Complex& x2 = q.X();
  const Complex& y2 = q.Y();
  Complex lambda(ctx.work_bits());
  if (abs(x1 - x2) <= tol * scale_of(x1)) {
    if (abs(y1 + y2) <= tol * scale_of(y1)) return CurvePoint::infinity();
    lambda = (3 * x1 * x1 + 2 * e.A2 * x1 + e.A4) / (2 * y1);
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Complex x3 = lambda * lambda - e.A2 - x1 - x2;
  Complex y3 = -(y1 + lambda * (x3 - x1));
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint scalar_mul(long n, const CurvePoint& p, const WeierstrassCurve& e,
                      const PrecisionContext& ctx) {
  CurvePoint base = n < 0 ? negate(p) : p;
  unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::infinity();
  while (k) {
    if (k & 1) acc = add(acc, base, e, ctx);
    k >>= 1;
    if (k) base = add(base, base, e, ctx);
  }
  return acc;
}

std::optional<int> torsion_order(const CurvePoint& p, const WeierstrassCurve& e,
                                 const PrecisionContext& ctx, int bound) {
  CurvePoint r = p;
  for (int n = 1; n <= bound; ++n) {
    if (r.is_infinity()) return n;
    r = add(r, p, e, ctx);
  }
  return std::nullopt;
}

Complex family_residual(const Complex& x, const Complex& y, const Real& a, const Real& c) {
  return a * (x + inverse(x)) + y + inverse(y) + Complex(c);
}

CurvePoint to_weierstrass(const Complex& x, const Complex& y, const Real& a, const Real& c) {
  (void)c;
  Complex xy = x * y;
  if (abs(xy).is_zero()) throw DomainError("to_weierstrass requires xy != 0");
  Complex X = -Complex(a) / xy;
  Complex Y = a / (2 * xy) * (y - inverse(y) - a * (x - inverse(x)));
  return CurvePoint::affine(std::move(X), std::move(Y));
}

std::pair<Complex, Complex> from_weierstrass(const CurvePoint& p, const Real& a, const Real& c) {
  if (p.is_infinity()) throw DomainError("from_weierstrass: O maps to x = y = 0");
  const Complex& X = p.X();
  const Complex& Y = p.Y();
  Complex a2(square(a));
  if (near_zero(X, X) || near_zero(X - 1, X) || near_zero(X - a2, X))
    throw DomainError("from_weierstrass requires X not in {0, 1, a^2}");
  Complex x = a * (c * X - 2 * Y) / (2 * X * (X - a2));
  Complex y = (c * X + 2 * Y) / (2 * X * (X - 1));
  return {std::move(x), std::move(y)};
}

NamedPoints named_points(const Real& a, const Real& c, const PrecisionContext& ctx,
                         bool require_real) {
  Real A = a.at_precision(ctx.work_bits());
  Real C = c.at_precision(ctx.work_bits());
  Real half_c = C / 2;
  if (!(half_c < A + 1)) throw RegionError("named_points requires c/2 < a + 1");
  Real a2 = square(A);

  NamedPoints out{CurvePoint::affine(ctx.real(1L), half_c),
                  CurvePoint::affine(a2, half_c * a2),
                  CurvePoint::infinity(),
                  CurvePoint::infinity(),
                  std::nullopt,
                  std::nullopt,
                  false};

  Real h = 1 - half_c;
  Real ds2 = square(h) - a2;
  Complex ds = csqrt(ds2);
  out.S_plus = CurvePoint::affine(h - ds, ds * (h - ds));
  out.S_minus = CurvePoint::affine(h + ds, -ds * (h + ds));
  out.complex = ds2 < 0L;

  if (half_c < A - 1) {
    Real g = 1 + half_c;
    Real dt2 = square(g) - a2;
    Complex dt = csqrt(dt2);
    out.T_plus = CurvePoint::affine(g + dt, dt * (g + dt));
    out.T_minus = CurvePoint::affine(g - dt, -dt * (g - dt));
    out.complex = out.complex || dt2 < 0L;
  }
  if (require_real && out.complex)
    throw RegionError("named_points: S/T coordinates are not real for these parameters");
  return out;
}

Real c0_value(const Real& a) {
  Real a2 = square(a);
  return sqrt(Real(2L, a.precision())) * (a2 - 1) / sqrt(a2 + 1);
}

CurvePoint isogeny_phi(const CurvePoint& p, const Real& a) {
  if (p.is_infinity()) return p;
  Real a2 = square(a);
  Real s = a2 + 1;
  Complex d = s * p.X() - 2 * a2;
  if (near_zero(d, p.X())) throw KernelPoint("isogeny_phi: point lies in the kernel");
  Complex d2 = d * d;
  Complex X = 2 * s * p.Y() * p.Y() / d2;
  Real lead = sqrt(Real(8L, a.precision())) / (s * sqrt(s));
  Complex Y = lead * p.Y() * (1 + a2 * square(a2 - 1) / d2);
  return CurvePoint::affine(std::move(X), std::move(Y));
}

PointLabel DivisorGroup::normalize(PointLabel x) const {
  if (p_order > 0) x.n = ((x.n % p_order) + p_order) % p_order;
  x.e = ((x.e % 2) + 2) % 2;
  return x;
}

PointLabel DivisorGroup::add(PointLabel x, PointLabel y) const {
  return normalize({x.n + y.n, x.e + y.e});
}

PointLabel DivisorGroup::neg(PointLabel x) const { return normalize({-x.n, x.e}); }

bool DivisorGroup::is_two_torsion(PointLabel x) const { return add(x, x) == O(); }

std::string DivisorGroup::name(PointLabel x) const {
  x = normalize(x);
  if (x == O()) return "O";
  if (x == P()) return "P";
  if (x == Q()) return "Q";
  if (x == PQ()) return "P+Q";
  if (x == neg(P())) return "-P";
  if (x == neg(Q())) return "-Q";
  std::ostringstream os;
  os << x.n << "P";
  if (x.e) os << "+(P+Q)";
  return os.str();
}

void Divisor::add_term(PointLabel at, long mult) {
  at = group_.normalize(at);
  long& m = terms_[at];
  m += mult;
  if (m == 0) terms_.erase(at);
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [at, m] : terms_) d += m;
  return d;
}

long Divisor::multiplicity(PointLabel at) const {
  auto it = terms_.find(group_.normalize(at));
  return it == terms_.end() ? 0 : it->second;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [at, m] : terms_) {
    long mag = m < 0 ? -m : m;
    if (first) {
      if (m < 0) os << "-";
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << "(" << group_.name(at) << ")";
    first = false;
  }
  return os.str();
}

namespace {

// Rank used to pick the representative of {R, -R}: named points first.
int preference(const DivisorGroup& g, PointLabel x) {
  const std::array<PointLabel, 2> named{g.P(), g.Q()};
  for (std::size_t i = 0; i < named.size(); ++i)
    if (named[i] == x) return static_cast<int>(i);
  long n = x.n;
  if (g.p_order > 0 && 2 * n > g.p_order) n -= g.p_order;
  return n > 0 ? 10 : 11;
}

}  // namespace

Divisor diamond(const Divisor& f, const Divisor& g) {
  const DivisorGroup& grp = f.group();
  Divisor out(grp);
  for (const auto& [a, m] : f.terms()) {
    for (const auto& [b, n] : g.terms()) {
      PointLabel d = grp.add(a, grp.neg(b));
      if (grp.is_two_torsion(d)) continue;
      PointLabel nd = grp.neg(d);
      if (preference(grp, d) <= preference(grp, nd)) {
        out.add_term(d, m * n);
      } else {
        out.add_term(nd, -m * n);
      }
    }
  }
  return out;
}

DivisorSet divisors_and_diamond(bool c0) {
  DivisorGroup grp{c0 ? 4L : 0L};
  Divisor dx(grp), dy(grp);
  // From (X), (X - 1), (X - a^2) and (cX +- 2Y) through the inverse maps.
  dx.add_term(grp.PQ(), -1);
  dx.add_term(grp.P(), 1);
  dx.add_term(grp.neg(grp.Q()), -1);
  dx.add_term(grp.O(), 1);
  dy.add_term(grp.PQ(), -1);
  dy.add_term(grp.P(), -1);
  dy.add_term(grp.neg(grp.Q()), 1);
  dy.add_term(grp.O(), 1);

  DivisorSet out{dx, dy, diamond(dx, dy), std::nullopt};
  if (!c0) return out;

  // On the Boyd curve P' = Q' and P' + Q' = 2P'. The isogeny sends P to P'
  // with kernel {O, P - Q}, so the preimage of nP' is {nP, nP + P - Q}.
  PointLabel kernel = grp.add(grp.P(), grp.neg(grp.Q()));
  auto pull = [&](const std::array<std::pair<long, long>, 4>& terms) {
    Divisor d(grp);
    for (const auto& [n, m] : terms) {
      PointLabel r{n, 0};
      d.add_term(r, m);
      d.add_term(grp.add(r, kernel), m);
    }
    return d;
  };
  Divisor px = pull({{{2, -1}, {1, 1}, {-1, -1}, {0, 1}}});
  Divisor py = pull({{{2, -1}, {1, -1}, {-1, 1}, {0, 1}}});
  out.pullback_diamond = diamond(px, py);
  return out;
}

namespace {

struct Approach {
  const char* label;
  int vx;
  int vy;
  bool inverse_a;  // expected |(x, y)_R| is 1/a rather than a
};

constexpr std::array<Approach, 4> kApproaches{{
    {"P", 1, -1, true},
    {"-Q", -1, 1, true},
    {"P+Q", -1, -1, false},
    {"O", 1, 1, false},
}};

Complex branch_near(const WeierstrassCurve& e, const Complex& X, const Complex& target) {
  Complex y = sqrt(e.rhs(X));
  return abs(y - target) <= abs(y + target) ? y : -y;
}

// A point at distance delta (in a local parameter) from the labelled point.
CurvePoint approach_point(const std::string& label, const Real& delta, const Real& a,
                          const Real& c, const WeierstrassCurve& e) {
  Real a2 = square(a);
  if (label == "P") {
    Complex X(1 + delta);
    return CurvePoint::affine(X, branch_near(e, X, Complex(c / 2)));
  }
  if (label == "-Q") {
    Complex X(a2 + delta);
    return CurvePoint::affine(X, branch_near(e, X, Complex(-c * a2 / 2)));
  }
  if (label == "P+Q") {
    // Y is the local parameter at (0, 0); solve X^3 + A2 X^2 + A4 X = Y^2.
    Real target = square(delta);
    Real X = target / e.A4;
    for (int i = 0; i < 60; ++i) {
      Real f = X * ((X + e.A2) * X + e.A4) - target;
      Real df = (3 * X + 2 * e.A2) * X + e.A4;
      Real step = f / df;
      X -= step;
      if (abs(step) <= ldexp(abs(X), -static_cast<long>(X.precision()))) break;
    }
    return CurvePoint::affine(Complex(X), Complex(delta));
  }
  Complex X(1 / square(delta));
  Complex Y = sqrt(e.rhs(X));
  return CurvePoint::affine(X, Y);
}

}  // namespace

std::vector<TameSymbol> tame_symbol_magnitudes(const Real& a_in, const Real& c_in,
                                               const PrecisionContext& ctx,
                                               const Real& x_scale) {
  if (!(a_in > 0L)) throw DomainError("tame_symbol_magnitudes requires a > 0");
  Real a = a_in.at_precision(ctx.work_bits());
  Real c = c_in.at_precision(ctx.work_bits());
  Real s = x_scale.at_precision(ctx.work_bits());
  WeierstrassCurve e = WeierstrassCurve::from_family(a, c);
  const Real d1 = ctx.real("1e-6");
  const Real d2 = ctx.real("1e-8");

  std::vector<TameSymbol> out;
  for (const Approach& ap : kApproaches) {
    auto value_at = [&](const Real& delta) {
      auto [x, y] = from_weierstrass(approach_point(ap.label, delta, a, c, e), a, c);
      Complex sx = s * x;
      // |(-1)^{vx vy} (s x)^{vy} / y^{vx}|
      return abs(pow(sx, ap.vy) / pow(y, ap.vx));
    };
    Real v1 = value_at(d1);
    Real v2 = value_at(d2);
    Real numeric = (d1 * v2 - d2 * v1) / (d1 - d2);
    Real base = ap.inverse_a ? 1 / a : a;
    Real expected = base * pow(s, static_cast<long>(ap.vy));
    out.push_back({ap.label, std::move(expected), std::move(numeric)});
  }
  return out;
}

std::vector<TameSymbol> tame_symbol_magnitudes(const Real& a, const Real& c,
                                               const PrecisionContext& ctx) {
  return tame_symbol_magnitudes(a, c, ctx, ctx.real(1L));
}

}  // namespace mahler
