#pragma once

// The curve a(x + 1/x) + (y + 1/y) + c = 0 in the Weierstrass form
// Y^2 = X(X^2 + A2 X + A4), A2 = c^2/4 - 1 - a^2, A4 = a^2, obtained from
// X = -a/(xy). Points carry complex coordinates at working precision.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

struct WeierstrassCurve {
  Real A2;
  Real A4;

  static WeierstrassCurve from_family(const Real& a, const Real& c);
  /// Target of the degree-2 isogeny: A2 = 2(a^4 - 6a^2 + 1)/(a^2 + 1)^2, A4 = 1.
  static WeierstrassCurve isogeny_target(const Real& a);

  Complex rhs(const Complex& X) const;
  /// |Y^2 - X(X^2 + A2 X + A4)| relative to max(1, |Y|^2).
  Real residual(const Complex& X, const Complex& Y) const;
  Real discriminant() const;
};

struct CurvePoint {
  std::optional<std::pair<Complex, Complex>> xy;  // empty for the point at infinity

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(Complex X, Complex Y) { return {std::make_pair(std::move(X), std::move(Y))}; }
  bool is_infinity() const { return !xy.has_value(); }
  const Complex& X() const { return xy->first; }
  const Complex& Y() const { return xy->second; }
  bool is_real(const Real& tol) const;
};

/// Coordinates agree to `tol` relative to max(1, |coordinate|).
bool approx_equal(const CurvePoint& p, const CurvePoint& q, const Real& tol);

/// 10^-(target_digits/2), the tolerance used to identify points.
Real point_tolerance(const PrecisionContext& ctx);

CurvePoint negate(const CurvePoint& p);
CurvePoint add(const CurvePoint& p, const CurvePoint& q, const WeierstrassCurve& e,
               const PrecisionContext& ctx);
CurvePoint scalar_mul(long n, const CurvePoint& p, const WeierstrassCurve& e,
                      const PrecisionContext& ctx);

/// Least n <= bound with nP = O, if any.
std::optional<int> torsion_order(const CurvePoint& p, const WeierstrassCurve& e,
                                 const PrecisionContext& ctx, int bound = 16);

/// a(x + 1/x) + (y + 1/y) + c.
Complex family_residual(const Complex& x, const Complex& y, const Real& a, const Real& c);

/// (x, y) -> (X, Y). Throws DomainError when xy = 0.
CurvePoint to_weierstrass(const Complex& x, const Complex& y, const Real& a, const Real& c);
/// (X, Y) -> (x, y) = (a(cX - 2Y)/(2X(X - a^2)), (cX + 2Y)/(2X(X - 1))).
/// Throws DomainError at O and where X is 0, 1 or a^2.
std::pair<Complex, Complex> from_weierstrass(const CurvePoint& p, const Real& a, const Real& c);

struct NamedPoints {
  CurvePoint P;
  CurvePoint Q;
  CurvePoint S_plus;
  CurvePoint S_minus;
  std::optional<CurvePoint> T_plus;  // present when c/2 < a - 1
  std::optional<CurvePoint> T_minus;
  bool complex = false;  // some radical was imaginary
};

/// P = (1, c/2), Q = (a^2, ca^2/2) and the points over |x| = 1, |y| = 1.
/// Requires c/2 < a + 1; throws RegionError otherwise, or when `require_real`
/// is set and the coordinates are not real.
NamedPoints named_points(const Real& a, const Real& c, const PrecisionContext& ctx,
                         bool require_real = false);

/// c = sqrt(2)(a^2 - 1)/sqrt(a^2 + 1), the case where 2P = 2Q.
Real c0_value(const Real& a);

/// The degree-2 isogeny from the curve at (a, c0_value(a)) to
/// WeierstrassCurve::isogeny_target(a). Throws KernelPoint at X = 2a^2/(a^2 + 1).
CurvePoint isogeny_phi(const CurvePoint& p, const Real& a);

// Divisors on the subgroup generated by P and P + Q = (0, 0). Since P + Q is
// 2-torsion an element is n P + e (P + Q) with e in {0, 1}; when 2P = 2Q the
// multiple n is further taken modulo 4.
struct PointLabel {
  long n = 0;
  int e = 0;
  auto operator<=>(const PointLabel&) const = default;
};

struct DivisorGroup {
  long p_order = 0;  // 0 when P has infinite order

  PointLabel P() const { return normalize({1, 0}); }
  PointLabel Q() const { return normalize({-1, 1}); }
  PointLabel O() const { return {}; }
  PointLabel PQ() const { return {0, 1}; }
  PointLabel add(PointLabel x, PointLabel y) const;
  PointLabel neg(PointLabel x) const;
  PointLabel normalize(PointLabel x) const;
  bool is_two_torsion(PointLabel x) const;
  std::string name(PointLabel x) const;
};

class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(DivisorGroup g) : group_(g) {}

  void add_term(PointLabel at, long mult);
  long degree() const;
  long multiplicity(PointLabel at) const;
  const std::map<PointLabel, long>& terms() const { return terms_; }
  const DivisorGroup& group() const { return group_; }
  /// "4(P) + 4(Q)" style rendering, terms in label order.
  std::string to_string() const;
  bool operator==(const Divisor& other) const { return terms_ == other.terms_; }

 private:
  DivisorGroup group_;
  std::map<PointLabel, long> terms_;
};

/// sum m_i n_j (a_i - b_j), reduced modulo (R) + (-R); 2-torsion points drop out.
Divisor diamond(const Divisor& f, const Divisor& g);

struct DivisorSet {
  Divisor div_x;
  Divisor div_y;
  Divisor diamond;
  std::optional<Divisor> pullback_diamond;  // (x' o phi) <> (y' o phi), only when 2P = 2Q
};

/// Divisors of the coordinate functions x, y and their diamond. With
/// `c0` set, the group relation 2P = 2Q is imposed and the pullback of the
/// Boyd-curve symbol through the isogeny is included.
DivisorSet divisors_and_diamond(bool c0);

struct TameSymbol {
  std::string label;
  Real expected;
  Real numeric;  // Richardson-extrapolated limit along an approach path
};

/// |(s x, y)_R| at R in {P, -Q, P+Q, O}, with s = x_scale. Each value is
/// also estimated by approaching R along the curve at distances 1e-6 and 1e-8.
std::vector<TameSymbol> tame_symbol_magnitudes(const Real& a, const Real& c,
                                               const PrecisionContext& ctx,
                                               const Real& x_scale);
std::vector<TameSymbol> tame_symbol_magnitudes(const Real& a, const Real& c,
                                               const PrecisionContext& ctx);

}  // namespace mahler
