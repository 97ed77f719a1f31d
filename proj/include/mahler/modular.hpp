#pragma once

// Truncated q-series with exact rational coefficients, the eta quotients
// and level-21 modular units that parametrize the curve
// sqrt(7)(x + 1/x) + (y + 1/y) + 3 = 0, and numeric evaluation at points of
// the upper half-plane.

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

/// q^grading * sum_{n < order} c_n q^n + O(q^(grading + order)).
class QSeries {
 public:
  QSeries() = default;
  QSeries(mpq_class grading, std::vector<mpq_class> coeffs);

  /// c * q^grading, known to `order` terms.
  static QSeries monomial(mpq_class c, mpq_class grading, int order);
  static QSeries constant(mpq_class c, int order) { return monomial(std::move(c), 0, order); }

  const mpq_class& grading() const { return grading_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  /// Coefficient of q^(grading + n); zero outside the stored range.
  mpq_class coeff(int n) const;
  /// Coefficient of q^e for an absolute exponent e.
  mpq_class coeff_at(const mpq_class& e) const;

  /// Drop terms at and beyond relative index `order`.
  QSeries truncated(int order) const;
  /// Shift leading zero coefficients into the grading.
  QSeries normalized() const;
  /// f(q^m).
  QSeries dilate(int m) const;

  QSeries operator-() const;
  QSeries& operator*=(const mpq_class& c);
  friend QSeries operator*(QSeries f, const mpq_class& c) { return f *= c; }
  friend QSeries operator*(const mpq_class& c, QSeries f) { return f *= c; }

  /// Gradings must differ by an integer.
  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }
  friend QSeries operator*(const QSeries& f, const QSeries& g);
  friend QSeries operator/(const QSeries& f, const QSeries& g) { return f * g.inverse(); }
  friend QSeries operator+(const QSeries& f, const mpq_class& c);

  /// Throws DomainError when the leading coefficient is zero.
  QSeries inverse() const;
  QSeries pow(int n) const;

  /// Every stored coefficient vanishes.
  bool is_zero() const;

  /// Sum of the stored terms at q = exp(2 pi i tau).
  Complex evaluate(const Complex& tau, const PrecisionContext& ctx) const;

  /// Header `grading p/q, order N` then one `n c_n` line per term.
  void dump(std::ostream& os) const;

 private:
  mpq_class grading_ = 0;
  std::vector<mpq_class> coeffs_;
};

/// q^(m/24) prod_{n >= 1} (1 - q^(mn)) to `order` terms.
QSeries eta_series(int m, int order);
/// eta(m tau) by its product. Throws DomainError if Im(tau) < 1e-3.
Complex eta_numeric(int m, const Complex& tau, const PrecisionContext& ctx);

/// B_2(x) = x^2 - x + 1/6.
mpq_class bernoulli2(const mpq_class& x);
/// g_a = q^(21 B_2(a/21)/2) prod over n = +-a mod 21 of (1 - q^n), 1 <= a <= 10.
QSeries modular_unit_g(int a, int order);

/// x0 = sqrt(7) x~ = eta(t) eta(3t) / (eta(7t) eta(21t)).
QSeries x0_series(int order);
/// y~ = -(eta(t) eta(21t) / (eta(3t) eta(7t)))^2.
QSeries y_tilde_series(int order);
/// x0 through the modular units g_1 g_2 g_3^2 g_4 g_5 g_6^2 g_8 g_9^2 g_10.
QSeries x0_from_units(int order);
/// y~ as -(g_1 g_2 g_4 g_5 g_8 g_10)^2.
QSeries y_tilde_from_units(int order);

/// AB + 7/(AB) - (A/B)^2 - (B/A)^2 + 3 with A = eta(t)/eta(7t), B = A(3t).
QSeries ramanujan_entry68_residual(int order);
/// x0 + 7/x0 + y~ + 1/y~ + 3, i.e. the curve equation multiplied out.
QSeries curve_residual_series(int order);

/// 1 - 24 sum sigma_1(n) q^n.
QSeries E2_series(int order);
/// Throws DomainError if Im(tau) < 1e-3.
Complex E2_numeric(const Complex& tau, const PrecisionContext& ctx);
/// 96 - E2(t) + 3 E2(3t) + 49 E2(7t) - 147 E2(21t).
QSeries eisenstein_g_series(int order);
/// (21/4) f + (9/32) g for the weight-2 form f with q-coefficients `a`
/// (a[0] is the coefficient of q).
QSeries lemma_f_series(const std::vector<long>& a, int order);

Complex x_tilde(const Complex& tau, const PrecisionContext& ctx);
Complex y_tilde(const Complex& tau, const PrecisionContext& ctx);
/// sqrt(7)(x~ + 1/x~) + (y~ + 1/y~) + 3 at tau.
Complex parametrization_residual(const Complex& tau, const PrecisionContext& ctx);

/// (a tau + b)/(c tau + d).
Complex mobius(long a, long b, long c, long d, const Complex& tau);
Complex atkin_lehner_21(const Complex& tau);  // -1/(21 tau)
Complex atkin_lehner_7(const Complex& tau);   // (7 tau + 2)/(21 tau + 7)

/// tau_+- = (-+9 + sqrt(-3))/42 and tau'_+- = (-+9 + sqrt(-3))/21.
struct CMPoints {
  Complex tau_plus;
  Complex tau_minus;
  Complex tau_prime_plus;
  Complex tau_prime_minus;
};
CMPoints cm_points(const PrecisionContext& ctx);

struct NamedResidual {
  std::string name;
  Real value;  // expected to vanish
};

/// Residuals of the Atkin-Lehner relations at tau:
/// x~(W21 tau) x~(tau) - 1, y~(W21 tau) - y~(tau), x~(W7 tau) x~(tau) - 1,
/// y~(W7 tau) y~(tau) - 1.
std::vector<NamedResidual> atkin_lehner_checks(const Complex& tau, const PrecisionContext& ctx);

/// Residuals of the matrix identities W21 tau_+- = tau_-+, W21 tau'_+- = tau'_-+/4,
/// W7 tau_+ = tau_-, W7 tau'_+ = tau'_-, W7(0) = 2/7.
std::vector<NamedResidual> atkin_lehner_matrix_checks(const PrecisionContext& ctx);

/// `count` points of the geodesic |tau|^2 = 1/21 between tau_+ and tau_-.
std::vector<Complex> geodesic_samples(int count, const PrecisionContext& ctx);

/// Distance of (x~, y~)(tau) from the expected point on the original curve for
/// the four CM points, labelled S+, S-, T+, T-.
std::vector<NamedResidual> cm_image_checks(const PrecisionContext& ctx);

}  // namespace mahler
