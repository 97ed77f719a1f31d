#include "mahler/modular.hpp"

#include <algorithm>
#include <cmath>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

Real to_real(const mpq_class& q, long bits) {
  Real r(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

long integer_offset(const mpq_class& d, const char* who) {
  if (d.get_den() != 1) throw DomainError(std::string(who) + ": gradings differ by a non-integer");
  return d.get_num().get_si();
}

// q^e = exp(2 pi i tau e).
Complex q_power(const Complex& tau, const Real& e) {
  Real two_pi = 2 * Real::pi(tau.precision());
  return exp(Complex(-two_pi * e * tau.im(), two_pi * e * tau.re()));
}

void require_upper(const Complex& tau, const char* who) {
  if (tau.im().to_double() < 1e-3)
    throw DomainError(std::string(who) + " refuses Im(tau) < 1e-3 (too close to the real axis)");
}

// Number of terms T with r^(T+1) / (1 - r) below 2^-bits, for 0 < r < 1.
long terms_for(double log_r, long bits) {
  double need = bits * std::log(2.0);
  double r = std::exp(log_r);
  double extra = -std::log1p(-r);
  return static_cast<long>(std::ceil((need + extra) / -log_r)) + 2;
}

}  // namespace

QSeries::QSeries(mpq_class grading, std::vector<mpq_class> coeffs)
    : grading_(std::move(grading)), coeffs_(std::move(coeffs)) {
  grading_.canonicalize();
}

QSeries QSeries::monomial(mpq_class c, mpq_class grading, int order) {
  std::vector<mpq_class> coeffs(std::max(order, 0));
  if (order > 0) coeffs[0] = std::move(c);
  return {std::move(grading), std::move(coeffs)};
}

mpq_class QSeries::coeff(int n) const {
  if (n < 0 || n >= order()) return 0;
  return coeffs_[n];
}

mpq_class QSeries::coeff_at(const mpq_class& e) const {
  mpq_class d = e - grading_;
  if (d.get_den() != 1) return 0;
  return coeff(static_cast<int>(d.get_num().get_si()));
}

QSeries QSeries::truncated(int n) const {
  std::vector<mpq_class> c(coeffs_.begin(), coeffs_.begin() + std::min(n, order()));
  return {grading_, std::move(c)};
}

QSeries QSeries::normalized() const {
  int lead = 0;
  while (lead < order() && coeffs_[lead] == 0) ++lead;
  return {grading_ + lead, std::vector<mpq_class>(coeffs_.begin() + lead, coeffs_.end())};
}

QSeries QSeries::dilate(int m) const {
  if (m < 1) throw DomainError("QSeries::dilate requires m >= 1");
  std::vector<mpq_class> c(static_cast<std::size_t>(order()) * m);
  for (int n = 0; n < order(); ++n) c[static_cast<std::size_t>(n) * m] = coeffs_[n];
  return {grading_ * m, std::move(c)};
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QSeries& QSeries::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  mpq_class lo = std::min(f.grading_, g.grading_);
  long sf = integer_offset(f.grading_ - lo, "QSeries::operator+");
  long sg = integer_offset(g.grading_ - lo, "QSeries::operator+");
  long order = std::min(sf + f.order(), sg + g.order());
  std::vector<mpq_class> c(std::max(order, 0L));
  for (long i = 0; i < order; ++i)
    c[i] = f.coeff(static_cast<int>(i - sf)) + g.coeff(static_cast<int>(i - sg));
  return {lo, std::move(c)};
}

QSeries operator+(const QSeries& f, const mpq_class& c) {
  mpq_class lo = std::min(f.grading_, mpq_class(0));
  long sf = integer_offset(f.grading_ - lo, "QSeries::operator+");
  long s0 = integer_offset(-lo, "QSeries::operator+");
  std::vector<mpq_class> out(sf + f.order());
  for (int n = 0; n < f.order(); ++n) out[sf + n] = f.coeffs_[n];
  if (s0 < static_cast<long>(out.size())) out[s0] += c;
  return {lo, std::move(out)};
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  int order = std::min(f.order(), g.order());
  std::vector<mpq_class> c(std::max(order, 0));
  for (int i = 0; i < order; ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < order; ++j) {
      if (g.coeffs_[j] == 0) continue;
      c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return {f.grading_ + g.grading_, std::move(c)};
}

QSeries QSeries::inverse() const {
  if (order() == 0 || coeffs_[0] == 0)
    throw DomainError("QSeries::inverse requires a nonzero leading coefficient");
  std::vector<mpq_class> h(order());
  mpq_class inv0 = 1 / coeffs_[0];
  h[0] = inv0;
  for (int n = 1; n < order(); ++n) {
    mpq_class s = 0;
    for (int j = 1; j <= n; ++j)
      if (coeffs_[j] != 0) s += coeffs_[j] * h[n - j];
    h[n] = -inv0 * s;
  }
  return {-grading_, std::move(h)};
}

QSeries QSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  QSeries result = constant(1, order());
  QSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

Complex QSeries::evaluate(const Complex& tau, const PrecisionContext& ctx) const {
  long bits = ctx.work_bits();
  Complex t(tau.re().at_precision(bits), tau.im().at_precision(bits));
  Complex q = q_power(t, Real(1L, bits));
  Complex sum(bits);
  for (int n = order() - 1; n >= 0; --n) sum = sum * q + Complex(to_real(coeffs_[n], bits));
  return sum * q_power(t, to_real(grading_, bits));
}

void QSeries::dump(std::ostream& os) const {
  os << "grading ";
  if (24 % grading_.get_den() == 0) {
    mpz_class p = grading_.get_num() * (24 / grading_.get_den());
    os << p.get_str() << "/24";
  } else {
    os << grading_.get_num().get_str() << "/" << grading_.get_den().get_str();
  }
  os << ", order " << order() << "\n";
  for (int n = 0; n < order(); ++n) os << n << " " << coeffs_[n].get_str() << "\n";
}

QSeries eta_series(int m, int order) {
  if (m < 1 || order < 1) throw DomainError("eta_series requires m >= 1 and order >= 1");
  std::vector<mpq_class> c(order);
  c[0] = 1;
  // Multiply in (1 - q^(m n)) for every factor that affects the first `order` terms.
  for (long step = m; step < order; step += m)
    for (long i = order - 1; i >= step; --i) c[i] -= c[i - step];
  return {mpq_class(m, 24), std::move(c)};
}

Complex eta_numeric(int m, const Complex& tau_in, const PrecisionContext& ctx) {
  require_upper(tau_in, "eta_numeric");
  long bits = ctx.work_bits();
  Complex tau(tau_in.re().at_precision(bits), tau_in.im().at_precision(bits));
  Complex qm = q_power(tau, Real(static_cast<long>(m), bits));
  double log_r = -2 * M_PI * m * tau.im().to_double();
  long terms = terms_for(log_r, bits);
  Complex prod(Real(1L, bits));
  Complex qn = qm;
  for (long n = 1; n <= terms; ++n) {
    prod *= (1L - qn);
    qn *= qm;
  }
  return prod * q_power(tau, Real(static_cast<long>(m), bits) / 24);
}

mpq_class bernoulli2(const mpq_class& x) { return x * x - x + mpq_class(1, 6); }

QSeries modular_unit_g(int a, int order) {
  if (a < 1 || a > 10) throw DomainError("modular_unit_g requires 1 <= a <= 10");
  if (order < 1) throw DomainError("modular_unit_g requires order >= 1");
  std::vector<mpq_class> c(order);
  c[0] = 1;
  for (long n = 1; n < order; ++n) {
    long r = n % 21;
    if (r != a && r != 21 - a) continue;
    for (long i = order - 1; i >= n; --i) c[i] -= c[i - n];
  }
  mpq_class grading = 21 * bernoulli2(mpq_class(a, 21)) / 2;
  return {grading, std::move(c)};
}

QSeries x0_series(int order) {
  return eta_series(1, order) * eta_series(3, order) / (eta_series(7, order) * eta_series(21, order));
}

QSeries y_tilde_series(int order) {
  QSeries r = eta_series(1, order) * eta_series(21, order) / (eta_series(3, order) * eta_series(7, order));
  return -(r * r);
}

QSeries x0_from_units(int order) {
  QSeries out = QSeries::constant(1, order);
  for (auto [a, e] : {std::pair{1, 1}, {2, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 2}, {8, 1}, {9, 2}, {10, 1}})
    out = out * modular_unit_g(a, order).pow(e);
  return out;
}

QSeries y_tilde_from_units(int order) {
  QSeries out = QSeries::constant(1, order);
  for (int a : {1, 2, 4, 5, 8, 10}) out = out * modular_unit_g(a, order);
  return -(out * out);
}

QSeries ramanujan_entry68_residual(int order) {
  QSeries A = eta_series(1, order) / eta_series(7, order);
  QSeries B = A.dilate(3);
  QSeries AB = A * B;
  QSeries ratio = A / B;
  QSeries ratio2 = ratio * ratio;
  return AB + mpq_class(7) * AB.inverse() - ratio2 - ratio2.inverse() + mpq_class(3);
}

QSeries curve_residual_series(int order) {
  QSeries x0 = x0_series(order);
  QSeries y = y_tilde_series(order);
  return x0 + mpq_class(7) * x0.inverse() + y + y.inverse() + mpq_class(3);
}

QSeries E2_series(int order) {
  if (order < 1) throw DomainError("E2_series requires order >= 1");
  std::vector<mpq_class> c(order);
  c[0] = 1;
  for (long k = 1; k < order; ++k)
    for (long n = k; n < order; n += k) c[n] -= 24 * k;
  return {0, std::move(c)};
}

Complex E2_numeric(const Complex& tau_in, const PrecisionContext& ctx) {
  require_upper(tau_in, "E2_numeric");
  long bits = ctx.work_bits();
  Complex tau(tau_in.re().at_precision(bits), tau_in.im().at_precision(bits));
  Complex q = q_power(tau, Real(1L, bits));
  double log_r = -2 * M_PI * tau.im().to_double();
  // n r^n / (1 - r)^2 bounds the tail; a few extra terms cover the factor n.
  long terms = terms_for(log_r, bits + 64);
  Complex sum(bits);
  Complex qn = q;
  for (long n = 1; n <= terms; ++n) {
    sum += n * qn / (1L - qn);
    qn *= q;
  }
  return 1L - 24 * sum;
}

QSeries eisenstein_g_series(int order) {
  QSeries e = E2_series(order);
  auto dil = [&](int m) { return E2_series((order + m - 1) / m).dilate(m).truncated(order); };
  return -e + mpq_class(3) * dil(3) + mpq_class(49) * dil(7) - mpq_class(147) * dil(21) +
         mpq_class(96);
}

QSeries lemma_f_series(const std::vector<long>& a, int order) {
  int n_terms = std::min<int>(order, static_cast<int>(a.size()) + 1);
  std::vector<mpq_class> c(n_terms);
  for (int n = 1; n < n_terms; ++n) c[n] = a[n - 1];
  QSeries f21(0, std::move(c));
  return mpq_class(21, 4) * f21 + mpq_class(9, 32) * eisenstein_g_series(order);
}

Complex x_tilde(const Complex& tau, const PrecisionContext& ctx) {
  Complex q = eta_numeric(1, tau, ctx) * eta_numeric(3, tau, ctx) /
              (eta_numeric(7, tau, ctx) * eta_numeric(21, tau, ctx));
  return q / sqrt(ctx.real(7L));
}

Complex y_tilde(const Complex& tau, const PrecisionContext& ctx) {
  Complex r = eta_numeric(1, tau, ctx) * eta_numeric(21, tau, ctx) /
              (eta_numeric(3, tau, ctx) * eta_numeric(7, tau, ctx));
  return -(r * r);
}

Complex parametrization_residual(const Complex& tau, const PrecisionContext& ctx) {
  Complex x = x_tilde(tau, ctx);
  Complex y = y_tilde(tau, ctx);
  return sqrt(ctx.real(7L)) * (x + inverse(x)) + y + inverse(y) + 3L;
}

Complex mobius(long a, long b, long c, long d, const Complex& tau) {
  return (a * tau + b) / (c * tau + d);
}

Complex atkin_lehner_21(const Complex& tau) { return mobius(0, -1, 21, 0, tau); }
Complex atkin_lehner_7(const Complex& tau) { return mobius(7, 2, 21, 7, tau); }

CMPoints cm_points(const PrecisionContext& ctx) {
  Real s3 = sqrt(ctx.real(3L));
  return {Complex(ctx.ratio(-9, 42), s3 / 42), Complex(ctx.ratio(9, 42), s3 / 42),
          Complex(ctx.ratio(-9, 21), s3 / 21), Complex(ctx.ratio(9, 21), s3 / 21)};
}

std::vector<NamedResidual> atkin_lehner_checks(const Complex& tau, const PrecisionContext& ctx) {
  Complex x = x_tilde(tau, ctx), y = y_tilde(tau, ctx);
  Complex w21 = atkin_lehner_21(tau), w7 = atkin_lehner_7(tau);
  Complex x21 = x_tilde(w21, ctx), y21 = y_tilde(w21, ctx);
  Complex x7 = x_tilde(w7, ctx), y7 = y_tilde(w7, ctx);
  return {{"W21: x~ -> 1/x~", abs(x21 * x - 1L)},
          {"W21: y~ -> y~", abs(y21 - y)},
          {"W7: x~ -> 1/x~", abs(x7 * x - 1L)},
          {"W7: y~ -> 1/y~", abs(y7 * y - 1L)}};
}

std::vector<NamedResidual> atkin_lehner_matrix_checks(const PrecisionContext& ctx) {
  CMPoints p = cm_points(ctx);
  Complex zero(ctx.real(0L));
  return {{"W21 tau+ = tau-", abs(atkin_lehner_21(p.tau_plus) - p.tau_minus)},
          {"W21 tau- = tau+", abs(atkin_lehner_21(p.tau_minus) - p.tau_plus)},
          {"W21 tau'+ = tau'-/4", abs(atkin_lehner_21(p.tau_prime_plus) - p.tau_prime_minus / 4L)},
          {"W21 tau'- = tau'+/4", abs(atkin_lehner_21(p.tau_prime_minus) - p.tau_prime_plus / 4L)},
          {"W7 tau+ = tau-", abs(atkin_lehner_7(p.tau_plus) - p.tau_minus)},
          {"W7 tau'+ = tau'-", abs(atkin_lehner_7(p.tau_prime_plus) - p.tau_prime_minus)},
          {"W7 0 = 2/7", abs(atkin_lehner_7(zero) - Complex(ctx.ratio(2, 7)))}};
}

std::vector<Complex> geodesic_samples(int count, const PrecisionContext& ctx) {
  if (count < 2) throw DomainError("geodesic_samples requires count >= 2");
  CMPoints p = cm_points(ctx);
  Real start = arg(p.tau_plus), stop = arg(p.tau_minus);
  Real radius = 1 / sqrt(ctx.real(21L));
  std::vector<Complex> out;
  for (int j = 0; j < count; ++j) {
    Real theta = start + (stop - start) * j / (count - 1);
    out.emplace_back(radius * cos(theta), radius * sin(theta));
  }
  return out;
}

std::vector<NamedResidual> cm_image_checks(const PrecisionContext& ctx) {
  Real a = sqrt(ctx.real(7L));
  Real half_c = ctx.ratio(3, 2);
  Real h = 1 - half_c, g = 1 + half_c;
  Complex ds = csqrt(square(h) - square(a));
  Complex dt = csqrt(square(g) - square(a));
  Complex one(ctx.real(1L));
  CMPoints p = cm_points(ctx);
  struct Target {
    const char* name;
    const Complex& tau;
    Complex x;
    Complex y;
  };
  std::vector<Target> targets{{"S+", p.tau_plus, (h + ds) / a, -one},
                              {"S-", p.tau_minus, (h - ds) / a, -one},
                              {"T+", p.tau_prime_plus, (-g + dt) / a, one},
                              {"T-", p.tau_prime_minus, (-g - dt) / a, one}};
  std::vector<NamedResidual> out;
  for (const auto& t : targets) {
    Real dx = abs(x_tilde(t.tau, ctx) - t.x);
    Real dy = abs(y_tilde(t.tau, ctx) - t.y);
    out.push_back({t.name, std::max(dx, dy)});
  }
  return out;
}

}  // namespace mahler
