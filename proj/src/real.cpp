#include "mahler/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mahler {

namespace {

using Bits = Real::Bits;

Bits widest(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real out(x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(std::string_view decimal, Bits bits) {
  mpfr_init2(value_, bits);
  std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + text);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::at_precision(Bits bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

void Real::grow_to(Bits bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt.c_str(), value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real Real::pi(Bits bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::euler_gamma(Bits bits) {
  Real out(bits);
  mpfr_const_euler(out.value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  grow_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real operator-(long lhs, const Real& rhs) {
  Real out(rhs.precision());
  mpfr_si_sub(out.get(), lhs, rhs.get(), MPFR_RNDN);
  return out;
}

Real operator/(long lhs, const Real& rhs) {
  Real out(rhs.precision());
  mpfr_si_div(out.get(), lhs, rhs.get(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(lhs.value_, rhs.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& lhs, long rhs) {
  if (mpfr_nan_p(lhs.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(lhs.value_, rhs);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real cbrt(const Real& x) { return unary(x, mpfr_cbrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real acos(const Real& x) { return unary(x, mpfr_acos); }
Real acosh(const Real& x) { return unary(x, mpfr_acosh); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}
Real round(const Real& x) {
  Real out(x.precision());
  mpfr_round(out.get(), x.get());
  return out;
}
Real square(const Real& x) { return unary(x, mpfr_sqr); }

Real atan2(const Real& y, const Real& x) {
  Real out(widest(x, y));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(widest(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(widest(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real ldexp(const Real& x, long exponent) {
  Real out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), exponent, MPFR_RNDN);
  return out;
}

const Real& max(const Real& x, const Real& y) { return x < y ? y : x; }
const Real& min(const Real& x, const Real& y) { return y < x ? y : x; }

Real pow10(long exponent, Real::Bits bits) {
  Real out(bits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent),
                 MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

Real gamma_inc(const Real& s, const Real& x) {
  Real out(widest(s, x));
  mpfr_gamma_inc(out.get(), s.get(), x.get(), MPFR_RNDN);
  return out;
}

Real expint_e1(const Real& x) {
  // mpfr_eint(-x) = -E1(x) for x > 0.
  Real out(x.precision());
  Real neg = -x;
  mpfr_eint(out.get(), neg.get(), MPFR_RNDN);
  return -out;
}

Real::Bits Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  // Smith's algorithm avoids overflow in |rhs|^2 for large components.
  if (abs(rhs.re_) >= abs(rhs.im_)) {
    Real ratio = rhs.im_ / rhs.re_;
    Real denom = rhs.re_ + rhs.im_ * ratio;
    Real re = (re_ + im_ * ratio) / denom;
    im_ = (im_ - re_ * ratio) / denom;
    re_ = std::move(re);
  } else {
    Real ratio = rhs.re_ / rhs.im_;
    Real denom = rhs.re_ * ratio + rhs.im_;
    Real re = (re_ * ratio + im_) / denom;
    im_ = (im_ * ratio - re_) / denom;
    re_ = std::move(re);
  }
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex operator*(Complex lhs, long rhs) {
  return {lhs.re() * rhs, lhs.im() * rhs};
}

Complex operator+(Complex lhs, long rhs) { return {lhs.re() + rhs, lhs.im()}; }

Complex operator/(long lhs, const Complex& rhs) { return inverse(rhs) * lhs; }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
Real norm(const Complex& z) { return square(z.re()) + square(z.im()); }
Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  Real modulus = exp(z.re());
  return {modulus * cos(z.im()), modulus * sin(z.im())};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.im().is_zero()) {
    if (z.re().sign() >= 0) return {sqrt(z.re()), Real(z.precision())};
    return {Real(z.precision()), sqrt(-z.re())};
  }
  Real modulus = abs(z);
  Real re = sqrt((modulus + z.re()) / 2);
  Real im = sqrt((modulus - z.re()) / 2);
  if (z.im().sign() < 0) im = -im;
  return {std::move(re), std::move(im)};
}

Complex pow(const Complex& z, long exponent) {
  if (exponent < 0) return inverse(pow(z, -exponent));
  Complex result(Real(1L, z.precision()));
  Complex base = z;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Complex inverse(const Complex& z) { return Complex(Real(1L, z.precision())) / z; }

Complex csqrt(const Real& x) {
  if (x.sign() >= 0) return Complex(sqrt(x));
  return {Real(x.precision()), sqrt(-x)};
}

}  // namespace mahler
