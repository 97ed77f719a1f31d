#pragma once

// Arbitrary-precision real and complex values backed by MPFR.
//
// Every Real carries its own binary precision. Binary operations produce a
// result at the larger of the operand precisions, so values built from a
// single PrecisionContext stay at that precision without any global state.

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace mahler {

class Real {
 public:
  using Bits = mpfr_prec_t;

  explicit Real(Bits bits = 64);
  Real(long value, Bits bits);
  Real(int value, Bits bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, Bits bits);
  /// Parses a decimal literal such as "1.25" or "-3e-7".
  Real(std::string_view decimal, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Returns a copy rounded (or extended) to `bits`.
  Real at_precision(Bits bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific notation with `digits` significant digits, trailing zeros kept.
  std::string to_string(int digits) const;

  static Real pi(Bits bits);
  static Real euler_gamma(Bits bits);

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, long rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator+(long lhs, Real rhs) { return rhs += lhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator/(long lhs, const Real& rhs);

  friend bool operator==(const Real& lhs, const Real& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);
  friend bool operator==(const Real& lhs, long rhs) { return mpfr_cmp_si(lhs.value_, rhs) == 0; }
  friend std::partial_ordering operator<=>(const Real& lhs, long rhs);

 private:
  void grow_to(Bits bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real acos(const Real& x);
Real acosh(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real ldexp(const Real& x, long exponent);
Real floor(const Real& x);
Real round(const Real& x);
Real square(const Real& x);
const Real& max(const Real& x, const Real& y);
const Real& min(const Real& x, const Real& y);
/// 10^exponent at the given precision.
Real pow10(long exponent, Real::Bits bits);

/// Upper incomplete gamma function Gamma(s, x) for x > 0.
Real gamma_inc(const Real& s, const Real& x);
/// Exponential integral E1(x) = Gamma(0, x) for x > 0.
Real expint_e1(const Real& x);

class Complex {
 public:
  explicit Complex(Real::Bits bits = 64) : re_(bits), im_(bits) {}
  Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}  // NOLINT: implicit widening
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real::Bits precision() const;

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex operator-() const { return {-re_, -im_}; }

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
  friend Complex operator*(Complex lhs, const Real& rhs) { return lhs *= rhs; }
  friend Complex operator*(const Real& lhs, Complex rhs) { return rhs *= lhs; }
  friend Complex operator/(Complex lhs, const Real& rhs) { return lhs /= rhs; }
  friend Complex operator*(Complex lhs, long rhs);
  friend Complex operator*(long lhs, Complex rhs) { return std::move(rhs) * lhs; }
  friend Complex operator+(Complex lhs, long rhs);
  friend Complex operator-(Complex lhs, long rhs) { return std::move(lhs) + (-rhs); }
  friend Complex operator+(long lhs, Complex rhs) { return std::move(rhs) + lhs; }
  friend Complex operator-(long lhs, const Complex& rhs) { return -rhs + lhs; }
  friend Complex operator/(Complex lhs, long rhs) { return {lhs.re_ / rhs, lhs.im_ / rhs}; }
  friend Complex operator/(long lhs, const Complex& rhs);

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
/// Principal square root (branch cut on the negative real axis, Re >= 0).
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long exponent);
Complex inverse(const Complex& z);
/// Principal square root of a real number, imaginary when negative.
Complex csqrt(const Real& x);

}  // namespace mahler
