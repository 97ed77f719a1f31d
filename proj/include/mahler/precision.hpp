#pragma once

#include <string>

#include "mahler/real.hpp"

namespace mahler {

/// Working precision threaded through every numeric operation.
///
/// `work_bits` always covers `target_digits` decimal digits plus
/// `guard_bits` extra bits; `guard_bits` is at least 16.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 30;
  static constexpr int kDefaultGuardBits = 32;

  PrecisionContext() : PrecisionContext(kDefaultDigits) {}
  explicit PrecisionContext(int target_digits, int guard_bits = kDefaultGuardBits);
  /// Explicit `work_bits`; throws DomainError if below the required minimum.
  PrecisionContext(int target_digits, int guard_bits, long work_bits);

  int target_digits() const { return target_digits_; }
  int guard_bits() const { return guard_bits_; }
  long work_bits() const { return work_bits_; }

  /// Same target, twice the binary precision.
  PrecisionContext doubled() const;
  /// Context with `extra` more working bits and the same target.
  PrecisionContext widened(long extra) const;

  static long min_work_bits(int target_digits, int guard_bits);

  Real real(long value) const { return Real(value, work_bits_); }
  Real real(double value) const { return Real(value, work_bits_); }
  Real real(std::string_view decimal) const { return Real(decimal, work_bits_); }
  Real ratio(long num, long den) const { return Real(num, work_bits_) / den; }
  Real pi() const { return Real::pi(work_bits_); }
  /// 10^-target_digits.
  Real tolerance() const { return pow10(-target_digits_, work_bits_); }
  /// 2^-work_bits.
  Real epsilon() const { return ldexp(real(1L), -work_bits_); }

 private:
  int target_digits_;
  int guard_bits_;
  long work_bits_;
};

/// Shortest decimal string that reproduces `x` when both are rounded to
/// `digits` significant digits.
std::string to_decimal(const Real& x, int digits);

}  // namespace mahler
