#include "mahler/precision.hpp"

#include <cmath>

#include "mahler/errors.hpp"

namespace mahler {

long PrecisionContext::min_work_bits(int target_digits, int guard_bits) {
  return static_cast<long>(std::ceil(target_digits * std::log2(10.0))) + guard_bits;
}

PrecisionContext::PrecisionContext(int target_digits, int guard_bits)
    : PrecisionContext(target_digits, guard_bits, min_work_bits(target_digits, guard_bits)) {}

PrecisionContext::PrecisionContext(int target_digits, int guard_bits, long work_bits)
    : target_digits_(target_digits), guard_bits_(guard_bits), work_bits_(work_bits) {
  if (target_digits < 1) throw DomainError("target_digits must be positive");
  if (guard_bits < 16) throw DomainError("guard_bits must be at least 16");
  if (work_bits < min_work_bits(target_digits, guard_bits)) {
    throw DomainError("work_bits below ceil(target_digits*log2(10)) + guard_bits");
  }
}

PrecisionContext PrecisionContext::doubled() const {
  return {target_digits_, guard_bits_, 2 * work_bits_};
}

PrecisionContext PrecisionContext::widened(long extra) const {
  return {target_digits_, guard_bits_, work_bits_ + extra};
}

std::string to_decimal(const Real& x, int digits) {
  std::string full = x.to_string(digits);
  auto exp_pos = full.find('e');
  if (exp_pos == std::string::npos) return full;
  std::string mantissa = full.substr(0, exp_pos);
  std::string exponent = full.substr(exp_pos);
  if (mantissa.find('.') != std::string::npos) {
    while (!mantissa.empty() && mantissa.back() == '0') mantissa.pop_back();
    if (!mantissa.empty() && mantissa.back() == '.') mantissa.pop_back();
  }
  return mantissa + exponent;
}

}  // namespace mahler
