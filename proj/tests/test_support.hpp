#pragma once

#include <string>

#include "doctest.h"
#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler::testing {

inline Real diff(const Real& a, const Real& b) { return abs(a - b); }

/// |a - b| <= 10^-digits, with both values in the failure message.
inline void check_close(const Real& a, const Real& b, int digits) {
  Real d = diff(a, b);
  Real tol = pow10(-digits, a.precision());
  INFO("lhs = " << a.to_string(40) << "\nrhs = " << b.to_string(40) << "\n|diff| = "
                << d.to_string(6));
  CHECK(d <= tol);
}

inline Real sqrt_of(long v, const PrecisionContext& ctx) { return sqrt(ctx.real(v)); }

}  // namespace mahler::testing
