#pragma once

#include <functional>

#include "mahler/precision.hpp"
#include "mahler/real.hpp"

namespace mahler {

enum class Singularity {
  none,
  inverse_sqrt_left,
  inverse_sqrt_right,
  inverse_sqrt_both,
  log_endpoint,
};

/// A quadrature node as seen by an integrand. Alongside the abscissa the
/// integrand receives the distances to both endpoints, computed without
/// cancellation, so endpoint-singular factors such as 1/sqrt(1 - t) can be
/// evaluated accurately on nodes that crowd the ends of the interval.
struct Node {
  const Real& x;
  const Real& from_left;   // x - left
  const Real& from_right;  // right - x
};

using Integrand = std::function<Real(const Node&)>;

struct IntegrandSpec {
  Integrand evaluator;
  Real left;
  Real right;
  Singularity singularity = Singularity::none;

  /// Wraps an integrand that only needs the abscissa.
  static IntegrandSpec plain(std::function<Real(const Real&)> f, Real left, Real right,
                             Singularity singularity = Singularity::none);
};

struct QuadratureOptions {
  int max_level = 12;  // level doublings before NonConvergence
  int min_level = 3;
};

/// Tanh-sinh quadrature with level doubling. Stops once two successive
/// levels agree to target_digits + 2 digits (relative to max(1, |I|)).
///
/// Throws NonConvergence when max_level is reached, DomainError when
/// left >= right or the integrand is non-finite at an interior node.
Real integrate(const IntegrandSpec& spec, const PrecisionContext& ctx,
               const QuadratureOptions& options = {});

/// Arithmetic-geometric mean of two positive numbers.
Real agm(const Real& a0, const Real& b0, const PrecisionContext& ctx);

}  // namespace mahler
