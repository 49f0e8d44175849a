#pragma once

// Weyl-law upper bounds on the number of eigenvalues of absolute value at
// most T for the first-order operators entering the extended Hessian.

#include <string>

#include "hypbound/geometry.hpp"
#include "hypbound/interval.hpp"

namespace hypbound {

struct WeylConstants {
  Bound a;
  Bound b;
  Bound d;
  Bound e;
  Bound eps;  // injectivity radius the constants are certified for
  std::string name;

  /// Profile for eps = 0.15: (a, b, d, e) = (3, 402, 100, 780).
  static WeylConstants eps015();

  /// Checked constructor: all coefficients strictly positive.
  static WeylConstants make(Bound a, Bound b, Bound d, Bound e, Bound eps, std::string name);

  /// Accepts nonnegative coefficients. For constructed test scenarios.
  static WeylConstants synthetic(Bound a, Bound b, Bound d, Bound e, Bound eps, std::string name);
};

/// Throws DomainError("weyl_profile", ...) when the budget's eps is certainly
/// smaller than the eps the constants are certified for. A larger injectivity
/// radius is a stronger hypothesis, so it is accepted.
void check_compatible(const GeometryBudget& g, const WeylConstants& w);

/// V (a/3 + b) T^3, for the spectra of *d and of the Dirac operator.
Bound count_star_or_dirac(const Bound& V, const WeylConstants& w, const Bound& T);

/// 2V (d + (a/2 + e) T^3), for the block [[0, -d*], [-d, 0]].
Bound count_function_block(const Bound& V, const WeylConstants& w, const Bound& T);

/// V (2d + (2a + 3b + 2e) T^3), the whole extended Hessian at the reducible,
/// with the Dirac part counted over the reals.
Bound count_extended_hessian(const Bound& V, const WeylConstants& w, const Bound& T);

/// 2a + 3b + 2e.
Bound extended_hessian_cubic_coefficient(const WeylConstants& w);

}  // namespace hypbound
