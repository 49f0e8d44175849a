#pragma once

// Geometric constants of a closed hyperbolic 3-manifold from a budget
// (volume upper bound, injectivity-radius lower bound, coexact gap lower
// bound): diameter, isoperimetric and Sobolev constants, and the embedding
// coefficients for coexact 1-forms.

#include <optional>

#include "hypbound/interval.hpp"

namespace hypbound {

struct GeometryBudget {
  Bound volume;  // upper bound on vol(Y)
  Bound eps;     // lower bound on inj(Y)
  Bound delta;   // lower bound on the first coexact eigenvalue
  /// Replaces the injectivity-radius diameter estimate when set. Only the
  /// geometric constants see it; Weyl-law counts still go through eps.
  std::optional<Bound> diameter;
  /// Skip the conventional guards V >= 0.94, eps <= 0.15, delta <= 1.
  bool unchecked = false;
};

GeometryBudget make_budget(const Bound& volume, const Bound& eps, const Bound& delta, bool unchecked = false);

/// Throws DomainError("budget", ...) unless the budget is usable. Positivity
/// is always required; the conventional guards reject only when certainly
/// violated by the intervals.
void validate(const GeometryBudget& g);

/// Milnor's lower bound on the volume of any closed hyperbolic 3-manifold.
Bound volume_floor();

/// V / (pi sinh^2(eps/2)), or the override. Upper bound; use hi().
Bound diameter_bound(const GeometryBudget& g);

/// (vol / (cosh d - 1))^4 / (64 pi^5). Decreasing in d, homogeneous of
/// degree 4 in vol.
Bound isoperimetric_lower(const Bound& vol, const Bound& diameter);

/// Isoperimetric lower bound with vol >= volume_floor(). Lower bound; use lo().
Bound isoperimetric_lower(const GeometryBudget& g);

/// Lower bound on the Sobolev constant, equal to isoperimetric_lower(g).
Bound sobolev_constant_lower(const GeometryBudget& g);

/// The rounded closed form 4e-5 / (cosh d - 1)^4. Slightly larger than the
/// isoperimetric chain (0.94^4/(64 pi^5) < 4e-5), so it is reported for
/// comparison and not used as a lower bound.
Bound sobolev_constant_rounded(const GeometryBudget& g);

/// min(S^(2/3)/8, 20/21) / 2^(8/3) with S = sobolev_constant_lower(g).
/// Lower bound; use lo().
Bound embedding_L6_constant(const GeometryBudget& g);

/// 1 + 3/delta.
Bound gap_factor(const GeometryBudget& g);

struct CoexactL6Coefficient {
  Bound closed;     // e^11 (cosh d - 1)^(8/3) (1 + 3/delta)
  Bound assembled;  // (1 + 3/delta) / embedding_L6_constant
};

/// Coefficient K with |b|^2_{L6} <= K |db|^2 for coexact b. Upper bounds.
CoexactL6Coefficient coexact_L6_coefficient(const GeometryBudget& g);

/// e^(11/2) V^(1/12) (cosh d - 1)^(4/3). Upper bound.
Bound c_V_eps(const GeometryBudget& g);

/// c_V_eps * (1 + 3/delta)^(1/2). Upper bound.
Bound coexact_L4_coefficient(const GeometryBudget& g);

}  // namespace hypbound
