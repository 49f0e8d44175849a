#pragma once

// Norm bounds for the Hessian perturbation at an irreducible solution and
// the spectral-flow threshold they imply.

#include <cstdint>

#include "hypbound/geometry.hpp"
#include "hypbound/spectral_density.hpp"

namespace hypbound {

enum class NormKind { bounded, relatively_bounded };

struct PerturbationNorm {
  Bound value;  // |A| for bounded, |A|_1 (as an operator L^2_1 -> L^2) otherwise
  NormKind kind;
};

/// 3 max(|B|, |C|, |D|, |E|, |F|) for the five blocks of the perturbation.
Bound block_norm_bound(const Bound& nB, const Bound& nC, const Bound& nD, const Bound& nE, const Bound& nF);

/// (9/2) c_V_eps V^(1/2) (1 + 3/delta)^(1/2), relatively bounded.
PerturbationNorm hessian_perturbation_norm(const GeometryBudget& g);

/// 2 exp(x) for relatively bounded perturbations, x + 1 for bounded ones.
/// Eigenvalues of the unperturbed operator beyond this contribute no flow.
Bound flow_threshold(const PerturbationNorm& n);

/// x_N = 2((1 - x/N)^(-N) - 1), the closed form of x_{k+1} = (x_k + 2e)/(1 - e),
/// x_0 = 0, e = x/N. Requires x < N.
Bound recurrence_value(const Bound& x, std::int64_t N);

/// The same quantity by running the recurrence N times.
Bound recurrence_iterate(const Bound& x, std::int64_t N);

/// 2(exp(x) - 1), the limit of recurrence_value as N grows.
Bound recurrence_limit(const Bound& x);

struct SpectralFlowBound {
  /// V (2d + (2a + 3b + 2e) 8 exp(15 c V^(1/2) (1 + 3/delta)^(1/2))).
  Bound displayed;
  /// count_extended_hessian at T = flow_threshold(hessian_perturbation_norm),
  /// which amounts to exponent 13.5 in place of 15.
  Bound reassembled;
  PerturbationNorm hessian;
  Bound threshold;
};

/// Throws DomainError on budget or profile problems, std::logic_error if the
/// displayed value is certainly below the reassembled one.
SpectralFlowBound spectral_flow_bound(const GeometryBudget& g, const WeylConstants& w);

}  // namespace hypbound
