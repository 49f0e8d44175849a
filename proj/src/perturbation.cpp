#include "hypbound/perturbation.hpp"

#include <stdexcept>

namespace hypbound {

namespace {

Bound num(std::int64_t p, std::int64_t q = 1) { return Bound::from_rational(p, q); }

}  // namespace

Bound block_norm_bound(const Bound& nB, const Bound& nC, const Bound& nD, const Bound& nE, const Bound& nF) {
  for (const Bound* n : {&nB, &nC, &nD, &nE, &nF}) {
    if (!n->is_nonnegative()) throw DomainError("block_norm_bound", "norm " + n->to_string() + " is negative");
  }
  return num(3) * max(max(max(nB, nC), max(nD, nE)), nF);
}

PerturbationNorm hessian_perturbation_norm(const GeometryBudget& g) {
  Bound value = num(9, 2) * c_V_eps(g) * sqrt(g.volume) * sqrt(gap_factor(g));
  return {std::move(value), NormKind::relatively_bounded};
}

Bound flow_threshold(const PerturbationNorm& n) {
  if (!n.value.is_nonnegative()) throw DomainError("flow_threshold", "norm " + n.value.to_string() + " is negative");
  if (n.kind == NormKind::bounded) return n.value + num(1);
  return num(2) * exp(n.value);
}

Bound recurrence_value(const Bound& x, std::int64_t N) {
  if (N < 1) throw DomainError("recurrence_value", "step count must be positive");
  if (!x.is_nonnegative()) throw DomainError("recurrence_value", "norm " + x.to_string() + " is negative");
  const Bound ratio = num(1) - x / num(N);
  if (!ratio.is_positive()) throw DomainError("recurrence_value", "step size x/N is not below 1");
  return num(2) * (pow(ratio, {-N, 1}) - num(1));
}

Bound recurrence_iterate(const Bound& x, std::int64_t N) {
  if (N < 1) throw DomainError("recurrence_iterate", "step count must be positive");
  const Bound e = x / num(N);
  const Bound denom = num(1) - e;
  if (!denom.is_positive()) throw DomainError("recurrence_iterate", "step size x/N is not below 1");
  Bound value = num(0);
  for (std::int64_t k = 0; k < N; ++k) value = (value + num(2) * e) / denom;
  return value;
}

Bound recurrence_limit(const Bound& x) { return num(2) * (exp(x) - num(1)); }

SpectralFlowBound spectral_flow_bound(const GeometryBudget& g, const WeylConstants& w) {
  validate(g);
  check_compatible(g, w);
  PerturbationNorm hessian = hessian_perturbation_norm(g);
  const Bound exponent = num(15) * c_V_eps(g) * sqrt(g.volume) * sqrt(gap_factor(g));
  Bound displayed = g.volume * (num(2) * w.d + extended_hessian_cubic_coefficient(w) * num(8) * exp(exponent));
  Bound threshold = flow_threshold(hessian);
  Bound reassembled = count_extended_hessian(g.volume, w, threshold);
  if (certainly_lt(displayed, reassembled)) {
    throw std::logic_error("displayed spectral-flow bound " + displayed.to_string() + " is below the reassembled " +
                           reassembled.to_string());
  }
  return {std::move(displayed), std::move(reassembled), std::move(hessian), std::move(threshold)};
}

}  // namespace hypbound
