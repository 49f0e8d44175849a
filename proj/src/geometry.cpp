#include "hypbound/geometry.hpp"

namespace hypbound {

namespace {

Bound num(std::int64_t p, std::int64_t q = 1) { return Bound::from_rational(p, q); }

Bound cosh_minus_one(const GeometryBudget& g) { return cosh(diameter_bound(g)) - num(1); }

}  // namespace

GeometryBudget make_budget(const Bound& volume, const Bound& eps, const Bound& delta, bool unchecked) {
  GeometryBudget g{volume, eps, delta, std::nullopt, unchecked};
  validate(g);
  return g;
}

void validate(const GeometryBudget& g) {
  if (!g.volume.is_positive()) throw DomainError("budget", "volume " + g.volume.to_string() + " is not positive");
  if (!g.eps.is_positive()) throw DomainError("budget", "eps " + g.eps.to_string() + " is not positive");
  if (!g.delta.is_positive()) throw DomainError("budget", "delta " + g.delta.to_string() + " is not positive");
  if (g.diameter && !g.diameter->is_positive()) {
    throw DomainError("budget", "diameter " + g.diameter->to_string() + " is not positive");
  }
  if (g.unchecked) return;
  if (certainly_lt(g.volume, volume_floor())) {
    throw DomainError("budget", "volume " + g.volume.to_string() + " is below 0.94");
  }
  if (certainly_lt(num(15, 100), g.eps)) {
    throw DomainError("budget", "eps " + g.eps.to_string() + " exceeds 0.15 (use unchecked mode)");
  }
  if (certainly_lt(num(1), g.delta)) {
    throw DomainError("budget", "delta " + g.delta.to_string() + " exceeds 1 (use unchecked mode)");
  }
}

Bound volume_floor() { return num(94, 100); }

Bound diameter_bound(const GeometryBudget& g) {
  validate(g);
  if (g.diameter) return *g.diameter;
  const Bound s = sinh(g.eps / num(2));
  return g.volume / (Bound::pi() * s * s);
}

Bound isoperimetric_lower(const Bound& vol, const Bound& diameter) {
  if (!vol.is_positive()) throw DomainError("isoperimetric_lower", "volume " + vol.to_string() + " is not positive");
  if (!diameter.is_positive()) {
    throw DomainError("isoperimetric_lower", "diameter " + diameter.to_string() + " is not positive");
  }
  const Bound ratio = vol / (cosh(diameter) - num(1));
  return pow(ratio, {4, 1}) / (num(64) * pow(Bound::pi(), {5, 1}));
}

Bound isoperimetric_lower(const GeometryBudget& g) { return isoperimetric_lower(volume_floor(), diameter_bound(g)); }

Bound sobolev_constant_lower(const GeometryBudget& g) { return isoperimetric_lower(g); }

Bound sobolev_constant_rounded(const GeometryBudget& g) {
  return num(4, 100000) / pow(cosh_minus_one(g), {4, 1});
}

Bound embedding_L6_constant(const GeometryBudget& g) {
  const Bound s = sobolev_constant_lower(g);
  const Bound m = min(pow(s, {2, 3}) / num(8), num(20, 21));
  return m / pow(num(2), {8, 3});
}

Bound gap_factor(const GeometryBudget& g) {
  validate(g);
  return num(1) + num(3) / g.delta;
}

CoexactL6Coefficient coexact_L6_coefficient(const GeometryBudget& g) {
  const Bound factor = gap_factor(g);
  return {exp(num(11)) * pow(cosh_minus_one(g), {8, 3}) * factor, factor / embedding_L6_constant(g)};
}

Bound c_V_eps(const GeometryBudget& g) {
  return exp(num(11, 2)) * pow(g.volume, {1, 12}) * pow(cosh_minus_one(g), {4, 3});
}

Bound coexact_L4_coefficient(const GeometryBudget& g) { return c_V_eps(g) * sqrt(gap_factor(g)); }

}  // namespace hypbound
