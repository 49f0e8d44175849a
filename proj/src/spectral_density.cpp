#include "hypbound/spectral_density.hpp"

namespace hypbound {

namespace {

Bound num(std::int64_t p, std::int64_t q = 1) { return Bound::from_rational(p, q); }

void require_window(const Bound& V, const Bound& T) {
  if (!V.is_positive()) throw DomainError("weyl_count", "volume " + V.to_string() + " is not positive");
  if (compare(T.lo(), num(2).lo()) < 0) {
    throw DomainError("weyl_count", "window " + T.to_string() + " is not >= 2");
  }
}

Bound cube(const Bound& T) { return pow(T, {3, 1}); }

}  // namespace

WeylConstants WeylConstants::eps015() {
  return make(num(3), num(402), num(100), num(780), num(15, 100), "eps0.15");
}

WeylConstants WeylConstants::make(Bound a, Bound b, Bound d, Bound e, Bound eps, std::string name) {
  for (const Bound* c : {&a, &b, &d, &e, &eps}) {
    if (!c->is_positive()) throw DomainError("weyl_profile", "coefficient " + c->to_string() + " is not positive");
  }
  return {std::move(a), std::move(b), std::move(d), std::move(e), std::move(eps), std::move(name)};
}

WeylConstants WeylConstants::synthetic(Bound a, Bound b, Bound d, Bound e, Bound eps, std::string name) {
  for (const Bound* c : {&a, &b, &d, &e}) {
    if (!c->is_nonnegative()) {
      throw DomainError("weyl_profile", "coefficient " + c->to_string() + " is negative");
    }
  }
  if (!eps.is_positive()) throw DomainError("weyl_profile", "eps " + eps.to_string() + " is not positive");
  return {std::move(a), std::move(b), std::move(d), std::move(e), std::move(eps), std::move(name)};
}

void check_compatible(const GeometryBudget& g, const WeylConstants& w) {
  if (certainly_lt(g.eps, w.eps)) {
    throw DomainError("weyl_profile", "budget eps " + g.eps.to_string() + " is below the eps " + w.eps.to_string() +
                                          " certified by profile '" + w.name + "'");
  }
}

Bound count_star_or_dirac(const Bound& V, const WeylConstants& w, const Bound& T) {
  require_window(V, T);
  return V * (w.a / num(3) + w.b) * cube(T);
}

Bound count_function_block(const Bound& V, const WeylConstants& w, const Bound& T) {
  require_window(V, T);
  return num(2) * V * (w.d + (w.a / num(2) + w.e) * cube(T));
}

Bound extended_hessian_cubic_coefficient(const WeylConstants& w) {
  return num(2) * w.a + num(3) * w.b + num(2) * w.e;
}

Bound count_extended_hessian(const Bound& V, const WeylConstants& w, const Bound& T) {
  require_window(V, T);
  return V * (num(2) * w.d + extended_hessian_cubic_coefficient(w) * cube(T));
}

}  // namespace hypbound
