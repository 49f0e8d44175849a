#include "hypbound/floer.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypbound {

namespace {

Bound num(std::int64_t p, std::int64_t q = 1) { return Bound::from_rational(p, q); }

}  // namespace

HMModule HMModule::make(Grading tower_bottom, std::vector<int> torsion) {
  for (int n : torsion) {
    if (n < 1) throw std::invalid_argument("torsion exponent " + std::to_string(n) + " is below 1");
  }
  std::sort(torsion.begin(), torsion.end());
  return {tower_bottom, std::move(torsion)};
}

int torsion_width(const HMModule& m) {
  return m.torsion.empty() ? 0 : *std::max_element(m.torsion.begin(), m.torsion.end());
}

HMModule connected_sum(const HMModule& a, const HMModule& b) {
  std::vector<int> out;
  out.reserve(2 * a.torsion.size() * b.torsion.size() + a.torsion.size() + b.torsion.size());
  for (int n : a.torsion) {
    for (int m : b.torsion) {
      out.push_back(std::min(n, m));
      out.push_back(std::min(n, m));
    }
  }
  out.insert(out.end(), a.torsion.begin(), a.torsion.end());
  out.insert(out.end(), b.torsion.begin(), b.torsion.end());
  return HMModule::make(a.tower_bottom + b.tower_bottom, std::move(out));
}

HMModule reverse_orientation(const HMModule& m) { return {-m.tower_bottom, m.torsion}; }

std::int64_t width_upper_from_torsion(std::int64_t t) {
  if (t < 0) throw DomainError("width_upper_from_torsion", "negative torsion number");
  return 4 * t + 4;
}

Bound torsion_upper_from_flow(const Bound& sf) {
  if (!sf.is_nonnegative()) throw DomainError("torsion_upper_from_flow", "flow bound " + sf.to_string() + " is negative");
  return num(2) * sf + num(2);
}

Bound froyshov_upper(const Bound& grQ, const Bound& sf) {
  if (!grQ.is_nonnegative()) throw DomainError("froyshov_upper", "grading bound " + grQ.to_string() + " is negative");
  if (!sf.is_nonnegative()) throw DomainError("froyshov_upper", "flow bound " + sf.to_string() + " is negative");
  return (grQ + sf + num(1)) / num(2);
}

BrieskornWidth brieskorn_width(std::int64_t n) {
  if (n < 1) throw DomainError("brieskorn_width", "index must be at least 1");
  const std::string label = "Sigma(2," + std::to_string(8 * n - 1) + "," + std::to_string(16 * n - 1) + ")";
  return {n, label, 2 * n};
}

Bound exclusion_threshold(const Bound& N) {
  if (!N.is_nonnegative()) throw DomainError("exclusion_threshold", "torsion bound " + N.to_string() + " is negative");
  return num(2) * N + num(2);
}

std::optional<std::int64_t> excluded_brieskorn_from(const Bound& threshold) {
  const Real& hi = threshold.hi();
  if (hi.is_log()) return std::nullopt;
  detail::Mpfr f(hi.precision());
  mpfr_floor(f.get(), hi.raw().get());
  if (mpfr_cmp_si(f.get(), INT64_MAX - 1) >= 0) return std::nullopt;
  return static_cast<std::int64_t>(mpfr_get_si(f.get(), MPFR_RNDN)) + 1;
}

CorrectionTerms::CorrectionTerms(std::int64_t alpha, std::int64_t beta, std::int64_t gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  if (!(alpha >= beta && beta >= gamma)) throw std::invalid_argument("correction terms need alpha >= beta >= gamma");
  if ((alpha - beta) % 2 != 0 || (alpha - gamma) % 2 != 0) {
    throw std::invalid_argument("correction terms must share parity");
  }
}

CorrectionTerms CorrectionTerms::reversed() const { return {-gamma_, -beta_, -alpha_}; }

std::int64_t width(const CorrectionTerms& ct) { return ct.alpha() - ct.gamma(); }

}  // namespace hypbound
