#pragma once

// Graded F[U]-module shapes, torsion widths, Pin(2) correction terms and the
// resulting exclusion threshold for the Brieskorn family.

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypbound/interval.hpp"

namespace hypbound {

using Grading = boost::rational<std::int64_t>;

/// One U-tower whose bottom sits in grading tower_bottom, plus cyclic torsion
/// summands F[U]/U^n. Torsion gradings are not tracked.
struct HMModule {
  Grading tower_bottom{0};
  std::vector<int> torsion;  // kept sorted ascending

  /// Sorts the exponents; throws std::invalid_argument on n < 1.
  static HMModule make(Grading tower_bottom, std::vector<int> torsion);

  bool operator==(const HMModule&) const = default;
};

/// Largest torsion exponent; 0 when there is no torsion.
int torsion_width(const HMModule& m);

/// Tor-based connected sum: two copies of min(n, m) for every pair of
/// summands, each summand once more against the other side's tower; tower
/// bottoms add.
HMModule connected_sum(const HMModule& a, const HMModule& b);

/// Reversed orientation: tower bottom negated, torsion kept.
HMModule reverse_orientation(const HMModule& m);

/// 4t + 4.
std::int64_t width_upper_from_torsion(std::int64_t t);

/// 2 sf + 2.
Bound torsion_upper_from_flow(const Bound& sf);

/// (grQ + sf + 1) / 2.
Bound froyshov_upper(const Bound& grQ, const Bound& sf);

struct BrieskornWidth {
  std::int64_t n;
  std::string label;  // "Sigma(2,8n-1,16n-1)" with n substituted
  std::int64_t width;
};

/// Width 2n of Sigma(2, 8n-1, 16n-1).
BrieskornWidth brieskorn_width(std::int64_t n);

/// 2N + 2.
Bound exclusion_threshold(const Bound& N);

/// First Brieskorn index n with n > threshold for every point of the
/// interval, i.e. floor(threshold.hi) + 1. Empty when that does not fit in
/// 64 bits.
std::optional<std::int64_t> excluded_brieskorn_from(const Bound& threshold);

class CorrectionTerms {
 public:
  /// Requires alpha >= beta >= gamma, all of the same parity.
  CorrectionTerms(std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

  std::int64_t alpha() const { return alpha_; }
  std::int64_t beta() const { return beta_; }
  std::int64_t gamma() const { return gamma_; }

  /// (-gamma, -beta, -alpha).
  CorrectionTerms reversed() const;

 private:
  std::int64_t alpha_;
  std::int64_t beta_;
  std::int64_t gamma_;
};

/// alpha - gamma.
std::int64_t width(const CorrectionTerms& ct);

}  // namespace hypbound
