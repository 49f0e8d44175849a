#pragma once

// Finite-dimensional model of the family T + sA, s in [0, 1], with T
// diagonal. Used to exercise the spectral-flow bounds for bounded and
// relatively bounded perturbations on random instances.

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypbound/interval.hpp"

namespace hypbound::lab {

enum class WeightModel { flat, sobolev };
enum class SpectrumShape { uniform, weyl };

std::string to_string(WeightModel m);
std::string to_string(SpectrumShape s);
WeightModel parse_weight_model(const std::string& text);
SpectrumShape parse_spectrum_shape(const std::string& text);

/// Endpoint eigenvalue within the kernel tolerance of zero.
class DegenerateEndpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kKernelTolerance = 1e-9;

struct OperatorFamily {
  std::vector<double> base_spectrum;  // ascending, no zeros
  Eigen::MatrixXd perturbation;       // symmetric
  WeightModel weight_model = WeightModel::flat;

  /// Validates and symmetrizes; throws std::invalid_argument on bad input.
  static OperatorFamily make(std::vector<double> base_spectrum, Eigen::MatrixXd perturbation, WeightModel model);

  int dim() const { return static_cast<int>(base_spectrum.size()); }
  /// sqrt(3 + t_n^2) for sobolev, 1 for flat.
  Eigen::VectorXd weights() const;
  /// T + sA.
  Eigen::MatrixXd at(double s) const;
};

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXd& m);

/// #neg(T) - #neg(T + A).
int spectral_flow(const OperatorFamily& f);

/// Row k holds the ascending eigenvalues of T + (k/steps) A, k = 0..steps.
Eigen::MatrixXd trajectories(const OperatorFamily& f, int steps);

/// Signed count of sign changes along the sorted eigenvalue tracks,
/// negative-to-positive counting +1.
int crossing_count(const Eigen::MatrixXd& traj);

/// |A W^-1|_2 with W = diag(weights), padded for floating-point error.
/// Rejects the flat model.
Bound relative_norm(const OperatorFamily& f);

/// Upper end of the norm the flow checks use: |A|_1 for sobolev, |A|_2 for flat.
double checking_norm(const OperatorFamily& f);

struct FlowCheck {
  int flow = 0;
  int count = 0;         // eigenvalues of T with |t| <= threshold
  double norm = 0;
  double threshold = 0;
  bool pass = false;
};

/// |flow| <= #{n : |t_n| <= |A|_2 + 1}.
FlowCheck check_bounded_flow_bound(const OperatorFamily& f);

/// |flow| <= #{n : |t_n| <= 2 exp(|A|_1)}.
FlowCheck check_relative_flow_bound(const OperatorFamily& f);

struct ContainmentCheck {
  int steps = 0;
  double eps_tilde = 0;     // largest per-step eps used
  double base_eps = 0;      // checking_norm / steps
  long checked = 0;
  long violations = 0;
  long base_violations = 0;  // same sandwich with base_eps at every step
  double worst_excess = 0;   // max of |z - t| - eps(2 + |t|) over best witnesses
  int crossings = 0;         // net upward zero crossings along the grid
  bool pass = false;
};

/// Smallest step count with checking_norm / steps <= target (at least 2).
int containment_steps(const OperatorFamily& f, double target = 0.01);

/// |A (3 + T_s^2)^(-1/2)|_2 for T_s = T + sA, the relative norm measured
/// against the operator at parameter s. Equals relative_norm at s = 0.
double step_relative_norm(const OperatorFamily& f, double s);

/// For every eigenvalue z at step k + 1, some eigenvalue t at step k with
/// |z - t| <= eps_k (2 + |t|) + 1e-9. eps_k = |A|_2 / steps for flat and
/// step_relative_norm(f, k / steps) / steps for sobolev. base_violations
/// records the same test with the base-operator norm held fixed.
ContainmentCheck check_containment(const OperatorFamily& f, int steps);

/// check_containment with the step count raised until eps_tilde <= target.
ContainmentCheck check_containment_within(const OperatorFamily& f, double target = 0.01);

struct FamilyParams {
  std::uint64_t seed = 0;
  int dim = 10;
  double spectrum_range = 10.0;
  double norm_target = 1.0;
  WeightModel weight_model = WeightModel::flat;
  SpectrumShape shape = SpectrumShape::uniform;
};

/// GOE perturbation scaled to |A|_2 = norm_target, base spectrum in
/// [-range, range] with |t| >= 1e-3. Deterministic in the seed.
OperatorFamily random_family(const FamilyParams& p);

std::uint64_t splitmix64(std::uint64_t x);

struct CampaignConfig {
  long trials = 1000;
  std::uint64_t seed = 1;
  int max_dim = 100;
  double max_norm = 5.0;
  double spectrum_range = 10.0;
  SpectrumShape shape = SpectrumShape::weyl;
  bool flat = true;
  bool sobolev = true;
  int steps = 0;  // 0 picks containment_steps(f)
  int threads = 0;  // 0 uses hardware concurrency
};

struct InstanceRecord {
  long index = 0;
  std::uint64_t seed = 0;
  int attempts = 1;
  int dim = 0;
  WeightModel weight_model = WeightModel::flat;
  double norm_target = 0;
  int flow = 0;
  int crossings = 0;
  FlowCheck bounded;
  FlowCheck relative;
  ContainmentCheck containment;
  bool pass = false;
  std::string error;
};

std::vector<InstanceRecord> run_campaign(const CampaignConfig& cfg);

}  // namespace hypbound::lab
