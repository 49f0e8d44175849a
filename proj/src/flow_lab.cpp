#include "hypbound/flow_lab.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace hypbound::lab {

namespace {

using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>;

Eigen::VectorXd eigenvalues(Solver& solver, const Eigen::MatrixXd& m) {
  solver.compute(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  return solver.eigenvalues();
}

int negative_count(const Eigen::VectorXd& ev, const char* which) {
  int neg = 0;
  for (double x : ev) {
    if (std::abs(x) < kKernelTolerance) {
      throw DegenerateEndpointError(std::string(which) + " endpoint has an eigenvalue within 1e-9 of zero");
    }
    if (x < 0) ++neg;
  }
  return neg;
}

// Upper bound on a computed norm accounting for rounding in the SVD.
double padded_up(double v, int n) { return std::nextafter(v * (1 + 64.0 * n * DBL_EPSILON), HUGE_VAL) + DBL_MIN; }

double padded_down(double v, int n) { return std::max(0.0, v * (1 - 64.0 * n * DBL_EPSILON)); }

int count_within(const std::vector<double>& spectrum, double threshold) {
  return static_cast<int>(std::count_if(spectrum.begin(), spectrum.end(),
                                        [&](double t) { return std::abs(t) <= threshold; }));
}

}  // namespace

std::string to_string(WeightModel m) { return m == WeightModel::flat ? "flat" : "sobolev"; }
std::string to_string(SpectrumShape s) { return s == SpectrumShape::uniform ? "uniform" : "weyl"; }

WeightModel parse_weight_model(const std::string& text) {
  if (text == "flat") return WeightModel::flat;
  if (text == "sobolev") return WeightModel::sobolev;
  throw std::invalid_argument("unknown weight model '" + text + "'");
}

SpectrumShape parse_spectrum_shape(const std::string& text) {
  if (text == "uniform") return SpectrumShape::uniform;
  if (text == "weyl") return SpectrumShape::weyl;
  throw std::invalid_argument("unknown spectrum shape '" + text + "'");
}

OperatorFamily OperatorFamily::make(std::vector<double> base_spectrum, Eigen::MatrixXd perturbation,
                                    WeightModel model) {
  const auto n = static_cast<Eigen::Index>(base_spectrum.size());
  if (n == 0) throw std::invalid_argument("empty base spectrum");
  if (perturbation.rows() != n || perturbation.cols() != n) {
    throw std::invalid_argument("perturbation dimension does not match the base spectrum");
  }
  for (double t : base_spectrum) {
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite base eigenvalue");
    if (t == 0.0) throw std::invalid_argument("base spectrum contains 0");
  }
  if (!std::is_sorted(base_spectrum.begin(), base_spectrum.end())) {
    throw std::invalid_argument("base spectrum is not sorted");
  }
  if (!perturbation.allFinite()) throw std::invalid_argument("non-finite perturbation entry");
  if ((perturbation - perturbation.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("perturbation is not symmetric");
  }
  Eigen::MatrixXd sym = 0.5 * (perturbation + perturbation.transpose());
  return {std::move(base_spectrum), std::move(sym), model};
}

Eigen::VectorXd OperatorFamily::weights() const {
  Eigen::VectorXd w(dim());
  for (int i = 0; i < dim(); ++i) {
    const double t = base_spectrum[static_cast<std::size_t>(i)];
    w[i] = weight_model == WeightModel::sobolev ? std::sqrt(3.0 + t * t) : 1.0;
  }
  return w;
}

Eigen::MatrixXd OperatorFamily::at(double s) const {
  Eigen::MatrixXd m = s * perturbation;
  for (int i = 0; i < dim(); ++i) m(i, i) += base_spectrum[static_cast<std::size_t>(i)];
  return m;
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Solver solver;
  if (m.rows() == m.cols() && m.isApprox(m.transpose(), 0.0)) {
    return eigenvalues(solver, m).cwiseAbs().maxCoeff();
  }
  return std::sqrt(std::max(0.0, eigenvalues(solver, m.transpose() * m).maxCoeff()));
}

int spectral_flow(const OperatorFamily& f) {
  Solver solver(f.dim());
  const int start = negative_count(eigenvalues(solver, f.at(0.0)), "initial");
  const int end = negative_count(eigenvalues(solver, f.at(1.0)), "final");
  return start - end;
}

Eigen::MatrixXd trajectories(const OperatorFamily& f, int steps) {
  if (steps < 2) throw std::invalid_argument("trajectories need at least 2 steps");
  Eigen::MatrixXd out(steps + 1, f.dim());
  Solver solver(f.dim());
  for (int k = 0; k <= steps; ++k) {
    out.row(k) = eigenvalues(solver, f.at(static_cast<double>(k) / steps)).transpose();
  }
  return out;
}

int crossing_count(const Eigen::MatrixXd& traj) {
  int net = 0;
  for (Eigen::Index j = 0; j < traj.cols(); ++j) {
    for (Eigen::Index k = 0; k + 1 < traj.rows(); ++k) {
      const bool was_pos = traj(k, j) > 0;
      const bool is_pos = traj(k + 1, j) > 0;
      if (!was_pos && is_pos) ++net;
      if (was_pos && !is_pos) --net;
    }
  }
  return net;
}

Bound relative_norm(const OperatorFamily& f) {
  if (f.weight_model != WeightModel::sobolev) {
    throw DomainError("relative_norm", "the flat weight model has no H_1 structure");
  }
  const Eigen::VectorXd w = f.weights();
  const Eigen::MatrixXd scaled = f.perturbation * w.cwiseInverse().asDiagonal();
  const double v = spectral_norm(scaled);
  return Bound::from_endpoints(Bound::from_double(padded_down(v, f.dim())).lo(),
                               Bound::from_double(padded_up(v, f.dim())).hi());
}

double checking_norm(const OperatorFamily& f) {
  if (f.weight_model == WeightModel::sobolev) return relative_norm(f).hi().to_double(Rounding::up);
  return padded_up(spectral_norm(f.perturbation), f.dim());
}

FlowCheck check_bounded_flow_bound(const OperatorFamily& f) {
  FlowCheck c;
  c.flow = spectral_flow(f);
  c.norm = padded_up(spectral_norm(f.perturbation), f.dim());
  c.threshold = c.norm + 1.0;
  c.count = count_within(f.base_spectrum, c.threshold);
  c.pass = std::abs(c.flow) <= c.count;
  return c;
}

FlowCheck check_relative_flow_bound(const OperatorFamily& f) {
  FlowCheck c;
  c.flow = spectral_flow(f);
  c.norm = checking_norm(f);
  c.threshold = std::nextafter(2.0 * std::exp(c.norm) * (1 + 4 * DBL_EPSILON), HUGE_VAL);
  c.count = count_within(f.base_spectrum, c.threshold);
  c.pass = std::abs(c.flow) <= c.count;
  return c;
}

int containment_steps(const OperatorFamily& f, double target) {
  if (!(target > 0)) throw std::invalid_argument("containment target must be positive");
  const double n = checking_norm(f);
  const double steps = std::ceil(n / target);
  if (steps > 1e7) throw std::invalid_argument("perturbation too large for a containment sweep");
  return std::max(2, static_cast<int>(steps));
}

double step_relative_norm(const OperatorFamily& f, double s) {
  if (f.weight_model != WeightModel::sobolev) {
    throw DomainError("step_relative_norm", "the flat weight model has no H_1 structure");
  }
  const Eigen::MatrixXd t = f.at(s);
  const Eigen::MatrixXd w = 3.0 * Eigen::MatrixXd::Identity(f.dim(), f.dim()) + t * t;
  const Eigen::MatrixXd a2 = f.perturbation * f.perturbation;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(a2, w, Eigen::EigenvaluesOnly);
  if (ges.info() != Eigen::Success) throw std::runtime_error("generalized eigensolver did not converge");
  return padded_up(std::sqrt(std::max(0.0, ges.eigenvalues().maxCoeff())), f.dim());
}

ContainmentCheck check_containment(const OperatorFamily& f, int steps) {
  if (steps < 2) throw std::invalid_argument("containment needs at least 2 steps");
  ContainmentCheck c;
  c.steps = steps;
  c.base_eps = checking_norm(f) / steps;
  c.worst_excess = -std::numeric_limits<double>::infinity();

  const bool sobolev = f.weight_model == WeightModel::sobolev;
  const Eigen::Index n = f.dim();
  const Eigen::MatrixXd a2 = f.perturbation * f.perturbation;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Solver solver(n);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(n);

  std::vector<double> prev(static_cast<std::size_t>(n));
  std::vector<double> next(static_cast<std::size_t>(n));
  Eigen::VectorXd::Map(prev.data(), n) = eigenvalues(solver, f.at(0.0));
  int crossings = 0;
  for (int k = 0; k < steps; ++k) {
    double eps = c.base_eps;
    if (sobolev) {
      const Eigen::MatrixXd t = f.at(static_cast<double>(k) / steps);
      ges.compute(a2, 3.0 * id + t * t, Eigen::EigenvaluesOnly);
      if (ges.info() != Eigen::Success) throw std::runtime_error("generalized eigensolver did not converge");
      eps = padded_up(std::sqrt(std::max(0.0, ges.eigenvalues().maxCoeff())), f.dim()) / steps;
    }
    c.eps_tilde = std::max(c.eps_tilde, eps);
    if (eps >= 1.0) throw DomainError("check_containment", "step perturbation norm is not below 1");

    Eigen::VectorXd::Map(next.data(), n) = eigenvalues(solver, f.at(static_cast<double>(k + 1) / steps));
    for (Eigen::Index j = 0; j < n; ++j) {
      const double z = next[static_cast<std::size_t>(j)];
      const double before = prev[static_cast<std::size_t>(j)];
      if (before <= 0 && z > 0) ++crossings;
      if (before > 0 && z <= 0) --crossings;
      // The nearest eigenvalue on either side is the best witness on that side.
      const auto it = std::lower_bound(prev.begin(), prev.end(), z);
      double best = std::numeric_limits<double>::infinity();
      double best_base = std::numeric_limits<double>::infinity();
      for (auto w : {it, it == prev.begin() ? prev.end() : it - 1}) {
        if (w == prev.end()) continue;
        best = std::min(best, std::abs(z - *w) - eps * (2.0 + std::abs(*w)));
        best_base = std::min(best_base, std::abs(z - *w) - c.base_eps * (2.0 + std::abs(*w)));
      }
      ++c.checked;
      c.worst_excess = std::max(c.worst_excess, best);
      if (best > kKernelTolerance) ++c.violations;
      if (best_base > kKernelTolerance) ++c.base_violations;
    }
    prev.swap(next);
  }
  c.crossings = crossings;
  c.pass = c.violations == 0;
  return c;
}

ContainmentCheck check_containment_within(const OperatorFamily& f, double target) {
  int steps = containment_steps(f, target);
  for (int round = 0;; ++round) {
    ContainmentCheck c = check_containment(f, steps);
    if (c.eps_tilde <= target || round == 8) return c;
    const double refined = std::ceil(c.eps_tilde * steps / target) + 1;
    if (refined > 1e7) throw std::invalid_argument("perturbation too large for a containment sweep");
    steps = std::max(steps + 1, static_cast<int>(refined));
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

OperatorFamily random_family(const FamilyParams& p) {
  if (p.dim < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(p.spectrum_range > 1e-3)) throw std::invalid_argument("spectrum range must exceed 1e-3");
  if (!(p.norm_target >= 0) || !std::isfinite(p.norm_target)) throw std::invalid_argument("invalid norm target");

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> spectrum;
  spectrum.reserve(static_cast<std::size_t>(p.dim));
  while (static_cast<int>(spectrum.size()) < p.dim) {
    const double u = unit(rng);
    const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
    // The weyl shape has counting function proportional to T^3.
    const double mag = p.shape == SpectrumShape::uniform ? p.spectrum_range * u : p.spectrum_range * std::cbrt(u);
    if (mag >= 1e-3) spectrum.push_back(sign * mag);
  }
  std::sort(spectrum.begin(), spectrum.end());

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p.dim, p.dim);
  if (p.norm_target > 0) {
    for (int i = 0; i < p.dim; ++i) {
      for (int j = i; j < p.dim; ++j) {
        const double g = gauss(rng);
        a(i, j) = g;
        a(j, i) = g;
      }
    }
    const double n = spectral_norm(a);
    if (n > 0) a *= p.norm_target / n;
  }
  return OperatorFamily::make(std::move(spectrum), std::move(a), p.weight_model);
}

namespace {

InstanceRecord run_instance(const CampaignConfig& cfg, long index) {
  InstanceRecord r;
  r.index = index;
  const std::uint64_t base = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(index)));
  std::mt19937_64 draw(base);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  r.dim = std::clamp(static_cast<int>(std::exp(unit(draw) * std::log(cfg.max_dim + 1.0))), 1, cfg.max_dim);
  r.norm_target = cfg.max_norm * unit(draw);
  if (cfg.flat && cfg.sobolev) {
    r.weight_model = index % 2 == 0 ? WeightModel::flat : WeightModel::sobolev;
  } else {
    r.weight_model = cfg.sobolev ? WeightModel::sobolev : WeightModel::flat;
  }

  constexpr int kMaxAttempts = 8;
  for (r.attempts = 1; r.attempts <= kMaxAttempts; ++r.attempts) {
    r.seed = splitmix64(base + static_cast<std::uint64_t>(r.attempts));
    FamilyParams params{r.seed, r.dim, cfg.spectrum_range, r.norm_target, r.weight_model, cfg.shape};
    try {
      const OperatorFamily f = random_family(params);
      r.bounded = check_bounded_flow_bound(f);
      r.relative = check_relative_flow_bound(f);
      r.flow = r.bounded.flow;
      r.containment = cfg.steps > 0 ? check_containment(f, cfg.steps) : check_containment_within(f, 0.01);
      r.crossings = r.containment.crossings;
      r.pass = r.bounded.pass && r.relative.pass && r.containment.pass && r.crossings == r.flow;
      r.error.clear();
      return r;
    } catch (const DegenerateEndpointError& e) {
      r.error = e.what();  // transversality fails; draw again
    }
  }
  r.attempts = kMaxAttempts;
  r.pass = false;
  return r;
}

}  // namespace

std::vector<InstanceRecord> run_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (cfg.max_dim < 1) throw std::invalid_argument("max dimension must be at least 1");
  if (!(cfg.max_norm >= 0)) throw std::invalid_argument("max norm must be nonnegative");
  if (!cfg.flat && !cfg.sobolev) throw std::invalid_argument("no weight model selected");

  std::vector<InstanceRecord> out(static_cast<std::size_t>(cfg.trials));
  std::atomic<long> next{0};
  auto worker = [&]() {
    for (long i = next++; i < cfg.trials; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = run_instance(cfg, i);
      } catch (const std::exception& e) {
        out[static_cast<std::size_t>(i)].index = i;
        out[static_cast<std::size_t>(i)].error = e.what();
      }
    }
  };
  unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(1L, cfg.trials))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace hypbound::lab
