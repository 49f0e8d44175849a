#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hypbound/flow_lab.hpp"
#include "hypbound/floer.hpp"
#include "hypbound/pipeline.hpp"
#include "hypbound/report.hpp"

using namespace hypbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitDomain = 2;

struct BoundArgs {
  std::string kind;
  std::string volume;
  std::string inj;
  std::string lambda1;
  std::string profile = "eps0.15";
  std::string diameter;
  std::string reducible;
  std::string name = "budget";
  bool unchecked = false;
};

struct LabArgs {
  long trials = 1000;
  int dim = 100;
  std::uint64_t seed = 1;
  std::string weights = "both";
  double norm = 5.0;
  int steps = 0;
  std::string spectrum = "weyl";
  double range = 10.0;
  int threads = 0;
};

std::optional<Bound> f_bound_from(const std::string& flag, const Config& cfg) {
  if (!flag.empty()) {
    Bound f = Bound::from_decimal(flag);
    if (!f.is_nonnegative()) throw DomainError("reducible-grading-bound", "must be nonnegative");
    return f;
  }
  return cfg.f_bound;
}

int run_bound(const BoundArgs& a, const Config& cfg) {
  BudgetInput input{a.volume, a.inj, a.lambda1, std::nullopt, a.unchecked};
  if (!a.diameter.empty()) input.diameter = a.diameter;
  std::optional<Bound> f = f_bound_from(a.reducible, cfg);
  if (a.kind == "m" && !f) {
    throw DomainError("bound m", "no reducible grading bound; pass --reducible-grading-bound or set f_bound");
  }
  if (a.kind == "n") f.reset();
  const ObstructionReport r = build_report(a.name, input, cfg.profile(a.profile), f);
  std::cout << to_json(r).dump(2) << "\n";
  return kExitOk;
}

int run_census(const std::string& path, const std::string& profile, const std::string& reducible, bool unchecked,
               const Config& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open census file '" + path + "'");
  const CensusParse parsed = parse_census(in);
  const CensusOutcome out = census_report(parsed.records, cfg.profile(profile), f_bound_from(reducible, cfg), unchecked);
  for (const ObstructionReport& r : out.reports) std::cout << to_json(r).dump() << "\n";
  for (const Diagnostic& d : parsed.diagnostics) std::cerr << to_json(d).dump() << "\n";
  for (const Diagnostic& d : out.diagnostics) std::cerr << to_json(d).dump() << "\n";
  return parsed.diagnostics.empty() && out.diagnostics.empty() ? kExitOk : kExitDomain;
}

int run_lab(const LabArgs& a) {
  lab::CampaignConfig cfg;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.max_dim = a.dim;
  cfg.max_norm = a.norm;
  cfg.spectrum_range = a.range;
  cfg.shape = lab::parse_spectrum_shape(a.spectrum);
  cfg.steps = a.steps;
  cfg.threads = a.threads;
  if (a.weights == "both") {
    cfg.flat = cfg.sobolev = true;
  } else {
    const lab::WeightModel m = lab::parse_weight_model(a.weights);
    cfg.flat = m == lab::WeightModel::flat;
    cfg.sobolev = !cfg.flat;
  }
  const auto records = lab::run_campaign(cfg);
  long failures = 0;
  for (const auto& r : records) {
    std::cout << to_json(r).dump() << "\n";
    if (!r.pass) ++failures;
  }
  Json summary;
  summary["trials"] = a.trials;
  summary["failures"] = failures;
  std::cerr << summary.dump() << "\n";
  return failures == 0 ? kExitOk : kExitInternal;
}

int run_tor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open module file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("module file is not valid JSON: ") + e.what());
  }
  const Json& list = j.is_object() && j.contains("modules") ? j["modules"] : j;
  if (!list.is_array() || list.empty()) throw std::invalid_argument("expected a non-empty array of modules");
  Json out;
  out["modules"] = Json::array();
  HMModule sum;
  int max_width = 0;
  for (const Json& m : list) {
    const HMModule mod = module_from_json(m);
    out["modules"].push_back(to_json(mod));
    sum = connected_sum(sum, mod);
    max_width = std::max(max_width, torsion_width(mod));
  }
  out["sum"] = to_json(sum);
  out["max_width"] = max_width;
  out["width_property"] = torsion_width(sum) == max_width;
  out["width_upper"] = width_upper_from_torsion(torsion_width(sum));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit obstruction constants for hyperbolic homology spheres"};
  app.require_subcommand(1);
  std::string config_path;
  long precision = 0;
  app.add_option("--config", config_path, "JSON file with precision, Weyl profiles and f_bound");
  app.add_option("--precision", precision, "working precision in bits (overrides config and environment)");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "constants for one budget");
  bound->add_option("kind", bound_args.kind, "n or m")->required()->check(CLI::IsMember({"n", "m"}));
  bound->add_option("--volume", bound_args.volume, "volume upper bound")->required();
  bound->add_option("--inj", bound_args.inj, "injectivity radius lower bound")->required();
  bound->add_option("--lambda1", bound_args.lambda1, "coexact spectral gap lower bound")->required();
  bound->add_option("--profile", bound_args.profile, "Weyl profile name")->capture_default_str();
  bound->add_option("--diameter", bound_args.diameter, "diameter upper bound replacing the estimate");
  bound->add_option("--reducible-grading-bound", bound_args.reducible, "bound f on the reducible grading");
  bound->add_option("--name", bound_args.name, "label in the report")->capture_default_str();
  bound->add_flag("--unchecked", bound_args.unchecked, "skip V >= 0.94, inj <= 0.15, lambda1 <= 1 guards");

  std::string census_input;
  std::string census_profile = "eps0.15";
  std::string census_reducible;
  bool census_unchecked = false;
  auto* census = app.add_subcommand("census", "reports for JSON-lines census records");
  census->add_option("--input", census_input, "JSON-lines file")->required();
  census->add_option("--profile", census_profile, "Weyl profile name")->capture_default_str();
  census->add_option("--reducible-grading-bound", census_reducible, "bound f on the reducible grading");
  census->add_flag("--unchecked", census_unchecked, "skip conventional guards for every record");

  LabArgs lab_args;
  auto* labcmd = app.add_subcommand("lab", "random spectral-flow campaign");
  labcmd->add_option("--trials", lab_args.trials)->capture_default_str();
  labcmd->add_option("--dim", lab_args.dim, "maximum dimension")->capture_default_str();
  labcmd->add_option("--seed", lab_args.seed)->capture_default_str();
  labcmd->add_option("--weights", lab_args.weights)->check(CLI::IsMember({"flat", "sobolev", "both"}))->capture_default_str();
  labcmd->add_option("--norm", lab_args.norm, "maximum |A|_2")->capture_default_str();
  labcmd->add_option("--steps", lab_args.steps, "grid steps, 0 to pick them so every step eps <= 0.01")->capture_default_str();
  labcmd->add_option("--spectrum", lab_args.spectrum)->check(CLI::IsMember({"uniform", "weyl"}))->capture_default_str();
  labcmd->add_option("--range", lab_args.range, "base spectrum in [-range, range]")->capture_default_str();
  labcmd->add_option("--threads", lab_args.threads, "0 for hardware concurrency")->capture_default_str();

  std::string tor_input;
  auto* tor = app.add_subcommand("tor", "connected sum of module shapes");
  tor->add_option("--input", tor_input, "JSON array of {tower_bottom, torsion}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    Config cfg = config_path.empty() ? Config::defaults() : load_config(config_path);
    long bits = cfg.precision_bits;
    if (const char* env = std::getenv("HYPBOUND_PRECISION_BITS")) {
      try {
        bits = std::stol(env);
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string("HYPBOUND_PRECISION_BITS is not an integer: ") + env);
      }
    }
    if (precision > 0) bits = precision;
    set_default_precision(bits);

    if (*bound) return run_bound(bound_args, cfg);
    if (*census) return run_census(census_input, census_profile, census_reducible, census_unchecked, cfg);
    if (*labcmd) return run_lab(lab_args);
    if (*tor) return run_tor(tor_input);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
