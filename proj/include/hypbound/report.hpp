#pragma once

// JSON rendering of reports and lab records, configuration files, and the
// module descriptions read by the tor subcommand.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "hypbound/flow_lab.hpp"
#include "hypbound/floer.hpp"
#include "hypbound/pipeline.hpp"
#include "json.hpp"

namespace hypbound {

using Json = nlohmann::ordered_json;

/// {"lo", "hi"} with outward-rounded endpoints, plus "log10" bounds when
/// positive.
Json bound_json(const Bound& b, int digits = 20);

Json to_json(const ObstructionReport& r);
Json to_json(const Diagnostic& d);
Json to_json(const lab::InstanceRecord& r);
Json to_json(const HMModule& m);

/// "p" or "p/q".
std::string grading_text(const Grading& g);
/// Accepts an integer, "p", "p/q" or a short decimal such as "-0.25".
Grading parse_grading(const Json& v);

/// {"tower_bottom": ..., "torsion": [...]}
HMModule module_from_json(const Json& v);

struct Config {
  long precision_bits = 128;
  std::map<std::string, WeylConstants> profiles;
  std::optional<Bound> f_bound;

  /// The bundled eps0.15 profile and nothing else.
  static Config defaults();
  const WeylConstants& profile(const std::string& name) const;
};

/// Layout:
///   {"precision_bits": 128,
///    "profiles": {"eps0.15": {"eps": 0.15, "a": 3, "b": 402, "d": 100, "e": 780}},
///    "f_bound": 12.5}
/// Every key is optional; profiles extend the bundled one. Numbers may be
/// given as decimal strings. Throws std::invalid_argument on bad content.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

/// Decimal text of a JSON number (shortest round-trip form) or string.
std::string decimal_text(const Json& v);

}  // namespace hypbound
