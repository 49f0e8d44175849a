#include "hypbound/report.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace hypbound {

namespace {

constexpr int kLogDigits = 25;

std::string profile_echo(const ObstructionReport& r) {
  return "V=" + r.input.volume + ", eps=" + r.input.eps + ", delta=" + r.input.delta + ", profile=" + r.profile;
}

}  // namespace

std::string decimal_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    return std::string(buf, res.ptr);
  }
  throw std::invalid_argument("expected a number or a decimal string, got " + v.dump());
}

Json bound_json(const Bound& b, int digits) {
  Json j;
  j["lo"] = b.lo().to_string(digits, Rounding::down);
  j["hi"] = b.hi().to_string(digits, Rounding::up);
  if (b.is_positive()) {
    const Log10Report l = log10_report(b, kLogDigits);
    j["log10"] = {{"lo", l.lower}, {"hi", l.upper}};
  }
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["name"] = r.name;
  j["budget"] = {{"volume", r.input.volume}, {"inj_radius", r.input.eps}, {"lambda1_lower", r.input.delta}};
  if (r.input.diameter) j["budget"]["diameter"] = *r.input.diameter;
  j["profile"] = r.profile;
  j["unchecked"] = r.unchecked;
  j["precision_bits"] = r.input.precision;
  j["notes"] = r.notes;

  Json g;
  g["diameter"] = bound_json(r.diameter);
  g["sobolev_lower"] = bound_json(r.sobolev_lower);
  g["sobolev_rounded"] = bound_json(r.sobolev_rounded);
  g["embedding_L6"] = bound_json(r.embedding_L6);
  g["c_V_eps"] = bound_json(r.c_V_eps);
  j["geometry"] = std::move(g);

  Json f;
  f["hessian_norm"] = bound_json(r.hessian_norm);
  f["threshold"] = bound_json(r.flow_threshold);
  f["sf_displayed"] = bound_json(r.sf_displayed);
  f["sf_reassembled"] = bound_json(r.sf_reassembled);
  j["flow"] = std::move(f);

  Json n;
  n["torsion_bound"] = bound_json(r.torsion_bound);
  n["n_assembled"] = bound_json(r.n_assembled);
  n["n_displayed"] = bound_json(r.n_displayed);
  if (r.n_closed) n["n_closed"] = bound_json(*r.n_closed);
  if (r.assembled_le_closed) n["assembled_le_closed"] = *r.assembled_le_closed;
  if (r.f_bound) n["f_bound"] = bound_json(*r.f_bound);
  if (r.m) n["m"] = bound_json(*r.m);
  n["exclusion_threshold"] = bound_json(r.exclusion_threshold);
  if (r.excluded_brieskorn_from) {
    n["excluded_brieskorn_from"] = *r.excluded_brieskorn_from;
  } else {
    n["excluded_brieskorn_from"] = "floor(" + r.exclusion_threshold.hi().to_string(20, Rounding::up) + ")+1";
  }
  j["constants"] = std::move(n);

  Json e;
  const std::string at = " at " + profile_echo(r);
  e["sf_displayed"] = "V*(2*d+(2*a+3*b+2*e)*8*exp(15*c_V_eps*V^(1/2)*(1+3/delta)^(1/2)))" + at;
  e["sf_reassembled"] = "V*(2*d+(2*a+3*b+2*e)*(2*exp(9/2*c_V_eps*V^(1/2)*(1+3/delta)^(1/2)))^3)" + at;
  e["n_assembled"] = "4*sf_reassembled+6" + at;
  if (r.n_closed) {
    e["n_closed"] = "4*" + r.input.volume + "*(200+exp(11+15*e^(11/2)*" + r.input.volume + "^(7/12)*(cosh(57*" +
                    r.input.volume + ")-1)^(8/3)*(1+3/" + r.input.delta + ")^(1/2)))+6";
  }
  if (r.m) e["m"] = "(f_bound+sf_reassembled+1)/2" + at;
  j["formulas"] = std::move(e);
  return j;
}

Json to_json(const Diagnostic& d) {
  Json j;
  j["line"] = d.line;
  if (!d.name.empty()) j["name"] = d.name;
  j["error"] = d.message;
  return j;
}

Json to_json(const lab::InstanceRecord& r) {
  Json j;
  j["index"] = r.index;
  j["seed"] = r.seed;
  j["attempts"] = r.attempts;
  j["dim"] = r.dim;
  j["weights"] = lab::to_string(r.weight_model);
  j["norm_target"] = r.norm_target;
  j["flow"] = r.flow;
  j["crossings"] = r.crossings;
  j["bounded"] = {{"norm", r.bounded.norm}, {"threshold", r.bounded.threshold}, {"count", r.bounded.count},
                  {"pass", r.bounded.pass}};
  j["relative"] = {{"norm", r.relative.norm}, {"threshold", r.relative.threshold}, {"count", r.relative.count},
                   {"pass", r.relative.pass}};
  j["containment"] = {{"steps", r.containment.steps},
                      {"eps_tilde", r.containment.eps_tilde},
                      {"base_eps", r.containment.base_eps},
                      {"checked", r.containment.checked},
                      {"violations", r.containment.violations},
                      {"base_violations", r.containment.base_violations},
                      {"worst_excess", r.containment.worst_excess},
                      {"pass", r.containment.pass}};
  j["pass"] = r.pass;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string grading_text(const Grading& g) {
  if (g.denominator() == 1) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

Grading parse_grading(const Json& v) {
  if (v.is_number_integer()) return Grading(v.get<std::int64_t>());
  const std::string s = decimal_text(v);
  auto parse_int = [&](std::string_view t) {
    std::int64_t x = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), x);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
      throw std::invalid_argument("bad grading '" + s + "'");
    }
    return x;
  };
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::int64_t q = parse_int(std::string_view(s).substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in grading '" + s + "'");
    return Grading(parse_int(std::string_view(s).substr(0, slash)), q);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 12) throw std::invalid_argument("grading '" + s + "' has too many decimals");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string digits = s.substr(0, dot) + frac;
    return Grading(parse_int(digits), scale);
  }
  return Grading(parse_int(s));
}

Json to_json(const HMModule& m) {
  Json j;
  j["tower_bottom"] = grading_text(m.tower_bottom);
  j["torsion"] = m.torsion;
  j["torsion_width"] = torsion_width(m);
  return j;
}

HMModule module_from_json(const Json& v) {
  if (!v.is_object()) throw std::invalid_argument("module description is not an object");
  Grading bottom(0);
  if (v.contains("tower_bottom")) bottom = parse_grading(v["tower_bottom"]);
  std::vector<int> torsion;
  if (v.contains("torsion")) {
    if (!v["torsion"].is_array()) throw std::invalid_argument("'torsion' is not an array");
    for (const Json& x : v["torsion"]) {
      if (!x.is_number_integer()) throw std::invalid_argument("torsion exponent " + x.dump() + " is not an integer");
      torsion.push_back(x.get<int>());
    }
  }
  return HMModule::make(bottom, std::move(torsion));
}

Config Config::defaults() {
  Config c;
  c.profiles.emplace("eps0.15", WeylConstants::eps015());
  return c;
}

const WeylConstants& Config::profile(const std::string& name) const {
  const auto it = profiles.find(name);
  if (it == profiles.end()) throw std::invalid_argument("unknown Weyl profile '" + name + "'");
  return it->second;
}

Config parse_config(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  Config c = Config::defaults();
  if (j.contains("precision_bits")) {
    if (!j["precision_bits"].is_number_integer()) throw std::invalid_argument("precision_bits must be an integer");
    c.precision_bits = j["precision_bits"].get<long>();
    if (c.precision_bits < 53 || c.precision_bits > (1L << 20)) {
      throw std::invalid_argument("precision_bits out of range [53, 2^20]");
    }
  }
  if (j.contains("profiles")) {
    if (!j["profiles"].is_object()) throw std::invalid_argument("profiles must be an object");
    for (const auto& [name, p] : j["profiles"].items()) {
      if (!p.is_object()) throw std::invalid_argument("profile '" + name + "' is not an object");
      for (const char* key : {"eps", "a", "b", "d", "e"}) {
        if (!p.contains(key)) throw std::invalid_argument("profile '" + name + "' lacks '" + key + "'");
      }
      auto field = [&](const char* key) { return Bound::from_decimal(decimal_text(p[key]), c.precision_bits); };
      c.profiles.insert_or_assign(
          name, WeylConstants::make(field("a"), field("b"), field("d"), field("e"), field("eps"), name));
    }
  }
  if (j.contains("f_bound")) {
    c.f_bound = Bound::from_decimal(decimal_text(j["f_bound"]), c.precision_bits);
    if (!c.f_bound->is_nonnegative()) throw std::invalid_argument("f_bound must be nonnegative");
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace hypbound
