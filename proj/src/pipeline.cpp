#include "hypbound/pipeline.hpp"

#include <istream>
#include <map>

#include "hypbound/report.hpp"

namespace hypbound {

namespace {

Bound num(std::int64_t p, std::int64_t q = 1) { return Bound::from_rational(p, q); }

bool overlaps(const Bound& a, const Bound& b) { return !certainly_lt(a, b) && !certainly_lt(b, a); }

}  // namespace

AssembledConstant n_constant_assembled(const GeometryBudget& g, const WeylConstants& w) {
  SpectralFlowBound flow = spectral_flow_bound(g, w);
  Bound N = torsion_upper_from_flow(flow.reassembled);
  Bound n = exclusion_threshold(N);
  Bound n_displayed = exclusion_threshold(torsion_upper_from_flow(flow.displayed));
  return {std::move(n), std::move(n_displayed), std::move(N), std::move(flow)};
}

Bound n_closed_form_exponent(const Bound& V, const Bound& delta) {
  const Bound coshterm = pow(cosh(num(57) * V) - num(1), {8, 3});
  return num(11) + num(15) * exp(num(11, 2)) * pow(V, {7, 12}) * coshterm * sqrt(num(1) + num(3) / delta);
}

Bound n_constant_closed_form(const Bound& V, const Bound& delta, bool unchecked) {
  if (!V.is_positive()) throw DomainError("n_constant_closed_form", "volume " + V.to_string() + " is not positive");
  if (!delta.is_positive()) throw DomainError("n_constant_closed_form", "delta " + delta.to_string() + " is not positive");
  if (!unchecked) {
    if (certainly_lt(V, volume_floor())) {
      throw DomainError("n_constant_closed_form", "volume " + V.to_string() + " is below 0.94");
    }
    if (certainly_lt(num(1), delta)) {
      throw DomainError("n_constant_closed_form", "delta " + delta.to_string() + " exceeds 1");
    }
  }
  return num(4) * V * (num(200) + exp(n_closed_form_exponent(V, delta))) + num(6);
}

Bound m_constant(const GeometryBudget& g, const WeylConstants& w, const Bound& f_bound) {
  return froyshov_upper(f_bound, spectral_flow_bound(g, w).reassembled);
}

GeometryBudget BudgetInput::budget() const {
  GeometryBudget g{Bound::from_decimal(volume, precision), Bound::from_decimal(eps, precision),
                   Bound::from_decimal(delta, precision), std::nullopt, unchecked};
  if (diameter) g.diameter = Bound::from_decimal(*diameter, precision);
  validate(g);
  return g;
}

ObstructionReport build_report(const std::string& name, const BudgetInput& input, const WeylConstants& w,
                               const std::optional<Bound>& f_bound) {
  ObstructionReport r;
  r.name = name;
  r.input = input;
  r.budget = input.budget();
  r.profile = w.name;
  r.unchecked = input.unchecked;
  check_compatible(r.budget, w);

  const GeometryBudget& g = r.budget;
  r.diameter = diameter_bound(g);
  r.sobolev_lower = sobolev_constant_lower(g);
  r.sobolev_rounded = sobolev_constant_rounded(g);
  r.embedding_L6 = embedding_L6_constant(g);
  r.c_V_eps = c_V_eps(g);

  AssembledConstant a = n_constant_assembled(g, w);
  r.hessian_norm = a.flow.hessian.value;
  r.flow_threshold = a.flow.threshold;
  r.sf_displayed = a.flow.displayed;
  r.sf_reassembled = a.flow.reassembled;
  r.torsion_bound = a.torsion_bound;
  r.n_assembled = a.n;
  r.n_displayed = a.n_displayed;

  if (overlaps(w.eps, num(15, 100))) {
    try {
      r.n_closed = n_constant_closed_form(g.volume, g.delta, input.unchecked);
      r.assembled_le_closed = certainly_le(r.n_assembled, *r.n_closed);
    } catch (const DomainError& e) {
      r.notes.push_back(std::string("closed form skipped: ") + e.what());
    }
  }
  if (g.diameter) r.notes.push_back("diameter override in effect for the geometric constants");

  if (f_bound) {
    r.f_bound = *f_bound;
    r.m = froyshov_upper(*f_bound, r.sf_reassembled);
  }
  r.exclusion_threshold = exclusion_threshold(r.torsion_bound);
  r.excluded_brieskorn_from = excluded_brieskorn_from(r.exclusion_threshold);
  return r;
}

CensusParse parse_census(std::istream& in) {
  CensusParse out;
  std::map<std::string, int> seen;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    CensusRecord rec;
    rec.line = line;
    try {
      const Json j = Json::parse(text);
      if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
      for (const char* key : {"name", "volume", "inj_radius", "lambda1_lower"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
      }
      if (!j["name"].is_string()) throw std::invalid_argument("field 'name' is not a string");
      rec.name = j["name"].get<std::string>();
      if (rec.name.empty()) throw std::invalid_argument("empty name");
      rec.volume = decimal_text(j["volume"]);
      rec.inj_radius = decimal_text(j["inj_radius"]);
      rec.lambda1_lower = decimal_text(j["lambda1_lower"]);
      for (const auto& [field, value] : {std::pair{"volume", &rec.volume}, std::pair{"inj_radius", &rec.inj_radius},
                                         std::pair{"lambda1_lower", &rec.lambda1_lower}}) {
        const Bound b = Bound::from_decimal(*value);
        if (!b.is_positive()) throw std::invalid_argument(std::string("field '") + field + "' is not positive");
      }
    } catch (const std::exception& e) {
      out.diagnostics.push_back({line, rec.name, e.what()});
      continue;
    }
    const auto [it, fresh] = seen.emplace(rec.name, line);
    if (!fresh) {
      out.diagnostics.push_back(
          {line, rec.name, "duplicate name (first seen on line " + std::to_string(it->second) + ")"});
      continue;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

CensusOutcome census_report(const std::vector<CensusRecord>& records, const WeylConstants& w,
                            const std::optional<Bound>& f_bound, bool unchecked) {
  CensusOutcome out;
  for (const CensusRecord& rec : records) {
    BudgetInput input{rec.volume, rec.inj_radius, rec.lambda1_lower, std::nullopt, unchecked};
    std::vector<std::string> notes;
    try {
      if (!unchecked) {
        const Bound eps = Bound::from_decimal(rec.inj_radius, input.precision);
        const Bound delta = Bound::from_decimal(rec.lambda1_lower, input.precision);
        if (certainly_lt(Bound::from_decimal(rec.volume, input.precision), volume_floor())) {
          throw DomainError("budget", "volume " + rec.volume + " is below 0.94");
        }
        if (certainly_lt(num(15, 100), eps)) {
          input.unchecked = true;
          notes.push_back("inj_radius exceeds 0.15: conventional guards relaxed");
        }
        if (certainly_lt(num(1), delta)) {
          input.unchecked = true;
          notes.push_back("lambda1_lower exceeds 1: conventional guards relaxed");
        }
      }
      ObstructionReport r = build_report(rec.name, input, w, f_bound);
      r.notes.insert(r.notes.begin(), notes.begin(), notes.end());
      out.reports.push_back(std::move(r));
    } catch (const DomainError& e) {
      out.diagnostics.push_back({rec.line, rec.name, e.what()});
    }
  }
  return out;
}

}  // namespace hypbound
