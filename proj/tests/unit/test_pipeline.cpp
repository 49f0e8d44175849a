#include <sstream>

#include "doctest.h"
#include "golden.hpp"
#include "hypbound/pipeline.hpp"
#include "hypbound/report.hpp"

using namespace hypbound;

namespace {

Bound q(std::int64_t p, std::int64_t d = 1) { return Bound::from_rational(p, d); }
Bound dec(const char* s) { return Bound::from_decimal(s); }

GeometryBudget budget(const char* v, const char* e, const char* d, bool unchecked = false) {
  return make_budget(dec(v), dec(e), dec(d), unchecked);
}

}  // namespace

TEST_CASE("assembled constant") {
  const WeylConstants w = WeylConstants::eps015();
  const AssembledConstant a = n_constant_assembled(budget("0.94", "0.15", "1"), w);
  CHECK(a.n.lo().is_log());
  CHECK(log10_report(a.n).value.contains(dec(golden::kLog10NAssembled094).lo()));
  CHECK(a.n.contains((q(4) * a.flow.reassembled + q(6)).lo()));
  CHECK(a.torsion_bound.contains((q(2) * a.flow.reassembled + q(2)).lo()));
  CHECK(certainly_le(a.n, a.n_displayed));

  const AssembledConstant bigger_v = n_constant_assembled(budget("1.5", "0.15", "1"), w);
  CHECK(certainly_lt(a.n, bigger_v.n));
  const AssembledConstant bigger_d = n_constant_assembled(budget("0.94", "0.15", "0.5"), w);
  CHECK(certainly_lt(a.n, bigger_d.n));
}

TEST_CASE("closed form") {
  for (const auto& c : golden::kClosed) {
    const Bound V = dec(c.volume);
    const Bound delta = dec(c.delta);
    CHECK(n_closed_form_exponent(V, delta).contains(dec(c.inner).lo()));
    const Log10Report r = log10_report(n_constant_closed_form(V, delta));
    CHECK(r.value.contains(dec(c.log10_n).lo()));
    CHECK(relative_width(r.value) <= 1e-20);
  }
  CHECK_THROWS_AS(n_constant_closed_form(q(1, 2), q(1)), DomainError);
  CHECK_THROWS_AS(n_constant_closed_form(q(1), q(2)), DomainError);
  CHECK_NOTHROW(n_constant_closed_form(q(1), q(2), true));

  const WeylConstants w = WeylConstants::eps015();
  const AssembledConstant a = n_constant_assembled(budget("1", "0.15", "1"), w);
  CHECK(certainly_le(a.n, n_constant_closed_form(q(1), q(1))));
}

TEST_CASE("m constant") {
  const WeylConstants zero = WeylConstants::synthetic(q(0), q(0), q(0), q(0), q(15, 100), "zero");
  const GeometryBudget g = budget("1", "0.15", "1");
  CHECK(m_constant(g, zero, q(0)).contains(q(1, 2).lo()));
  const Bound m = m_constant(g, WeylConstants::eps015(), q(3));
  CHECK(m.lo().is_log());
  CHECK_THROWS_AS(m_constant(g, zero, q(-1)), DomainError);
}

TEST_CASE("census parsing") {
  std::istringstream good(
      R"({"name": "census-5", "volume": 1.39, "inj_radius": 0.18, "lambda1_lower": 0.04})"
      "\n\n"
      R"({"name": "census-34", "volume": "1.91", "inj_radius": 0.24, "lambda1_lower": 0.001})"
      "\n");
  const CensusParse p = parse_census(good);
  REQUIRE(p.records.size() == 2);
  CHECK(p.diagnostics.empty());
  CHECK(p.records[0].volume == "1.39");
  CHECK(p.records[1].line == 3);

  std::istringstream bad(
      R"({"name": "a", "volume": 1.39, "inj_radius": 0.18})"
      "\n"
      R"({"name": "b", "volume": -1, "inj_radius": 0.18, "lambda1_lower": 0.04})"
      "\n"
      "not json\n"
      R"({"name": "c", "volume": 2, "inj_radius": 0.1, "lambda1_lower": 0.5})"
      "\n"
      R"({"name": "c", "volume": 3, "inj_radius": 0.1, "lambda1_lower": 0.5})"
      "\n");
  const CensusParse pb = parse_census(bad);
  REQUIRE(pb.records.size() == 1);
  REQUIRE(pb.diagnostics.size() == 4);
  CHECK(pb.diagnostics[0].line == 1);
  CHECK(pb.diagnostics[0].message.find("lambda1_lower") != std::string::npos);
  CHECK(pb.diagnostics[1].line == 2);
  CHECK(pb.diagnostics[2].line == 3);
  CHECK(pb.diagnostics[3].message.find("duplicate") != std::string::npos);

  std::istringstream empty("");
  CHECK(parse_census(empty).records.empty());
}

TEST_CASE("census reports") {
  const WeylConstants w = WeylConstants::eps015();
  std::vector<CensusRecord> recs{{"census-5", "1.39", "0.18", "0.04", 1},
                                 {"tiny", "0.5", "0.1", "0.5", 2},
                                 {"narrow", "2", "0.1", "0.5", 3}};
  const CensusOutcome out = census_report(recs, w, std::nullopt);
  REQUIRE(out.reports.size() == 1);
  CHECK(out.reports[0].unchecked);
  CHECK_FALSE(out.reports[0].notes.empty());
  CHECK(out.reports[0].n_closed.has_value());
  CHECK(out.reports[0].assembled_le_closed == true);
  REQUIRE(out.diagnostics.size() == 2);
  CHECK(out.diagnostics[0].line == 2);
  CHECK(out.diagnostics[1].message.find("eps") != std::string::npos);

  CHECK(census_report({}, w, std::nullopt).reports.empty());
}

TEST_CASE("reports are deterministic") {
  const WeylConstants w = WeylConstants::eps015();
  const BudgetInput in{"1.39", "0.18", "0.04", std::nullopt, true};
  const std::string a = to_json(build_report("x", in, w, q(5))).dump();
  const std::string b = to_json(build_report("x", in, w, q(5))).dump();
  CHECK(a == b);
  CHECK(a.find("\"m\"") != std::string::npos);
  CHECK(a.find("cosh(57*1.39)") != std::string::npos);
}

TEST_CASE("exclusion consistency") {
  const WeylConstants w = WeylConstants::eps015();
  const BudgetInput in{"1", "0.15", "1"};
  const ObstructionReport r = build_report("x", in, w, std::nullopt);
  const Bound t = exclusion_threshold(r.torsion_bound);
  CHECK(r.exclusion_threshold.contains(t));
  CHECK(t.contains(r.exclusion_threshold));
  CHECK(r.exclusion_threshold.contains(r.n_assembled));
  CHECK_FALSE(r.excluded_brieskorn_from.has_value());
}

TEST_CASE("config") {
  std::istringstream in(R"({"precision_bits": 192,
      "profiles": {"eps0.2": {"eps": "0.2", "a": 2, "b": 300, "d": 80, "e": 700}},
      "f_bound": 12.5})");
  const Config c = parse_config(in);
  CHECK(c.precision_bits == 192);
  CHECK(c.profiles.size() == 2);
  CHECK(c.profile("eps0.2").b.contains(q(300).lo()));
  CHECK(c.f_bound->contains(q(25, 2).lo()));
  CHECK_THROWS_AS(c.profile("nope"), std::invalid_argument);

  std::istringstream bad(R"({"profiles": {"x": {"eps": 0.1}}})");
  CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
  std::istringstream neg(R"({"profiles": {"x": {"eps": 0.1, "a": -1, "b": 1, "d": 1, "e": 1}}})");
  CHECK_THROWS_AS(parse_config(neg), DomainError);
}

TEST_CASE("module json") {
  const HMModule m = module_from_json(Json::parse(R"({"tower_bottom": "-3/2", "torsion": [4, 1]})"));
  CHECK(m.tower_bottom == Grading(-3, 2));
  CHECK(m.torsion == std::vector<int>{1, 4});
  CHECK(grading_text(m.tower_bottom) == "-3/2");
  CHECK(parse_grading(Json("0.25")) == Grading(1, 4));
  CHECK(parse_grading(Json(2)) == Grading(2));
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"torsion": [0]})")), std::invalid_argument);
}
