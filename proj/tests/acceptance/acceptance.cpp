// Acceptance checks. Prints one PASS/FAIL line per criterion and exits 0
// exactly when the failing set equals the --expect-fail set.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "golden.hpp"
#include "hypbound/flow_lab.hpp"
#include "hypbound/pipeline.hpp"
#include "hypbound/report.hpp"
#include "oracles/fuzz_oracle.hpp"
#include "oracles/tor_oracle.hpp"

using namespace hypbound;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Bound q(std::int64_t p, std::int64_t d = 1) { return Bound::from_rational(p, d); }
Bound dec(const char* s) { return Bound::from_decimal(s); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Closed-form golden values.
Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;
  double worst = 0;
  for (const auto& c : golden::kClosed) {
    const Bound V = dec(c.volume);
    const Bound delta = dec(c.delta);
    const Log10Report r = log10_report(n_constant_closed_form(V, delta));
    const double w = relative_width(r.value);
    worst = std::max(worst, w);
    if (!r.value.contains(dec(c.log10_n).lo()) || !(w <= 1e-20)) ++bad;
    if (!n_closed_form_exponent(V, delta).contains(dec(c.inner).lo())) ++bad;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {bad == 0 && secs < 1.0, std::to_string(bad) + " mismatches over 5 cases, max log10 relative width " +
                                      fmt("%.2e", worst) + ", " + fmt("%.3f", secs) + " s"};
}

// Assembled constant below the closed form on a 20x20 grid.
Outcome ac2() {
  const auto start = std::chrono::steady_clock::now();
  const WeylConstants w = WeylConstants::eps015();
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    const Bound V = q(94 * 19 + 556 * i, 1900);
    for (int j = 0; j < 20; ++j) {
      const Bound delta = pow(q(10), {3 * j - 57, 19});
      const AssembledConstant a = n_constant_assembled(make_budget(V, q(15, 100), delta), w);
      if (!certainly_le(a.n, n_constant_closed_form(V, delta))) ++bad;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {bad == 0 && secs < 10.0,
          std::to_string(bad) + " of 400 grid points not certainly majorized, " + fmt("%.2f", secs) + " s"};
}

// Random spectral-flow campaign.
Outcome ac3(const std::string& archive) {
  const auto start = std::chrono::steady_clock::now();
  lab::CampaignConfig cfg;
  cfg.trials = 10000;
  cfg.seed = 20240611;
  const auto records = lab::run_campaign(cfg);
  long failures = 0, flat = 0, sobolev = 0, base_flagged = 0;
  long steps = 0;
  double worst_eps = 0;
  std::ofstream out;
  for (const auto& r : records) {
    (r.weight_model == lab::WeightModel::flat ? flat : sobolev) += 1;
    if (r.weight_model == lab::WeightModel::sobolev && r.containment.base_violations > 0) ++base_flagged;
    worst_eps = std::max(worst_eps, r.containment.eps_tilde);
    steps += r.containment.steps;
    if (r.pass && r.containment.eps_tilde <= 0.01) continue;
    ++failures;
    if (!out.is_open()) out.open(archive);
    out << to_json(r).dump() << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string detail = std::to_string(failures) + " failing of " + std::to_string(records.size()) + " (" +
                       std::to_string(flat) + " flat, " + std::to_string(sobolev) + " sobolev), max eps " +
                       fmt("%.6f", worst_eps) + ", " + std::to_string(steps) + " steps; fixed base-norm eps " +
                       "would flag " + std::to_string(base_flagged) + " sobolev instances; " +
                       fmt("%.1f", secs) + " s";
  if (failures > 0) detail += "; failures archived to " + archive;
  return {failures == 0 && records.size() == 10000 && secs < 300.0, detail};
}

// Recurrence convergence and threshold majorization.
Outcome ac4() {
  std::string detail;
  bool ok = true;
  for (const auto& [num, den] : {std::pair{1, 10}, std::pair{1, 1}, std::pair{5, 1}}) {
    const Bound x = q(num, den);
    const Bound v = recurrence_value(x, 10'000'000);
    const Bound lim = recurrence_limit(x);
    const Bound rel = (v - lim) / lim;
    const double gap = std::max(std::abs(rel.lo().to_double(Rounding::down)), std::abs(rel.hi().to_double(Rounding::up)));
    const bool within = gap <= 1e-6;
    ok = ok && within;
    detail += "x=" + fmt("%g", static_cast<double>(num) / den) + " gap " + fmt("%.4e", gap) +
              (within ? "" : " > 1e-6") + "; ";
  }
  int below = 0;
  for (int i = 0; i < 1000; ++i) {
    const Bound x = q(i, 999) * q(10);
    const Bound t = flow_threshold({x, NormKind::relatively_bounded});
    if (!certainly_le(recurrence_limit(x), t)) ++below;
  }
  ok = ok && below == 0;
  detail += std::to_string(below) + " of 1000 samples with threshold not above the limit";
  return {ok, detail};
}

// Connected sums against brute-force Tor.
Outcome ac5() {
  std::vector<std::vector<int>> sets;
  sets.push_back({});
  for (int a = 1; a <= 8; ++a) {
    sets.push_back({a});
    for (int b = a; b <= 8; ++b) {
      sets.push_back({a, b});
      for (int c = b; c <= 8; ++c) sets.push_back({a, b, c});
    }
  }
  long cases = 0, mismatches = 0, width_bad = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const HMModule a = HMModule::make(Grading(static_cast<std::int64_t>(i % 7) - 3, 2), sets[i]);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const HMModule b = HMModule::make(Grading(static_cast<std::int64_t>(j % 5)), sets[j]);
      const HMModule s = connected_sum(a, b);
      const tor_oracle::Result r = tor_oracle::tor(sets[i], sets[j]);
      ++cases;
      if (s.torsion != r.torsion || r.free_summands != 1 || s.tower_bottom != a.tower_bottom + b.tower_bottom) {
        ++mismatches;
      }
      if (torsion_width(s) != std::max(torsion_width(a), torsion_width(b))) ++width_bad;
    }
  }
  return {mismatches == 0 && width_bad == 0,
          std::to_string(cases) + " pairs, " + std::to_string(mismatches) + " Tor mismatches, " +
              std::to_string(width_bad) + " width-max violations"};
}

// Exclusion chain with a synthetic profile giving N = 3.
Outcome ac6() {
  const WeylConstants w = WeylConstants::synthetic(q(0), q(0), q(1, 4), q(0), q(15, 100), "synthetic");
  const ObstructionReport r = build_report("chain", BudgetInput{"1", "0.15", "1"}, w, std::nullopt);
  const bool within = q(3).contains(r.torsion_bound);
  bool exact = r.excluded_brieskorn_from == 9;
  // Brieskorn members with width above 2(2N + 2) are excluded; the first is n = 9.
  for (std::int64_t n = 1; n <= 20; ++n) {
    const bool excluded = r.excluded_brieskorn_from && n >= *r.excluded_brieskorn_from;
    const bool beyond = certainly_lt(r.exclusion_threshold, q(n));
    if (excluded != beyond || brieskorn_width(n).width != 2 * n) exact = false;
  }
  std::string from = r.excluded_brieskorn_from ? std::to_string(*r.excluded_brieskorn_from) : "none";
  return {within && exact, "N = " + r.torsion_bound.to_string(6) + ", threshold " +
                                          r.exclusion_threshold.to_string(6) + ", excluded from n = " + from};
}

// Two census records with injectivity radius above 0.15.
Outcome ac7() {
  std::istringstream in(
      R"({"name": "census-1.39", "volume": 1.39, "inj_radius": 0.18, "lambda1_lower": 0.04})"
      "\n"
      R"({"name": "census-1.91", "volume": 1.91, "inj_radius": 0.24, "lambda1_lower": 0.001})"
      "\n");
  const CensusParse parsed = parse_census(in);
  const WeylConstants w = WeylConstants::eps015();
  const CensusOutcome out = census_report(parsed.records, w, std::nullopt, true);
  if (!parsed.diagnostics.empty() || !out.diagnostics.empty() || out.reports.size() != 2) {
    return {false, "census records did not process cleanly"};
  }
  const ObstructionReport& a = out.reports[0];
  const ObstructionReport& b = out.reports[1];
  // Monotonicity is a statement at eps = 0.15, where both records also lie.
  const auto at015 = [&](const ObstructionReport& r) {
    return n_constant_assembled(make_budget(r.budget.volume, q(15, 100), r.budget.delta, true), w).n;
  };
  const Bound na = at015(a);
  const Bound nb = at015(b);
  bool ok = certainly_lt(na, nb) && a.n_closed && b.n_closed && certainly_lt(*a.n_closed, *b.n_closed);
  // Each record sits between the corners of the majorization grid.
  const Bound low = n_constant_assembled(make_budget(q(94, 100), q(15, 100), q(1)), w).n;
  const Bound high = n_constant_assembled(make_budget(q(65, 10), q(15, 100), q(1, 1000)), w).n;
  for (const Bound* n : {&na, &nb}) ok = ok && certainly_le(low, *n) && certainly_le(*n, high);
  // A larger injectivity radius only shrinks the bound.
  ok = ok && certainly_le(a.n_assembled, na) && certainly_le(b.n_assembled, nb);
  ok = ok && a.assembled_le_closed == true && b.assembled_le_closed == true;
  return {ok, "log10 n at eps 0.15: " + log10_report(na, 8).lower + " < " + log10_report(nb, 8).lower +
                  "; closed form " + log10_report(*a.n_closed, 8).lower + " < " + log10_report(*b.n_closed, 8).lower +
                  "; at each record's own eps " + log10_report(a.n_assembled, 8).lower + ", " +
                  log10_report(b.n_assembled, 8).lower};
}

// Interval soundness fuzz.
Outcome ac8() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8);
  long checked = 0, skipped = 0, outside = 0;
  std::string first;
  while (checked < 100000 && checked + skipped < 1000000) {
    const auto tree = fuzz::generate(rng, 4);
    std::string detail;
    switch (fuzz::check(*tree, &detail)) {
      case fuzz::Verdict::inside: ++checked; break;
      case fuzz::Verdict::skipped: ++skipped; break;
      case fuzz::Verdict::outside:
        ++checked;
        ++outside;
        if (first.empty()) first = detail;
        break;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string detail = std::to_string(checked) + " trees checked, " + std::to_string(skipped) + " skipped, " +
                       std::to_string(outside) + " outside, " + fmt("%.1f", secs) + " s";
  if (!first.empty()) detail += "; first: " + first;
  return {outside == 0 && checked >= 100000 && secs < 120.0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  std::string archive = "ac3_failures.jsonl";
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--archive", archive, "where failing campaign records go");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria{
      ac1, ac2, [&] { return ac3(archive); }, ac4, ac5, ac6, ac7, ac8};
  std::set<int> failed;
  for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), i) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(i - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(i);
    const bool expected = std::find(expect_fail.begin(), expect_fail.end(), i) != expect_fail.end();
    std::cout << "AC" << i << ' ' << (o.pass ? "PASS" : "FAIL") << (expected && !o.pass ? " (expected)" : "")
              << ": " << o.detail << std::endl;
  }
  std::set<int> expected;
  for (int i : expect_fail) {
    if (only.empty() || std::find(only.begin(), only.end(), i) != only.end()) expected.insert(i);
  }
  if (failed != expected) {
    for (int i : expected) {
      if (!failed.count(i)) std::cout << "AC" << i << " passed but was expected to fail" << std::endl;
    }
    return 1;
  }
  return 0;
}
