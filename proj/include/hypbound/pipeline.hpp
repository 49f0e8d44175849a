#pragma once

// End-to-end obstruction constants: from a geometry budget to the bound on
// the torsion width and the first excluded member of the Brieskorn family.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypbound/floer.hpp"
#include "hypbound/geometry.hpp"
#include "hypbound/perturbation.hpp"
#include "hypbound/spectral_density.hpp"

namespace hypbound {

struct AssembledConstant {
  Bound n;               // 2N + 2 = 4 sf + 6, sf the reassembled flow bound
  Bound n_displayed;     // same with the displayed flow bound
  Bound torsion_bound;   // N = 2 sf + 2
  SpectralFlowBound flow;
};

AssembledConstant n_constant_assembled(const GeometryBudget& g, const WeylConstants& w);

/// 4V (200 + exp(11 + 15 e^(11/2) V^(7/12) (cosh(57V) - 1)^(8/3) (1 + 3/delta)^(1/2))) + 6,
/// the closed form for injectivity radius 0.15. Requires V >= 0.94 and
/// 0 < delta <= 1 unless `unchecked`.
Bound n_constant_closed_form(const Bound& V, const Bound& delta, bool unchecked = false);

/// The exponent 11 + 15 e^(11/2) ... of the closed form.
Bound n_closed_form_exponent(const Bound& V, const Bound& delta);

/// (f + sf + 1) / 2 with sf the reassembled flow bound.
Bound m_constant(const GeometryBudget& g, const WeylConstants& w, const Bound& f_bound);

/// Decimal text of each input next to its enclosure, so reports can echo
/// the exact formula instance.
struct BudgetInput {
  std::string volume;
  std::string eps;
  std::string delta;
  std::optional<std::string> diameter;
  bool unchecked = false;
  long precision = default_precision();

  GeometryBudget budget() const;
};

struct ObstructionReport {
  std::string name;
  BudgetInput input;
  GeometryBudget budget;
  std::string profile;
  bool unchecked = false;
  std::vector<std::string> notes;

  Bound diameter;
  Bound sobolev_lower;
  Bound sobolev_rounded;
  Bound embedding_L6;
  Bound c_V_eps;
  Bound hessian_norm;
  Bound flow_threshold;
  Bound sf_displayed;
  Bound sf_reassembled;
  Bound torsion_bound;
  Bound n_assembled;
  Bound n_displayed;
  std::optional<Bound> n_closed;
  std::optional<bool> assembled_le_closed;
  std::optional<Bound> f_bound;
  std::optional<Bound> m;
  Bound exclusion_threshold;
  std::optional<std::int64_t> excluded_brieskorn_from;
};

/// Throws DomainError on guard violations.
ObstructionReport build_report(const std::string& name, const BudgetInput& input, const WeylConstants& w,
                               const std::optional<Bound>& f_bound);

struct CensusRecord {
  std::string name;
  std::string volume;
  std::string inj_radius;
  std::string lambda1_lower;
  int line = 0;
};

struct Diagnostic {
  int line = 0;
  std::string name;
  std::string message;
};

struct CensusParse {
  std::vector<CensusRecord> records;
  std::vector<Diagnostic> diagnostics;
};

/// JSON lines with fields name, volume, inj_radius, lambda1_lower (numbers
/// or decimal strings). Blank lines are skipped; bad lines are reported with
/// their line number and parsing continues.
CensusParse parse_census(std::istream& in);

struct CensusOutcome {
  std::vector<ObstructionReport> reports;
  std::vector<Diagnostic> diagnostics;
};

/// One report per record, in input order. Records with inj > 0.15 or
/// lambda1 > 1 run unchecked with a note; other guard failures become
/// diagnostics.
CensusOutcome census_report(const std::vector<CensusRecord>& records, const WeylConstants& w,
                            const std::optional<Bound>& f_bound, bool unchecked = false);

}  // namespace hypbound
