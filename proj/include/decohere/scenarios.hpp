#pragma once

// Built-in parameter sets and the comparison of published decoherence
// timescales with the values the closed forms (and optionally the oracle)
// give for them.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "decohere/estimators.hpp"
#include "decohere/quantities.hpp"

namespace decohere {

// A coherence time taken as given; only the uncertainty-relation energy is
// derived from it.
struct CoherenceTimeReference {
  Quantity t;
};

struct Scenario {
  std::string id;
  std::variant<ScenarioParams, CoherenceTimeReference> body;
  std::string description;
  std::vector<std::string> sources;

  const ScenarioParams* params() const { return std::get_if<ScenarioParams>(&body); }
};

std::vector<Scenario> builtin_scenarios();
// nullptr if no built-in scenario has this id.
const Scenario* find_builtin(std::string_view id);

struct ReferenceValue {
  std::string label;
  Quantity tau;                      // lower end when a range was quoted
  std::optional<Quantity> tau_high;  // upper end of a quoted range
  std::string source;

  // |log10(value / reference)| <= 1, against the nearer end of a range.
  bool within_order_of_magnitude(const Quantity& value) const;
  // Signed log10 distance to the nearer end of the range; 0 inside it.
  double log10_deviation(const Quantity& value) const;
};

std::vector<ReferenceValue> reference_values();

enum class RowStatus {
  kAgrees,          // some computed value within one order of magnitude
  kNotReproduced,   // computed values exist, none within one order
  kNotDerivable,    // no formula here reproduces the published number
};

std::string_view to_string(RowStatus status);

struct ComputedCell {
  TauEstimate estimate;
  std::optional<double> log10_deviation;  // against the row's reference value
  bool within_order = false;
};

struct ReportRow {
  std::string label;
  std::optional<ReferenceValue> paper_value;
  std::string scenario_id;
  std::vector<ComputedCell> computed;
  RowStatus status = RowStatus::kNotDerivable;
  std::vector<std::string> notes;
};

struct ComparisonReport {
  std::vector<ReportRow> rows;
  std::optional<std::string> generated_at;  // unset keeps the output reproducible
  Constants constants_used;
};

ComparisonReport table1_report(bool with_oracle, std::optional<std::string> generated_at = std::nullopt);

}  // namespace decohere
