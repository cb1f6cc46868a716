#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decohere/estimators.hpp"
#include "decohere/evolution.hpp"
#include "decohere/regime.hpp"

namespace decohere {

struct SweepRow {
  Quantity T;
  Quantity lambda;
  double ratio;  // lambda / d
  Regime regime;
  std::optional<Quantity> tau_narrow;
  std::optional<Quantity> tau_broad;
  std::optional<Quantity> tau_oracle;
  std::string error;  // first failure while filling the row, empty if none
};

struct SweepOptions {
  Quantity t_min = kelvin(1e-7);
  Quantity t_max = kelvin(1e3);
  int points = 100;
  bool log_spacing = true;
  bool with_oracle = false;
  QuadratureConfig quadrature{};

  void validate() const;
};

// One row. Depends on nothing but its arguments. Estimator and oracle
// failures are recorded in SweepRow::error instead of thrown.
SweepRow sweep_row(const ScenarioParams& sc, Interaction interaction, const Quantity& temperature,
                   bool with_oracle, const QuadratureConfig& cfg = {});

// Rows in increasing T. Narrow column: charge ring tau ~ sqrt(T), dipole
// tau ~ sqrt(T); broad column: ~1/T and ~T^(-3/2).
std::vector<SweepRow> temperature_sweep(const ScenarioParams& sc, Interaction interaction, const SweepOptions& opts);

std::vector<Quantity> temperature_grid(const SweepOptions& opts);

}  // namespace decohere
