#include "decohere/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace decohere {

void SweepOptions::validate() const {
  const double lo = t_min.in(dim::kTemperature);
  const double hi = t_max.in(dim::kTemperature);
  if (!(lo > 0.0 && lo < hi)) throw DomainError("sweep needs 0 < Tmin < Tmax");
  if (points < 2) throw DomainError("sweep needs at least two points");
  quadrature.validate();
}

std::vector<Quantity> temperature_grid(const SweepOptions& opts) {
  opts.validate();
  const double lo = opts.t_min.value();
  const double hi = opts.t_max.value();
  std::vector<Quantity> grid;
  grid.reserve(opts.points);
  for (int i = 0; i < opts.points; ++i) {
    const double f = static_cast<double>(i) / (opts.points - 1);
    double value = opts.log_spacing ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
    if (i == opts.points - 1) value = hi;
    grid.push_back(kelvin(value));
  }
  return grid;
}

SweepRow sweep_row(const ScenarioParams& sc, Interaction interaction, const Quantity& temperature, bool with_oracle,
                   const QuadratureConfig& cfg) {
  const ScenarioParams at = sc.with_temperature(temperature);
  at.validate();
  const Quantity lambda = at.lambda();
  SweepRow row{temperature, lambda, lambda.value() / at.R.value(), classify_regime(lambda, at.R), {}, {}, {}, {}};
  auto record = [&row](const std::exception& e) {
    if (row.error.empty()) row.error = e.what();
  };
  try {
    row.tau_narrow = interaction == Interaction::kIon ? tau_ion_narrow(at).tau : tau_dipole_narrow(at).tau;
  } catch (const Error& e) {
    record(e);
  }
  try {
    row.tau_broad = interaction == Interaction::kIon ? tau_ion_broad(at).tau : tau_dipole_broad(at).tau;
  } catch (const Error& e) {
    record(e);
  }
  if (with_oracle) {
    try {
      row.tau_oracle = run_oracle(at, interaction, {}, lambda, cfg).tau.tau;
    } catch (const Error& e) {
      record(e);
    }
  }
  return row;
}

std::vector<SweepRow> temperature_sweep(const ScenarioParams& sc, Interaction interaction, const SweepOptions& opts) {
  sc.validate();
  const std::vector<Quantity> grid = temperature_grid(opts);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  if (!opts.with_oracle) {
    for (const Quantity& T : grid) rows.push_back(sweep_row(sc, interaction, T, false, opts.quadrature));
    return rows;
  }
  // Oracle rows are expensive and independent; evaluate them in batches.
  const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < grid.size(); start += batch) {
    std::vector<std::future<SweepRow>> pending;
    const std::size_t stop = std::min(grid.size(), start + batch);
    for (std::size_t i = start; i < stop; ++i) {
      pending.push_back(std::async(std::launch::async, [&, i] {
        return sweep_row(sc, interaction, grid[i], true, opts.quadrature);
      }));
    }
    for (auto& f : pending) rows.push_back(f.get());
  }
  return rows;
}

}  // namespace decohere
