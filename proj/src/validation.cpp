#include "decohere/validation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "decohere/evolution.hpp"
#include "decohere/scenarios.hpp"

namespace decohere {

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

CheckResult bounded(std::string name, double measured, double tolerance, std::string detail = {}) {
  return CheckResult{std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

const ScenarioParams& catalog_params(std::string_view id) { return *find_builtin(id)->params(); }

}  // namespace

ScenarioParams random_scenario(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-1.4, 1.4);
  ScenarioParams sc;
  sc.R = meters(log_uniform(rng, 1e-10, 1e-6));
  sc.s = meters(log_uniform(rng, 1e-11, 1e-6));
  sc.M = kilograms(log_uniform(rng, 1e-27, 1e-24));
  sc.T = kelvin(log_uniform(rng, 1e-7, 1e4));
  sc.N = static_cast<int>(std::lround(log_uniform(rng, 1.0, 1e4)));
  sc.p = coulomb_meters(log_uniform(rng, 1e-30, 1e-25));
  sc.alpha = angle(rng);
  return sc;
}

std::vector<CheckResult> identity_checks(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst_ion = 0.0;
  double worst_dipole = 0.0;
  for (int i = 0; i < samples; ++i) {
    const ScenarioParams sc = random_scenario(rng);
    const Quantity lambda = sc.lambda();
    worst_ion = std::max(worst_ion, relative_difference(tau_ion_narrow_lambda(sc, lambda).tau, tau_ion_narrow(sc).tau));

    ScenarioParams at_lambda = sc;
    at_lambda.R = lambda;
    worst_dipole =
        std::max(worst_dipole, relative_difference(tau_dipole_narrow(at_lambda).tau, tau_dipole_broad(sc).tau));
  }
  return {
      bounded("identity: explicit-width ion tau at thermal lambda == thermal ion tau", worst_ion, 1e-12,
              fmt::format("{} random scenarios", samples)),
      bounded("identity: narrow dipole tau with d -> lambda == broad dipole tau", worst_dipole, 1e-12,
              fmt::format("{} random scenarios", samples)),
  };
}

std::vector<CheckResult> dimension_checks() {
  int total = 0;
  int wrong = 0;
  std::mt19937_64 rng(7);
  std::vector<ScenarioParams> pool;
  for (const Scenario& s : builtin_scenarios()) {
    if (const ScenarioParams* p = s.params()) pool.push_back(*p);
  }
  for (int i = 0; i < 50; ++i) pool.push_back(random_scenario(rng));
  for (const ScenarioParams& sc : pool) {
    for (const TauEstimate& e : applicable_estimates(sc)) {
      ++total;
      if (!(e.tau.dim() == dim::kTime) || !(e.lambda_rate.dim() == dim::kRate)) ++wrong;
    }
  }
  bool rejects_mismatch = false;
  try {
    (void)(seconds(1.0) + meters(1.0));
  } catch (const DimensionError&) {
    rejects_mismatch = true;
  }
  return {
      bounded("dimensions: every estimator returns a time", wrong, 0.0, fmt::format("{} estimates checked", total)),
      CheckResult{"dimensions: adding a time to a length is rejected", rejects_mismatch, rejects_mismatch ? 0.0 : 1.0,
                  0.0, {}},
  };
}

std::vector<CheckResult> oracle_checks(const std::vector<double>& ratios, double tolerance) {
  std::vector<CheckResult> out;
  const ScenarioParams& ion = catalog_params("tegmark-mt-ion");
  const ScenarioParams& dipole = catalog_params("hht-mt-dipole");
  for (double r : ratios) {
    // Pick the temperature whose thermal wavelength is r d.
    const ScenarioParams ion_at = ion.with_temperature(crossover_temperature(ion.M, ion.R) / (r * r));
    const Quantity lambda = r * ion.R;
    const double ion_oracle = run_oracle(ion_at, Interaction::kIon, "tegmark-mt-ion", lambda).tau.tau.value();
    const double ion_closed = tau_ion_narrow_lambda(ion_at, lambda).tau.value();
    out.push_back(bounded(fmt::format("oracle vs explicit-width ion tau at lambda/d = {}", r),
                          std::fabs(ion_oracle / ion_closed - 1.0), tolerance,
                          fmt::format("oracle {} s, closed form {} s", ion_oracle, ion_closed)));

    const ScenarioParams dip_at = dipole.with_temperature(crossover_temperature(dipole.M, dipole.R) / (r * r));
    const double dip_oracle = run_oracle(dip_at, Interaction::kDipole, "hht-mt-dipole").tau.tau.value();
    const double dip_closed = tau_dipole_narrow(dip_at).tau.value();
    out.push_back(bounded(fmt::format("oracle vs narrow dipole tau at lambda/d = {}", r),
                          std::fabs(dip_oracle / dip_closed - 1.0), tolerance,
                          fmt::format("oracle {} s, closed form {} s", dip_oracle, dip_closed)));
  }
  return out;
}

std::vector<CheckResult> normalization_checks() {
  std::vector<CheckResult> out;
  const QuadratureConfig cfg;
  double worst_norm = 0.0;
  double worst_offset = 0.0;
  for (const Scenario& s : builtin_scenarios()) {
    const ScenarioParams* sc = s.params();
    if (!sc) continue;
    const EnsembleSpec ens{sc->lambda()};
    for (Interaction inter : {Interaction::kIon, Interaction::kDipole}) {
      if ((inter == Interaction::kIon && !sc->has_ion()) || (inter == Interaction::kDipole && !sc->has_dipole())) {
        continue;
      }
      const EnergyProfile dv = interaction_profile(*sc, inter);
      worst_norm = std::max(worst_norm, std::fabs(coherence_factor(dv, ens, seconds(0.0), cfg) - 1.0));

      const Quantity tau = expected_tau(*sc, inter, ens.lambda);
      const double offset = dv(0.5 * sc->R.value()) * 3.0;
      const EnergyProfile shifted = [&dv, offset](double x) { return dv(x) + offset; };
      for (double f : {0.3, 1.0, 3.0}) {
        const Quantity t = f * tau;
        worst_offset = std::max(worst_offset, std::fabs(coherence_factor(dv, ens, t, cfg) -
                                                        coherence_factor(shifted, ens, t, cfg)));
      }
    }
  }
  out.push_back(bounded("normalization: D(0) = 1", worst_norm, cfg.rel_tol));
  out.push_back(bounded("phase-only invariance: constant dV offset leaves D unchanged", worst_offset, cfg.rel_tol));
  return out;
}

std::vector<CheckResult> run_validation(int samples, std::uint64_t seed) {
  std::vector<CheckResult> all = identity_checks(samples, seed);
  auto append = [&all](std::vector<CheckResult> part) { all.insert(all.end(), part.begin(), part.end()); };
  append(dimension_checks());
  append(normalization_checks());
  append(oracle_checks({0.02, 0.05}));
  return all;
}

}  // namespace decohere
