#include "decohere/estimators.hpp"

#include <fmt/format.h>

namespace decohere {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kEq3IonNarrow: return "EQ3_ION_NARROW";
    case Method::kEq15IonNarrowLambda: return "EQ15_ION_NARROW_LAMBDA";
    case Method::kEq18IonBroad: return "EQ18_ION_BROAD";
    case Method::kEq21DipoleNarrow: return "EQ21_DIPOLE_NARROW";
    case Method::kEq22DipoleBroad: return "EQ22_DIPOLE_BROAD";
    case Method::kOracleQuadrature: return "ORACLE_QUADRATURE";
  }
  return "?";
}

TauEstimate make_estimate(const Quantity& tau, Method method, Regime regime, std::string scenario_id) {
  if (tau.in(dim::kTime) <= 0.0) {
    throw DomainError(fmt::format("{} produced a non-positive time {}", to_string(method), tau.value()));
  }
  return TauEstimate{tau, dimensionless(1.0) / tau, method, regime, std::move(scenario_id)};
}

void ScenarioParams::validate() const {
  if (R.in(dim::kLength) <= 0.0) throw DomainError("R must be positive");
  if (s.in(dim::kLength) <= 0.0) throw DomainError("s must be positive");
  if (M.in(dim::kMass) <= 0.0) throw DomainError("M must be positive");
  if (T.in(dim::kTemperature) <= 0.0) throw DomainError("T must be positive");
  if (p.in(dim::kDipoleMoment) < 0.0) throw DomainError("p must be non-negative");
  y1.in(dim::kLength);
  if (N < 0) throw DomainError("N must be non-negative");
  if (!has_ion() && !has_dipole()) throw DomainError("scenario has neither a charge ring (N >= 1) nor a dipole (p > 0)");
}

ScenarioParams ScenarioParams::with_temperature(const Quantity& temperature) const {
  ScenarioParams out = *this;
  out.T = temperature;
  return out;
}

CoulombSystem ScenarioParams::coulomb_system() const {
  if (!has_ion()) throw DomainError("scenario has no charge ring (N = 0)");
  const Quantity e = constants().elementary_charge;
  return CoulombSystem{.q1 = static_cast<double>(N) * e, .q2 = e, .d = R, .x1 = s, .y1 = y1, .n_charges = N};
}

DipoleSystem ScenarioParams::dipole_system() const {
  if (!has_dipole()) throw DomainError("scenario has no dipole (p = 0)");
  return DipoleSystem{.p = p, .alpha = alpha, .q = constants().elementary_charge, .d = R, .s = s};
}

Quantity orch_or_energy(const Quantity& t) {
  if (t.in(dim::kTime) <= 0.0) throw DomainError("orch-OR time must be positive");
  return constants().hbar / t;
}

Quantity orch_or_time(const Quantity& energy) {
  if (energy.in(dim::kEnergy) <= 0.0) throw DomainError("orch-OR energy must be positive");
  return constants().hbar / energy;
}

namespace {

const ScenarioParams& checked_ion(const ScenarioParams& sc) {
  sc.validate();
  if (!sc.has_ion()) throw DomainError("ion estimator needs N >= 1");
  return sc;
}

const ScenarioParams& checked_dipole(const ScenarioParams& sc) {
  sc.validate();
  if (!sc.has_dipole()) throw DomainError("dipole estimator needs p > 0");
  return sc;
}

}  // namespace

TauEstimate tau_ion_narrow(const ScenarioParams& sc) {
  checked_ion(sc);
  const Constants& c = constants();
  const Quantity tau = pow(sc.R, 3) * sqrt(sc.M * c.kappa * sc.T) /
                       (c.coulomb_k * static_cast<double>(sc.N) * c.elementary_charge * c.elementary_charge * sc.s);
  return make_estimate(tau, Method::kEq3IonNarrow, sc.regime());
}

TauEstimate tau_ion_narrow_lambda(const ScenarioParams& sc, const Quantity& lambda) {
  checked_ion(sc);
  if (lambda.in(dim::kLength) <= 0.0) throw DomainError("wavepacket width must be positive");
  const Constants& c = constants();
  const CoulombSystem sys = sc.coulomb_system();
  const Quantity tau = c.hbar * pow(sys.d, 3) / (sys.x1 * lambda * c.coulomb_k * sys.q1 * sys.q2);
  return make_estimate(tau, Method::kEq15IonNarrowLambda, classify_regime(lambda, sc.R));
}

TauEstimate tau_ion_broad(const ScenarioParams& sc) {
  checked_ion(sc);
  const Constants& c = constants();
  const CoulombSystem sys = sc.coulomb_system();
  const Quantity tau = pow(c.hbar, 3) / (c.coulomb_k * sys.q1 * sys.q2 * sys.x1 * sc.M * c.kappa * sc.T);
  return make_estimate(tau, Method::kEq18IonBroad, sc.regime());
}

TauEstimate tau_dipole_narrow(const ScenarioParams& sc) {
  checked_dipole(sc);
  const Constants& c = constants();
  const DipoleSystem sys = sc.dipole_system();
  const Quantity tau = pow(sys.d, 4) * sqrt(sc.M * c.kappa * sc.T) * sys.omega_dipole() /
                       (3.0 * c.coulomb_k * sys.q * sys.p * sys.s);
  return make_estimate(tau, Method::kEq21DipoleNarrow, sc.regime());
}

TauEstimate tau_dipole_broad(const ScenarioParams& sc) {
  checked_dipole(sc);
  const Constants& c = constants();
  const DipoleSystem sys = sc.dipole_system();
  const Quantity tau = pow(c.hbar, 4) * pow(sc.M * c.kappa * sc.T, -3, 2) * sys.omega_dipole() /
                       (3.0 * c.coulomb_k * sys.q * sys.p * sys.s);
  return make_estimate(tau, Method::kEq22DipoleBroad, sc.regime());
}

std::vector<TauEstimate> applicable_estimates(const ScenarioParams& sc, std::string_view scenario_id) {
  sc.validate();
  std::vector<TauEstimate> out;
  if (sc.has_ion()) {
    out.push_back(tau_ion_narrow(sc));
    out.push_back(tau_ion_narrow_lambda(sc, sc.lambda()));
    out.push_back(tau_ion_broad(sc));
  }
  if (sc.has_dipole()) {
    out.push_back(tau_dipole_narrow(sc));
    out.push_back(tau_dipole_broad(sc));
  }
  for (TauEstimate& e : out) e.scenario_id = std::string(scenario_id);
  return out;
}

}  // namespace decohere
