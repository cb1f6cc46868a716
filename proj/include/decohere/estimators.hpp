#pragma once

// Closed-form decoherence timescales.
//
// Two interactions (charge ring - ion Coulomb, tubulin dipole - ion) in two
// regimes of the ion's thermal wavepacket: narrow (lambda << d, tau grows
// like sqrt(T)) and broad (lambda >> d, kappa*T ends up in the denominator).
// The ring/dipole geometry is written with R (interaction distance) and s
// (superposition separation); the coordinate derivation calls the same
// lengths d and x1.

#include <string>
#include <string_view>
#include <vector>

#include "decohere/interactions.hpp"
#include "decohere/quantities.hpp"
#include "decohere/regime.hpp"

namespace decohere {

enum class Method {
  kEq3IonNarrow,
  kEq15IonNarrowLambda,
  kEq18IonBroad,
  kEq21DipoleNarrow,
  kEq22DipoleBroad,
  kOracleQuadrature,
};

// Stable labels, e.g. "EQ3_ION_NARROW".
std::string_view to_string(Method method);

struct TauEstimate {
  Quantity tau;
  Quantity lambda_rate;  // 1/tau
  Method method;
  Regime regime;
  std::string scenario_id;
};

// Validates tau > 0 and fills the rate.
TauEstimate make_estimate(const Quantity& tau, Method method, Regime regime, std::string scenario_id = {});

struct ScenarioParams {
  Quantity R = meters(1.0);
  Quantity s = meters(1.0);
  Quantity M = kilograms(1.0);
  Quantity T = kelvin(1.0);
  int N = 0;  // elementary charges in the ring; 0 = no Coulomb interaction
  Quantity p = coulomb_meters(0.0);  // 0 = no dipole interaction
  double alpha = 0.0;
  Quantity y1 = meters(0.0);

  bool has_ion() const { return N >= 1; }
  bool has_dipole() const { return p.value() > 0.0; }

  // Throws DomainError on non-positive lengths/M/T, negative N or p, or a
  // scenario with neither interaction.
  void validate() const;

  Quantity lambda() const { return thermal_wavelength(M, T); }
  Regime regime() const { return classify_regime(lambda(), R); }
  ScenarioParams with_temperature(const Quantity& temperature) const;

  // Ring of N elementary charges against a singly charged ion.
  CoulombSystem coulomb_system() const;
  DipoleSystem dipole_system() const;
};

// E = hbar / t and its inverse.
Quantity orch_or_energy(const Quantity& t);
Quantity orch_or_time(const Quantity& energy);

// tau = R^3 sqrt(M kappa T) / (K N e^2 s)
TauEstimate tau_ion_narrow(const ScenarioParams& sc);
// tau = hbar d^3 / (x1 lambda K q1 q2) for an explicit wavepacket width.
TauEstimate tau_ion_narrow_lambda(const ScenarioParams& sc, const Quantity& lambda);
// tau = hbar^3 / (K q1 q2 x1 M kappa T). Order of magnitude only: it is the
// threshold time at which the phase integral cancels, keeping the dominant
// lambda^2/x1 term.
TauEstimate tau_ion_broad(const ScenarioParams& sc);
// tau = d^4 sqrt(M kappa T) sec(alpha) / (3 K q p s)
TauEstimate tau_dipole_narrow(const ScenarioParams& sc);
// tau = hbar^4 (M kappa T)^(-3/2) sec(alpha) / (3 K q p s)
TauEstimate tau_dipole_broad(const ScenarioParams& sc);

// Every closed form that applies to the scenario, in Method order.
std::vector<TauEstimate> applicable_estimates(const ScenarioParams& sc, std::string_view scenario_id = {});

}  // namespace decohere
