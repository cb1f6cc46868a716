#pragma once

// Brute-force coherence oracle.
//
// With H = V, each branch of the superposition picks up the phase
// exp(-i V t / hbar), so the off-diagonal element of the macromolecule's
// reduced density matrix, after tracing over an ion with Gaussian position
// density w(x2) = exp[-(x2 / 2 lambda)^2], is proportional to
//
//     I(t) = integral w(x2) exp[-i dV(x2) t / hbar] dx2.
//
// D(t) = |I(t)| / |I(0)| is evaluated numerically with the full x2
// dependence of dV, so it is independent of the d >> x2 and lambda >> d
// approximations behind the closed forms.

#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decohere/estimators.hpp"
#include "decohere/interactions.hpp"
#include "decohere/quantities.hpp"
#include "decohere/regime.hpp"

namespace decohere {

enum class Interaction { kIon, kDipole };

std::string_view to_string(Interaction interaction);
// "ion" | "dipole"; throws ParseError otherwise.
Interaction parse_interaction(std::string_view text);

struct EnsembleSpec {
  Quantity lambda;          // standard deviation of w is lambda * sqrt(2)
  double truncation = 8.0;  // integrate over +-truncation standard deviations

  void validate() const;
  double sigma_m() const { return lambda.value() * std::numbers::sqrt2; }
};

struct QuadratureConfig {
  double max_phase_step = std::numbers::pi / 8.0;  // radians per subinterval
  std::size_t max_subdivisions = 50'000'000;
  double rel_tol = 1e-6;  // absolute error budget on D, relative to I(0)

  void validate() const;
};

struct DecayCurve {
  std::string scenario_id;
  Interaction interaction = Interaction::kIon;
  Regime regime = Regime::kNarrow;
  std::vector<double> times_s;
  std::vector<double> values;
};

// Throws DomainError for t < 0 and ConvergenceError if the error budget is
// not met within max_subdivisions subintervals.
double coherence_factor(const EnergyProfile& delta_v, const EnsembleSpec& ens, const Quantity& t,
                        const QuadratureConfig& cfg = {});

// times_s must be non-empty, strictly increasing and start at 0.
DecayCurve decay_curve(const EnergyProfile& delta_v, const EnsembleSpec& ens, std::span<const double> times_s,
                       const QuadratureConfig& cfg = {});

// 0 followed by `points` samples spaced geometrically over
// [0.01 tau_est, 100 tau_est].
std::vector<double> default_time_grid(const Quantity& tau_estimate, int points = 60);

// First downward crossing of `threshold`, interpolating ln(-ln D) linearly
// in ln t between the bracketing samples (exact for exp[-(t/tau)^n]). Throws NoCrossingError if the curve
// stays above the threshold.
TauEstimate extract_tau(const DecayCurve& curve, double threshold = 1.0 / std::numbers::e);

// The unexpanded-denominator energy difference for the scenario.
EnergyProfile interaction_profile(const ScenarioParams& sc, Interaction interaction);

// Closed-form timescale used to centre the default time grid: the larger of
// the narrow and broad formulas for the given wavepacket width.
Quantity expected_tau(const ScenarioParams& sc, Interaction interaction, const Quantity& lambda);

struct OracleRun {
  DecayCurve curve;
  TauEstimate tau;
};

// Decay curve on the default grid and its extracted tau. lambda defaults to
// the thermal wavelength of the scenario.
OracleRun run_oracle(const ScenarioParams& sc, Interaction interaction, std::string_view scenario_id = {},
                     std::optional<Quantity> lambda = std::nullopt, const QuadratureConfig& cfg = {},
                     int points = 60);

}  // namespace decohere
