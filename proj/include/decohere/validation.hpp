#pragma once

// Self-checks behind `decohere validate`: algebraic identities between the
// closed forms, dimensional consistency, and the quadrature oracle against
// the narrow-regime formulas.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "decohere/estimators.hpp"

namespace decohere {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Log-uniform draw over a physically broad box; always has both a charge
// ring and a dipole, with |alpha| < 1.4.
ScenarioParams random_scenario(std::mt19937_64& rng);

// Explicit-width ion formula at the thermal wavelength against the thermal
// ion formula, and the narrow dipole formula with d -> lambda against the
// broad one.
std::vector<CheckResult> identity_checks(int samples, std::uint64_t seed);
std::vector<CheckResult> dimension_checks();
// Oracle tau vs closed form at the given lambda/d ratios, both interactions.
std::vector<CheckResult> oracle_checks(const std::vector<double>& ratios, double tolerance = 0.10);
// D(0) = 1 and invariance under a constant offset of dV.
std::vector<CheckResult> normalization_checks();

std::vector<CheckResult> run_validation(int samples = 1000, std::uint64_t seed = 20021);

}  // namespace decohere
