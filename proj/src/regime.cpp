#include "decohere/regime.hpp"

namespace decohere {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kNarrow: return "NARROW";
    case Regime::kIntermediate: return "INTERMEDIATE";
    case Regime::kBroad: return "BROAD";
  }
  return "?";
}

Regime classify_ratio(double lambda_over_d) {
  if (!(lambda_over_d > 0.0)) throw DomainError("wavelength ratio must be positive");
  if (lambda_over_d <= kNarrowRatioMax) return Regime::kNarrow;
  if (lambda_over_d >= kBroadRatioMin) return Regime::kBroad;
  return Regime::kIntermediate;
}

Regime classify_regime(const Quantity& lambda, const Quantity& d) {
  if (lambda.in(dim::kLength) <= 0.0 || d.in(dim::kLength) <= 0.0) {
    throw DomainError("regime classification needs positive lengths");
  }
  return classify_ratio(lambda.value() / d.value());
}

Quantity crossover_temperature(const Quantity& mass, const Quantity& d) {
  if (mass.in(dim::kMass) <= 0.0) throw DomainError("crossover temperature needs a positive mass");
  if (d.in(dim::kLength) <= 0.0) throw DomainError("crossover temperature needs a positive distance");
  const Constants& c = constants();
  return c.hbar * c.hbar / (mass * c.kappa * d * d);
}

}  // namespace decohere
