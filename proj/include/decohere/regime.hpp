#pragma once

#include <string_view>

#include "decohere/quantities.hpp"

namespace decohere {

// Size of the environmental ion's thermal wavepacket relative to the
// closest-approach distance d.
enum class Regime {
  kNarrow,        // lambda/d <= 0.1
  kIntermediate,  // 0.1 < lambda/d < 10
  kBroad,         // lambda/d >= 10
};

inline constexpr double kNarrowRatioMax = 0.1;
inline constexpr double kBroadRatioMin = 10.0;

std::string_view to_string(Regime regime);

Regime classify_ratio(double lambda_over_d);

// Throws DomainError unless both lengths are positive.
Regime classify_regime(const Quantity& lambda, const Quantity& d);

// T* = hbar^2 / (M kappa d^2), the temperature at which the thermal
// wavelength equals d.
Quantity crossover_temperature(const Quantity& mass, const Quantity& d);

}  // namespace decohere
