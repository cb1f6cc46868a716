#pragma once

// Dimensioned scalars checked at run time.
//
// The base dimensions are mass, length, time, temperature and electric
// charge. Charge (rather than current) is a base so that Coulomb's constant
// has the simple dimension kg m^3 s^-2 C^-2. Exponents may be half-integers,
// which is what the square root of M*kappa*T (a momentum) needs; anything
// finer than a half is rejected.

#include <array>
#include <string>

#include "decohere/error.hpp"

namespace decohere {

class Dimension {
 public:
  enum Base : int { kMass = 0, kLength, kTime, kTemperature, kCharge, kBaseCount };

  constexpr Dimension() = default;

  // Exponents given as integers.
  constexpr Dimension(int mass, int length, int time, int temperature, int charge)
      : halves_{2 * mass, 2 * length, 2 * time, 2 * temperature, 2 * charge} {}

  static constexpr Dimension from_halves(std::array<int, kBaseCount> halves) {
    Dimension d;
    d.halves_ = halves;
    return d;
  }

  // Twice the exponent of `base`.
  constexpr int halves(Base base) const { return halves_[base]; }
  constexpr double exponent(Base base) const { return halves_[base] / 2.0; }

  constexpr bool dimensionless() const {
    for (int h : halves_) {
      if (h != 0) return false;
    }
    return true;
  }

  constexpr Dimension operator*(const Dimension& o) const {
    Dimension r;
    for (int i = 0; i < kBaseCount; ++i) r.halves_[i] = halves_[i] + o.halves_[i];
    return r;
  }

  constexpr Dimension operator/(const Dimension& o) const {
    Dimension r;
    for (int i = 0; i < kBaseCount; ++i) r.halves_[i] = halves_[i] - o.halves_[i];
    return r;
  }

  constexpr bool operator==(const Dimension&) const = default;

  // Raise to the rational power num/den. Throws DimensionError when an
  // exponent would not be a multiple of 1/2.
  Dimension pow(int num, int den = 1) const;
  Dimension sqrt() const { return pow(1, 2); }

  // e.g. "kg m^2 s^-2"; "1" when dimensionless.
  std::string to_string() const;

 private:
  std::array<int, kBaseCount> halves_{};
};

namespace dim {
inline constexpr Dimension kDimensionless{};
inline constexpr Dimension kMass{1, 0, 0, 0, 0};
inline constexpr Dimension kLength{0, 1, 0, 0, 0};
inline constexpr Dimension kTime{0, 0, 1, 0, 0};
inline constexpr Dimension kTemperature{0, 0, 0, 1, 0};
inline constexpr Dimension kCharge{0, 0, 0, 0, 1};
inline constexpr Dimension kRate = kDimensionless / kTime;
inline constexpr Dimension kEnergy{1, 2, -2, 0, 0};
inline constexpr Dimension kAction = kEnergy * kTime;
inline constexpr Dimension kMomentum{1, 1, -1, 0, 0};
inline constexpr Dimension kDipoleMoment = kCharge * kLength;
inline constexpr Dimension kBoltzmann = kEnergy / kTemperature;
inline constexpr Dimension kCoulombConstant{1, 3, -2, 0, -2};
}  // namespace dim

// A finite real value tagged with its dimension. Arithmetic propagates the
// dimension; addition and comparison require equal dimensions.
class Quantity {
 public:
  // Throws NonFiniteError if value is NaN or infinite.
  Quantity(double value, Dimension dim);

  double value() const { return value_; }
  const Dimension& dim() const { return dim_; }

  // The raw value, after checking that the dimension is `expected`.
  double in(const Dimension& expected) const;

  Quantity operator-() const { return Quantity(-value_, dim_); }

  friend Quantity operator+(const Quantity& a, const Quantity& b);
  friend Quantity operator-(const Quantity& a, const Quantity& b);
  friend Quantity operator*(const Quantity& a, const Quantity& b);
  friend Quantity operator/(const Quantity& a, const Quantity& b);
  friend Quantity operator*(double a, const Quantity& b);
  friend Quantity operator*(const Quantity& a, double b);
  friend Quantity operator/(const Quantity& a, double b);

  // Comparisons throw DimensionError on mismatched dimensions.
  friend bool operator<(const Quantity& a, const Quantity& b);
  friend bool operator>(const Quantity& a, const Quantity& b);
  friend bool operator<=(const Quantity& a, const Quantity& b);
  friend bool operator>=(const Quantity& a, const Quantity& b);
  friend bool operator==(const Quantity& a, const Quantity& b);

 private:
  double value_;
  Dimension dim_;
};

inline Quantity qty(double value, Dimension dim) { return Quantity(value, dim); }

// Throws DomainError on a negative value.
Quantity sqrt(const Quantity& q);
Quantity pow(const Quantity& q, int num, int den = 1);
Quantity abs(const Quantity& q);

// Relative difference |a-b|/max(|a|,|b|); 0 when both are zero.
double relative_difference(const Quantity& a, const Quantity& b);

inline Quantity seconds(double v) { return Quantity(v, dim::kTime); }
inline Quantity meters(double v) { return Quantity(v, dim::kLength); }
inline Quantity kilograms(double v) { return Quantity(v, dim::kMass); }
inline Quantity kelvin(double v) { return Quantity(v, dim::kTemperature); }
inline Quantity coulombs(double v) { return Quantity(v, dim::kCharge); }
inline Quantity joules(double v) { return Quantity(v, dim::kEnergy); }
inline Quantity coulomb_meters(double v) { return Quantity(v, dim::kDipoleMoment); }
inline Quantity dimensionless(double v) { return Quantity(v, dim::kDimensionless); }

// Physical constants as used throughout: the 1990s-era Planck constant and
// rounded values for K, kappa, e and the proton mass. hbar is derived from h
// rather than taken from a modern table.
struct Constants {
  Quantity h;
  Quantity hbar;
  Quantity kappa;
  Quantity coulomb_k;
  Quantity elementary_charge;
  Quantity proton_mass;
};

const Constants& constants();

// lambda = hbar / sqrt(M kappa T). Throws DomainError unless M, T > 0.
Quantity thermal_wavelength(const Quantity& mass, const Quantity& temperature);

}  // namespace decohere
