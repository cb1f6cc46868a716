#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "decohere/quantities.hpp"

using namespace decohere;

TEST_CASE("dimension algebra") {
  const Quantity rate = qty(3.0, dim::kRate);
  const Quantity product = seconds(2.0) * rate;
  CHECK(product.dim() == dim::kDimensionless);
  CHECK(product.value() == doctest::Approx(6.0));

  const Quantity root = sqrt(qty(9.0, dim::kMass * dim::kMass));
  CHECK(root.dim() == dim::kMass);
  CHECK(root.value() == doctest::Approx(3.0));

  CHECK_THROWS_AS(seconds(1.0) + meters(1.0), DimensionError);
  CHECK_THROWS_AS(seconds(1.0) - meters(1.0), DimensionError);
  CHECK_THROWS_AS((void)(seconds(1.0) < meters(1.0)), DimensionError);
}

TEST_CASE("half-integer exponents are allowed, finer ones rejected") {
  const Dimension momentum_sq = dim::kMass * dim::kBoltzmann * dim::kTemperature;
  CHECK(momentum_sq.sqrt() == dim::kMomentum);
  CHECK(dim::kLength.sqrt().halves(Dimension::kLength) == 1);
  CHECK(dim::kLength.pow(3, 2).exponent(Dimension::kLength) == doctest::Approx(1.5));
  CHECK_THROWS_AS(dim::kLength.pow(1, 4), DimensionError);
  CHECK_THROWS_AS(dim::kLength.pow(1, 0), DimensionError);
  CHECK_THROWS_AS(pow(meters(2.0), 1, 3), DimensionError);
}

TEST_CASE("dimension names") {
  CHECK(dim::kEnergy.to_string() == "kg m^2 s^-2");
  CHECK(dim::kDimensionless.to_string() == "1");
  CHECK(dim::kLength.sqrt().to_string() == "m^1/2");
}

TEST_CASE("non-finite values and domain errors") {
  CHECK_THROWS_AS(seconds(std::numeric_limits<double>::quiet_NaN()), NonFiniteError);
  CHECK_THROWS_AS(meters(std::numeric_limits<double>::infinity()), NonFiniteError);
  CHECK_THROWS_AS(seconds(1.0) / 0.0, NonFiniteError);
  CHECK_THROWS_AS(sqrt(meters(-1.0) * meters(1.0)), DomainError);
  CHECK_THROWS_AS(meters(1.0).in(dim::kTime), DimensionError);
  CHECK(meters(2.5).in(dim::kLength) == 2.5);
}

TEST_CASE("relative difference") {
  CHECK(relative_difference(seconds(0.0), seconds(0.0)) == 0.0);
  CHECK(relative_difference(seconds(1.0), seconds(2.0)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(relative_difference(seconds(1.0), meters(1.0)), DimensionError);
}

TEST_CASE("constants") {
  const Constants& c = constants();
  CHECK(c.hbar.value() == doctest::Approx(1.054572669125102e-34).epsilon(1e-14));
  CHECK(c.hbar.dim() == dim::kAction);
  CHECK(c.kappa.dim() == dim::kBoltzmann);
  CHECK(c.coulomb_k.dim() == dim::kCoulombConstant);
  CHECK((c.coulomb_k * c.elementary_charge * c.elementary_charge / meters(1.0)).dim() == dim::kEnergy);
}

TEST_CASE("thermal wavelength") {
  const Constants& c = constants();
  const Quantity m_ion = 18.0 * c.proton_mass;
  const Quantity lambda = thermal_wavelength(m_ion, kelvin(309.0));
  CHECK(lambda.dim() == dim::kLength);
  CHECK(lambda.value() == doctest::Approx(9.314579219680601e-12).epsilon(1e-12));
  CHECK(thermal_wavelength(c.proton_mass, kelvin(300.0)).value() ==
        doctest::Approx(4.0106808613702276e-11).epsilon(1e-12));
  CHECK(thermal_wavelength(m_ion, kelvin(4 * 309.0)).value() == doctest::Approx(lambda.value() / 2).epsilon(1e-14));

  CHECK_THROWS_AS(thermal_wavelength(kilograms(0.0), kelvin(1.0)), DomainError);
  CHECK_THROWS_AS(thermal_wavelength(kilograms(1e-26), kelvin(-1.0)), DomainError);
  CHECK_THROWS_AS(thermal_wavelength(kelvin(1.0), kilograms(1e-26)), DimensionError);
}

TEST_CASE("property: dimensions add under multiplication and lambda sqrt(M kappa T) = hbar") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_real_distribution<double> logv(-30.0, 30.0);
  const Constants& c = constants();
  for (int i = 0; i < 500; ++i) {
    std::array<int, Dimension::kBaseCount> ha{};
    std::array<int, Dimension::kBaseCount> hb{};
    for (int k = 0; k < Dimension::kBaseCount; ++k) {
      ha[k] = exp(rng);
      hb[k] = exp(rng);
    }
    const Dimension da = Dimension::from_halves(ha);
    const Dimension db = Dimension::from_halves(hb);
    const Quantity a(std::pow(10.0, logv(rng)), da);
    const Quantity b(std::pow(10.0, logv(rng)), db);
    for (int k = 0; k < Dimension::kBaseCount; ++k) {
      const auto base = static_cast<Dimension::Base>(k);
      CHECK((a * b).dim().halves(base) == ha[k] + hb[k]);
      CHECK((a / b).dim().halves(base) == ha[k] - hb[k]);
    }

    const Quantity m = kilograms(std::pow(10.0, -27.0 + 3.0 * (logv(rng) + 30.0) / 60.0));
    const Quantity t = kelvin(std::pow(10.0, -7.0 + 11.0 * (logv(rng) + 30.0) / 60.0));
    const Quantity back = thermal_wavelength(m, t) * sqrt(m * c.kappa * t);
    CHECK(back.dim() == dim::kAction);
    CHECK(relative_difference(back, c.hbar) < 1e-12);
  }
}

TEST_CASE("property: thermal wavelength decreases in M and T") {
  const Quantity m = kilograms(3e-26);
  double prev = std::numeric_limits<double>::infinity();
  for (double t = 1e-7; t < 1e4; t *= 3.7) {
    const double l = thermal_wavelength(m, kelvin(t)).value();
    CHECK(l < prev);
    prev = l;
  }
  prev = std::numeric_limits<double>::infinity();
  for (double mass = 1e-27; mass < 1e-23; mass *= 2.3) {
    const double l = thermal_wavelength(kilograms(mass), kelvin(300.0)).value();
    CHECK(l < prev);
    prev = l;
  }
}
