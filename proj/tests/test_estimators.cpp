#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "decohere/estimators.hpp"
#include "decohere/scenarios.hpp"
#include "decohere/validation.hpp"

using namespace decohere;

namespace {

const ScenarioParams& ion() { return *find_builtin("tegmark-mt-ion")->params(); }
const ScenarioParams& dipole() { return *find_builtin("hht-mt-dipole")->params(); }

double tau_of(const TauEstimate& e) { return e.tau.in(dim::kTime); }

}  // namespace

TEST_CASE("orch-OR uncertainty relation") {
  CHECK(orch_or_energy(seconds(0.5)).value() == doctest::Approx(2.109145338250204e-34).epsilon(1e-12));
  CHECK(orch_or_energy(seconds(0.025)).value() == doctest::Approx(4.218290676500408e-33).epsilon(1e-12));
  CHECK(orch_or_energy(seconds(0.5)).dim() == dim::kEnergy);
  for (double t : {1e-9, 0.025, 0.5, 3e4}) {
    CHECK(orch_or_time(orch_or_energy(seconds(t))).value() == doctest::Approx(t).epsilon(1e-14));
  }
  CHECK_THROWS_AS(orch_or_energy(seconds(0.0)), DomainError);
  CHECK_THROWS_AS(orch_or_time(joules(-1.0)), DomainError);
  CHECK_THROWS_AS(orch_or_energy(meters(1.0)), DimensionError);
}

TEST_CASE("ion narrow estimate") {
  const TauEstimate e = tau_ion_narrow(ion());
  CHECK(tau_of(e) == doctest::Approx(2.8304356113503094e-14).epsilon(1e-12));
  CHECK(e.method == Method::kEq3IonNarrow);
  CHECK(to_string(e.method) == "EQ3_ION_NARROW");
  CHECK(e.regime == Regime::kNarrow);
  CHECK((e.lambda_rate * e.tau).value() == doctest::Approx(1.0).epsilon(1e-12));

  ScenarioParams sc = ion();
  sc.s = 2.0 * sc.s;
  CHECK(tau_of(tau_ion_narrow(sc)) == doctest::Approx(tau_of(e) / 2).epsilon(1e-13));
  sc = ion();
  sc.R = 2.0 * sc.R;
  CHECK(tau_of(tau_ion_narrow(sc)) == doctest::Approx(tau_of(e) * 8).epsilon(1e-13));
}

TEST_CASE("ion narrow estimate with explicit width") {
  const Quantity lambda = ion().lambda();
  const TauEstimate e = tau_ion_narrow_lambda(ion(), lambda);
  CHECK(e.method == Method::kEq15IonNarrowLambda);
  CHECK(relative_difference(e.tau, tau_ion_narrow(ion()).tau) < 1e-12);
  CHECK(tau_of(tau_ion_narrow_lambda(ion(), meters(9.32e-12))) == doctest::Approx(2.83e-14).epsilon(2e-3));
  CHECK(tau_of(tau_ion_narrow_lambda(ion(), 2.0 * lambda)) == doctest::Approx(tau_of(e) / 2).epsilon(1e-13));
  CHECK_THROWS_AS(tau_ion_narrow_lambda(ion(), meters(0.0)), DomainError);
}

TEST_CASE("ion broad estimate") {
  CHECK(tau_of(tau_ion_broad(ion())) == doctest::Approx(1.6546619367203014e-24).epsilon(1e-12));
  CHECK(tau_ion_broad(ion()).regime == Regime::kNarrow);
  const TauEstimate cold = tau_ion_broad(ion().with_temperature(kelvin(1e-6)));
  CHECK(tau_of(cold) == doctest::Approx(5.112905384465732e-16).epsilon(1e-12));
  CHECK(cold.regime == Regime::kIntermediate);
  CHECK(tau_of(tau_ion_broad(ion().with_temperature(kelvin(3090.0)))) ==
        doctest::Approx(tau_of(tau_ion_broad(ion())) / 10).epsilon(1e-13));
}

TEST_CASE("dipole estimates") {
  const TauEstimate narrow = tau_dipole_narrow(dipole());
  CHECK(tau_of(narrow) == doctest::Approx(3.622957582528396e-11).epsilon(1e-12));
  CHECK(to_string(narrow.method) == "EQ21_DIPOLE_NARROW");
  CHECK(tau_of(tau_dipole_broad(dipole())) == doctest::Approx(8.219989168731401e-25).epsilon(1e-12));
  CHECK(to_string(tau_dipole_broad(dipole()).method) == "EQ22_DIPOLE_BROAD");

  ScenarioParams doubled = dipole();
  doubled.p = 2.0 * doubled.p;
  CHECK(tau_of(tau_dipole_narrow(doubled)) == doctest::Approx(tau_of(narrow) / 2).epsilon(1e-13));

  CHECK(tau_of(tau_dipole_broad(dipole().with_temperature(kelvin(4 * 309.0)))) ==
        doctest::Approx(tau_of(tau_dipole_broad(dipole())) / 8).epsilon(1e-13));

  ScenarioParams tilted = dipole();
  tilted.alpha = std::numbers::pi / 3;
  CHECK(tau_of(tau_dipole_narrow(tilted)) == doctest::Approx(2 * tau_of(narrow)).epsilon(1e-12));
  tilted.alpha = std::numbers::pi / 2;
  CHECK_THROWS_AS(tau_dipole_narrow(tilted), SingularityError);
  CHECK_THROWS_AS(tau_dipole_broad(tilted), SingularityError);
}

TEST_CASE("scenario validation and applicability") {
  ScenarioParams sc = ion();
  sc.T = kelvin(0.0);
  CHECK_THROWS_AS(sc.validate(), DomainError);
  sc = ion();
  sc.N = 0;
  CHECK_THROWS_AS(sc.validate(), DomainError);
  CHECK_THROWS_AS(tau_dipole_narrow(ion()), DomainError);
  CHECK_THROWS_AS(tau_ion_narrow(dipole()), DomainError);
  sc = ion();
  sc.R = seconds(1.0);
  CHECK_THROWS_AS(sc.validate(), DimensionError);

  const auto ion_estimates = applicable_estimates(ion(), "x");
  REQUIRE(ion_estimates.size() == 3);
  CHECK(ion_estimates[2].method == Method::kEq18IonBroad);
  CHECK(ion_estimates[0].scenario_id == "x");
  CHECK(applicable_estimates(dipole()).size() == 2);

  ScenarioParams both = ion();
  both.p = coulomb_meters(1e-27);
  CHECK(applicable_estimates(both).size() == 5);
  CHECK_THROWS_AS(make_estimate(seconds(0.0), Method::kEq3IonNarrow, Regime::kNarrow), DomainError);
}

TEST_CASE("property: identities over random scenarios") {
  std::mt19937_64 rng(314);
  for (int i = 0; i < 1000; ++i) {
    const ScenarioParams sc = random_scenario(rng);
    CHECK(relative_difference(tau_ion_narrow_lambda(sc, sc.lambda()).tau, tau_ion_narrow(sc).tau) < 1e-12);
    ScenarioParams at_lambda = sc;
    at_lambda.R = sc.lambda();
    CHECK(relative_difference(tau_dipole_narrow(at_lambda).tau, tau_dipole_broad(sc).tau) < 1e-12);
    for (const TauEstimate& e : applicable_estimates(sc)) {
      CHECK(e.tau.dim() == dim::kTime);
      CHECK((e.lambda_rate * e.tau).value() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: power laws in every parameter") {
  std::mt19937_64 rng(2718);
  const double k = 1.7;
  for (int i = 0; i < 200; ++i) {
    const ScenarioParams sc = random_scenario(rng);
    const double n0 = tau_of(tau_ion_narrow(sc));
    const double b0 = tau_of(tau_ion_broad(sc));
    const double dn0 = tau_of(tau_dipole_narrow(sc));
    const double db0 = tau_of(tau_dipole_broad(sc));

    const ScenarioParams hot = sc.with_temperature(k * sc.T);
    CHECK(tau_of(tau_ion_narrow(hot)) == doctest::Approx(n0 * std::sqrt(k)).epsilon(1e-12));
    CHECK(tau_of(tau_ion_broad(hot)) == doctest::Approx(b0 / k).epsilon(1e-12));
    CHECK(tau_of(tau_dipole_narrow(hot)) == doctest::Approx(dn0 * std::sqrt(k)).epsilon(1e-12));
    CHECK(tau_of(tau_dipole_broad(hot)) == doctest::Approx(db0 / std::pow(k, 1.5)).epsilon(1e-12));

    ScenarioParams far = sc;
    far.R = k * sc.R;
    CHECK(tau_of(tau_ion_narrow(far)) == doctest::Approx(n0 * k * k * k).epsilon(1e-12));
    CHECK(tau_of(tau_ion_broad(far)) == doctest::Approx(b0).epsilon(1e-12));
    CHECK(tau_of(tau_dipole_narrow(far)) == doctest::Approx(dn0 * k * k * k * k).epsilon(1e-12));

    ScenarioParams heavy = sc;
    heavy.M = k * sc.M;
    CHECK(tau_of(tau_ion_broad(heavy)) == doctest::Approx(b0 / k).epsilon(1e-12));
    CHECK(tau_of(tau_dipole_broad(heavy)) == doctest::Approx(db0 / std::pow(k, 1.5)).epsilon(1e-12));

    ScenarioParams charged = sc;
    charged.N = 2 * sc.N;
    CHECK(tau_of(tau_ion_narrow(charged)) == doctest::Approx(n0 / 2).epsilon(1e-12));
    CHECK(tau_of(tau_ion_broad(charged)) == doctest::Approx(b0 / 2).epsilon(1e-12));
  }
}
