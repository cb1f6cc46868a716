#include "decohere/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

namespace decohere {

std::string_view to_string(Interaction interaction) {
  return interaction == Interaction::kIon ? "ion" : "dipole";
}

Interaction parse_interaction(std::string_view text) {
  if (text == "ion") return Interaction::kIon;
  if (text == "dipole") return Interaction::kDipole;
  throw ParseError(fmt::format("unknown interaction '{}' (expected ion or dipole)", text));
}

void EnsembleSpec::validate() const {
  if (lambda.in(dim::kLength) <= 0.0) throw DomainError("ensemble width lambda must be positive");
  if (!(truncation >= 4.0) || !std::isfinite(truncation)) throw DomainError("truncation must be at least 4 standard deviations");
}

void QuadratureConfig::validate() const {
  if (!(max_phase_step > 0.0) || max_phase_step > std::numbers::pi / 2.0) {
    throw DomainError("max phase step must lie in (0, pi/2]");
  }
  if (!(rel_tol > 0.0)) throw DomainError("relative tolerance must be positive");
  if (max_subdivisions < 1) throw DomainError("max subdivisions must be at least 1");
}

namespace {

using Complex = std::complex<double>;

struct Segment {
  double a;
  double b;
  double phase_a;
  double phase_b;
};

class PhaseIntegrator {
 public:
  PhaseIntegrator(const EnergyProfile& delta_v, double lambda, double phase_per_joule)
      : delta_v_(delta_v), inv_two_lambda_(0.5 / lambda), k_(phase_per_joule) {}

  double phase(double x) const { return k_ == 0.0 ? 0.0 : k_ * delta_v_(x); }

  Complex integrand(double x, double phase_x) const {
    const double u = x * inv_two_lambda_;
    return std::exp(-u * u) * Complex(std::cos(phase_x), -std::sin(phase_x));
  }

  // Kronrod estimate and |Kronrod - Gauss| on [a, b]; phase_mid is the phase
  // at the centre, already known to the caller.
  std::pair<Complex, double> kronrod(double a, double b, double phase_mid) const {
    // 7-point Gauss nodes are the even-indexed 15-point Kronrod nodes.
    static const auto& nodes = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
    static const auto& kronrod_w = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
    static const auto& gauss_w = boost::math::quadrature::gauss<double, 7>::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex f0 = integrand(c, phase_mid);
    Complex k = kronrod_w[0] * f0;
    Complex g = gauss_w[0] * f0;
    for (std::size_t j = 1; j < nodes.size(); ++j) {
      const double dx = h * nodes[j];
      const Complex pair = integrand(c + dx, phase(c + dx)) + integrand(c - dx, phase(c - dx));
      k += kronrod_w[j] * pair;
      if (j % 2 == 0) g += gauss_w[j / 2] * pair;
    }
    return {h * k, std::abs(h * (k - g))};
  }

 private:
  const EnergyProfile& delta_v_;
  double inv_two_lambda_;
  double k_;
};

}  // namespace

double coherence_factor(const EnergyProfile& delta_v, const EnsembleSpec& ens, const Quantity& t,
                        const QuadratureConfig& cfg) {
  ens.validate();
  cfg.validate();
  if (t.in(dim::kTime) < 0.0) throw DomainError("coherence factor needs t >= 0");

  const double lambda = ens.lambda.value();
  const double sigma = ens.sigma_m();
  const double half_width = ens.truncation * sigma;
  const PhaseIntegrator integrator(delta_v, lambda, t.value() / constants().hbar.value());

  const double norm = 2.0 * lambda * std::sqrt(std::numbers::pi) * std::erf(half_width / (2.0 * lambda));
  const double budget_per_metre = cfg.rel_tol * norm / (2.0 * half_width);
  const double min_width = 1e-12 * half_width;

  // Start from pieces of width sigma/2 so that the weight itself is resolved.
  const int initial = static_cast<int>(std::ceil(4.0 * ens.truncation));
  const double step = 2.0 * half_width / initial;
  std::vector<Segment> stack;
  stack.reserve(256);
  for (int i = initial - 1; i >= 0; --i) {
    const double a = -half_width + i * step;
    const double b = (i + 1 == initial) ? half_width : a + step;
    stack.push_back({a, b, integrator.phase(a), integrator.phase(b)});
  }

  Complex total{0.0, 0.0};
  std::size_t leaves = 0;
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (seg.a + seg.b);
    const double phase_mid = integrator.phase(mid);
    const double width = seg.b - seg.a;
    const bool phase_resolved =
        std::max(std::fabs(phase_mid - seg.phase_a), std::fabs(seg.phase_b - phase_mid)) <= cfg.max_phase_step;

    double err = 0.0;
    if (phase_resolved || width < min_width) {
      const auto [value, error] = integrator.kronrod(seg.a, seg.b, phase_mid);
      err = error;
      if (err <= budget_per_metre * width) {
        total += value;
        ++leaves;
        continue;
      }
      if (width < min_width) {
        throw ConvergenceError(
            fmt::format("subinterval [{:.6e}, {:.6e}] m cannot be refined further (error {:.3e})", seg.a, seg.b, err),
            seg.a, seg.b, err);
      }
    }
    if (leaves + stack.size() + 2 > cfg.max_subdivisions) {
      throw ConvergenceError(
          fmt::format("exceeded {} subintervals at t = {:.6e} s; worst [{:.6e}, {:.6e}] m", cfg.max_subdivisions,
                      t.value(), seg.a, seg.b),
          seg.a, seg.b, err);
    }
    stack.push_back({mid, seg.b, phase_mid, seg.phase_b});
    stack.push_back({seg.a, mid, seg.phase_a, phase_mid});
  }
  return std::abs(total) / norm;
}

DecayCurve decay_curve(const EnergyProfile& delta_v, const EnsembleSpec& ens, std::span<const double> times_s,
                       const QuadratureConfig& cfg) {
  if (times_s.empty()) throw DomainError("time grid is empty");
  if (times_s.front() != 0.0) throw DomainError("time grid must start at t = 0");
  for (std::size_t i = 1; i < times_s.size(); ++i) {
    if (!(times_s[i] > times_s[i - 1])) throw DomainError("time grid must be strictly increasing");
  }
  DecayCurve curve;
  curve.times_s.assign(times_s.begin(), times_s.end());
  curve.values.reserve(times_s.size());
  for (double t : times_s) curve.values.push_back(coherence_factor(delta_v, ens, seconds(t), cfg));
  return curve;
}

std::vector<double> default_time_grid(const Quantity& tau_estimate, int points) {
  if (tau_estimate.in(dim::kTime) <= 0.0) throw DomainError("time grid needs a positive centre");
  if (points < 2) throw DomainError("time grid needs at least two points");
  const double lo = 0.01 * tau_estimate.value();
  const double ratio = std::pow(1e4, 1.0 / (points - 1));
  std::vector<double> grid;
  grid.reserve(points + 1);
  grid.push_back(0.0);
  for (int i = 0; i < points; ++i) grid.push_back(lo * std::pow(ratio, i));
  return grid;
}

TauEstimate extract_tau(const DecayCurve& curve, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw DomainError("threshold must lie in (0, 1)");
  const auto& t = curve.times_s;
  const auto& v = curve.values;
  if (t.size() < 2 || t.size() != v.size()) throw DomainError("decay curve needs at least two samples");
  if (v.front() < threshold) throw DomainError("decay curve starts below the threshold");

  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] >= threshold) continue;
    const double t0 = t[i - 1];
    const double t1 = t[i];
    const double d0 = v[i - 1];
    const double d1 = v[i];
    double crossing = 0.0;
    if (d1 > 0.0 && d0 < 1.0 && t0 > 0.0) {
      // ln(-ln D) is linear in ln t for any stretched exponential
      // exp[-(t/tau)^n], Gaussian and simple exponential included.
      const double y0 = std::log(-std::log(d0));
      const double y1 = std::log(-std::log(d1));
      const double y = std::log(-std::log(threshold));
      crossing = std::exp(std::log(t0) + (y - y0) * (std::log(t1) - std::log(t0)) / (y1 - y0));
    } else if (d1 > 0.0) {
      crossing = t0 + (t1 - t0) * (std::log(threshold) - std::log(d0)) / (std::log(d1) - std::log(d0));
    } else {
      crossing = t0 + (t1 - t0) * (d0 - threshold) / (d0 - d1);
    }
    return make_estimate(seconds(crossing), Method::kOracleQuadrature, curve.regime, curve.scenario_id);
  }
  throw NoCrossingError(fmt::format("decay curve stays above {:.6g} (minimum {:.6g}) up to t = {:.6e} s", threshold,
                                    *std::min_element(v.begin(), v.end()), t.back()));
}

EnergyProfile interaction_profile(const ScenarioParams& sc, Interaction interaction) {
  sc.validate();
  if (interaction == Interaction::kIon) return coulomb_profile(sc.coulomb_system(), ExpansionMode::kExpanded);
  return dipole_profile(sc.dipole_system());
}

Quantity expected_tau(const ScenarioParams& sc, Interaction interaction, const Quantity& lambda) {
  sc.validate();
  if (lambda.in(dim::kLength) <= 0.0) throw DomainError("wavepacket width must be positive");
  const Constants& c = constants();
  if (interaction == Interaction::kIon) {
    const CoulombSystem sys = sc.coulomb_system();
    const Quantity coupling = c.coulomb_k * sys.q1 * sys.q2 * sys.x1;
    const Quantity narrow = c.hbar * pow(sys.d, 3) / (lambda * coupling);
    const Quantity broad = c.hbar * lambda * lambda / coupling;
    return std::max(narrow, broad, [](const Quantity& a, const Quantity& b) { return a < b; });
  }
  const DipoleSystem sys = sc.dipole_system();
  const Quantity coupling = 3.0 * c.coulomb_k * sys.q * sys.p * sys.s / sys.omega_dipole();
  const Quantity narrow = c.hbar * pow(sys.d, 4) / (lambda * coupling);
  const Quantity broad = c.hbar * pow(lambda, 3) / coupling;
  return std::max(narrow, broad, [](const Quantity& a, const Quantity& b) { return a < b; });
}

OracleRun run_oracle(const ScenarioParams& sc, Interaction interaction, std::string_view scenario_id,
                     std::optional<Quantity> lambda, const QuadratureConfig& cfg, int points) {
  sc.validate();
  const Quantity width = lambda.value_or(sc.lambda());
  const EnsembleSpec ens{width};
  const std::vector<double> grid = default_time_grid(expected_tau(sc, interaction, width), points);
  DecayCurve curve = decay_curve(interaction_profile(sc, interaction), ens, grid, cfg);
  curve.scenario_id = std::string(scenario_id);
  curve.interaction = interaction;
  curve.regime = classify_regime(width, sc.R);
  TauEstimate tau = extract_tau(curve);
  return OracleRun{std::move(curve), std::move(tau)};
}

}  // namespace decohere
