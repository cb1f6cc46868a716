#include "decohere/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "decohere/evolution.hpp"

namespace decohere {

namespace {

constexpr std::string_view kIonId = "tegmark-mt-ion";
constexpr std::string_view kDipoleId = "hht-mt-dipole";
constexpr std::string_view kOrchOrId = "orch-or-500ms";

// Microtubule-scale geometry shared by the ion and dipole sets: R and s of
// the order of the tubule diameter, a water ion at body temperature.
ScenarioParams microtubule_geometry() {
  const Constants& c = constants();
  return ScenarioParams{
      .R = meters(24e-9),
      .s = meters(24e-9),
      .M = 18.0 * c.proton_mass,
      .T = kelvin(309.0),
  };
}

std::vector<Scenario> make_catalog() {
  ScenarioParams ion = microtubule_geometry();
  ion.N = 1000;

  ScenarioParams dipole = microtubule_geometry();
  dipole.p = coulomb_meters(1e-27);
  dipole.alpha = 0.0;

  std::vector<Scenario> out{
      {std::string(kIonId), ion,
       "Kink charge ring (N = 1000 elementary charges) against a water ion, R = s = 24 nm, T = 309 K",
       {"Tegmark soliton estimate: N = 10^3, R and s of the order of the 24 nm tubule diameter",
        "water ion mass 18 proton masses, T = 309 K"}},
      {std::string(kDipoleId), dipole,
       "Tubulin dipole p = 1e-27 C m along the tubule axis against a singly charged water ion, same geometry",
       {"Hagan-Hameroff-Tuszynski dipole variant with p = 10^-27 C m", "geometric factor sec(alpha) = 1"}},
      {std::string(kOrchOrId), CoherenceTimeReference{seconds(0.5)},
       "Orchestrated-reduction coherence time of 500 ms and its uncertainty-relation energy",
       {"500 ms coherence time from brain response times"}},
  };
  for (const Scenario& s : out) {
    if (const ScenarioParams* p = s.params()) p->validate();
  }
  return out;
}

const std::vector<Scenario>& catalog() {
  static const std::vector<Scenario> c = make_catalog();
  return c;
}

}  // namespace

std::vector<Scenario> builtin_scenarios() { return catalog(); }

const Scenario* find_builtin(std::string_view id) {
  for (const Scenario& s : catalog()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

double ReferenceValue::log10_deviation(const Quantity& value) const {
  const double v = value.in(dim::kTime);
  if (v <= 0.0) throw DomainError("order-of-magnitude comparison needs a positive time");
  const double lo = tau.value();
  const double hi = tau_high ? tau_high->value() : lo;
  if (v < lo) return std::log10(v / lo);
  if (v > hi) return std::log10(v / hi);
  return 0.0;
}

bool ReferenceValue::within_order_of_magnitude(const Quantity& value) const {
  return std::fabs(log10_deviation(value)) <= 1.0;
}

namespace {

namespace label {
constexpr const char* kNeuralFiring = "Superposition of neural firing";
constexpr const char* kSoliton = "Soliton superposition";
constexpr const char* kOrchOr = "Orch. OR superpositions";
constexpr const char* kModelIon = "Decoherence Model (MT - ion interaction)";
constexpr const char* kModelDipole = "Decoherence Model (MT - dipole interaction)";
constexpr const char* kDipoleText = "Dipole estimate quoted in text (MT - dipole)";
constexpr const char* kDropSmall = "Gravitational reduction, water drop 10^-4 cm";
constexpr const char* kDropLarge = "Gravitational reduction, water drop 10^-3 cm";
constexpr const char* kTypicalLarge = "Typical decoherence, radius 10^-3 cm";
constexpr const char* kTypicalSmall = "Typical decoherence, radius 10^-5 cm";
}  // namespace label

ReferenceValue ref(const char* l, double tau, std::optional<double> high, const char* source) {
  return ReferenceValue{l, seconds(tau), high ? std::optional<Quantity>(seconds(*high)) : std::nullopt, source};
}

}  // namespace

std::vector<ReferenceValue> reference_values() {
  return {
      ref(label::kNeuralFiring, 1e-20, std::nullopt, "comparison table: superposition of neural firing, 10^-20 s"),
      ref(label::kSoliton, 1e-13, std::nullopt, "comparison table: soliton superposition, 10^-13 s"),
      ref(label::kOrchOr, 1e-5, 1e-4, "comparison table: orch. OR superpositions, 10^-5 s - 10^-4 s"),
      ref(label::kModelIon, 1e-9, std::nullopt, "comparison table: decoherence model (MT - ion interaction), 10^-9 s"),
      ref(label::kModelDipole, 1e-16, std::nullopt,
          "comparison table: decoherence model (MT - dipole interaction), 10^-16 s"),
      ref(label::kDipoleText, 1e-10, std::nullopt, "text: dipole formula with p = 10^-27 C m gives t = 10^-10 s"),
      ref(label::kDropSmall, 0.1, std::nullopt, "text: gravitational reduction of a 10^-4 cm water drop, 0.1 s"),
      ref(label::kDropLarge, 1e-6, std::nullopt, "text: gravitational reduction of a 10^-3 cm water drop, 10^-6 s"),
      ref(label::kTypicalLarge, 1e-23, std::nullopt, "text: typical decoherence time at radius 10^-3 cm, 10^-23 s"),
      ref(label::kTypicalSmall, 1e-9, std::nullopt, "text: typical decoherence time at radius 10^-5 cm, 10^-9 s"),
  };
}

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::kAgrees: return "agrees-within-order";
    case RowStatus::kNotReproduced: return "not-reproduced";
    case RowStatus::kNotDerivable: return "not-derivable";
  }
  return "?";
}

namespace {

ReferenceValue find_reference(std::string_view l) {
  for (ReferenceValue& r : reference_values()) {
    if (r.label == l) return r;
  }
  throw DomainError(fmt::format("no reference value labelled '{}'", l));
}

// Estimates for one scenario, restricted to `methods`, plus the oracle when
// requested. Oracle failures become notes.
void add_cells(ReportRow& row, const Scenario& sc, std::initializer_list<Method> methods, bool with_oracle,
               std::optional<Interaction> oracle_interaction) {
  const ScenarioParams& params = *sc.params();
  for (const TauEstimate& e : applicable_estimates(params, sc.id)) {
    if (std::find(methods.begin(), methods.end(), e.method) != methods.end()) row.computed.push_back({e, {}, false});
  }
  if (with_oracle && oracle_interaction) {
    try {
      row.computed.push_back({run_oracle(params, *oracle_interaction, sc.id).tau, {}, false});
    } catch (const Error& e) {
      row.notes.push_back(fmt::format("oracle failed ({}): {}", e.kind(), e.what()));
    }
  }
}

void finish_row(ReportRow& row) {
  if (row.computed.empty()) {
    row.status = RowStatus::kNotDerivable;
    row.notes.emplace_back("not derivable from stated formulas");
    return;
  }
  bool any = false;
  for (ComputedCell& cell : row.computed) {
    if (!row.paper_value) continue;
    cell.log10_deviation = row.paper_value->log10_deviation(cell.estimate.tau);
    cell.within_order = std::fabs(*cell.log10_deviation) <= 1.0;
    any = any || cell.within_order;
  }
  row.status = any ? RowStatus::kAgrees : RowStatus::kNotReproduced;
  if (!any) row.notes.emplace_back("not reproduced by stated formulas: every computed value differs by more than one order of magnitude");
}

}  // namespace

ComparisonReport table1_report(bool with_oracle, std::optional<std::string> generated_at) {
  const Scenario& ion = *find_builtin(kIonId);
  const Scenario& dipole = *find_builtin(kDipoleId);
  const Scenario& orch = *find_builtin(kOrchOrId);

  ComparisonReport report{{}, std::move(generated_at), constants()};
  report.rows.reserve(reference_values().size());
  auto row = [&](const char* l, std::string scenario_id) {
    report.rows.push_back(ReportRow{l, find_reference(l), std::move(scenario_id), {}, RowStatus::kNotDerivable, {}});
    return &report.rows.back();
  };

  ReportRow* r = row(label::kNeuralFiring, "");
  r->notes.emplace_back("neuron-level estimate has no formula among the closed forms");

  r = row(label::kSoliton, ion.id);
  add_cells(*r, ion, {Method::kEq3IonNarrow}, with_oracle, Interaction::kIon);

  r = row(label::kOrchOr, orch.id);
  const Quantity t = std::get<CoherenceTimeReference>(orch.body).t;
  r->notes.push_back(fmt::format("uncertainty-relation energy E = hbar/t = {:.6e} J for t = {:.6e} s",
                                 orch_or_energy(t).value(), t.value()));

  r = row(label::kModelIon, ion.id);
  add_cells(*r, ion, {Method::kEq3IonNarrow, Method::kEq15IonNarrowLambda, Method::kEq18IonBroad}, with_oracle,
            Interaction::kIon);

  r = row(label::kModelDipole, dipole.id);
  add_cells(*r, dipole, {Method::kEq21DipoleNarrow, Method::kEq22DipoleBroad}, with_oracle, Interaction::kDipole);

  r = row(label::kDipoleText, dipole.id);
  add_cells(*r, dipole, {Method::kEq21DipoleNarrow}, with_oracle, Interaction::kDipole);

  for (const char* l : {label::kDropSmall, label::kDropLarge, label::kTypicalLarge, label::kTypicalSmall}) {
    row(l, "")->notes.emplace_back("reference value only");
  }

  for (ReportRow& each : report.rows) finish_row(each);
  return report;
}

}  // namespace decohere
