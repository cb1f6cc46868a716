#include "decohere/output.hpp"

#include <cstdlib>

#include <fmt/format.h>

namespace decohere {

std::string format_sci(double value) {
  std::string s = fmt::format("{:.9e}", value);
  const auto e = s.find('e');
  const int exponent = std::atoi(s.c_str() + e + 1);
  s.resize(e + 1);
  return s + std::to_string(exponent);
}

void write_curve_csv(std::ostream& out, const DecayCurve& curve) {
  out << "t_s,D\n";
  for (std::size_t i = 0; i < curve.times_s.size(); ++i) {
    out << format_sci(curve.times_s[i]) << ',' << format_sci(curve.values[i]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "T_K,lambda_m,ratio,regime,tau_narrow_s,tau_broad_s,tau_oracle_s\n";
  auto cell = [](const std::optional<Quantity>& q) { return q ? format_sci(q->value()) : std::string(); };
  for (const SweepRow& r : rows) {
    out << format_sci(r.T.value()) << ',' << format_sci(r.lambda.value()) << ',' << format_sci(r.ratio) << ','
        << to_string(r.regime) << ',' << cell(r.tau_narrow) << ',' << cell(r.tau_broad) << ',' << cell(r.tau_oracle)
        << '\n';
  }
}

nlohmann::json estimate_to_json(const TauEstimate& e) {
  return {
      {"method", to_string(e.method)},
      {"tau_s", e.tau.value()},
      {"rate_per_s", e.lambda_rate.value()},
      {"regime", to_string(e.regime)},
      {"scenario", e.scenario_id},
      {"provenance", "computed"},
  };
}

nlohmann::json constants_to_json(const Constants& c) {
  return {
      {"h_Js", c.h.value()},
      {"hbar_Js", c.hbar.value()},
      {"kappa_JperK", c.kappa.value()},
      {"coulomb_k_Nm2perC2", c.coulomb_k.value()},
      {"elementary_charge_C", c.elementary_charge.value()},
      {"proton_mass_kg", c.proton_mass.value()},
  };
}

nlohmann::json report_to_json(const ComparisonReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& r : report.rows) {
    nlohmann::json computed = nlohmann::json::array();
    for (const ComputedCell& cell : r.computed) {
      nlohmann::json c = estimate_to_json(cell.estimate);
      c["log10_deviation"] = cell.log10_deviation ? nlohmann::json(*cell.log10_deviation) : nlohmann::json();
      c["within_order_of_magnitude"] = cell.within_order;
      computed.push_back(std::move(c));
    }
    nlohmann::json paper;
    if (r.paper_value) {
      paper = r.paper_value->tau_high
                  ? nlohmann::json::array({r.paper_value->tau.value(), r.paper_value->tau_high->value()})
                  : nlohmann::json(r.paper_value->tau.value());
    }
    rows.push_back({
        {"label", r.label},
        {"paper_value_s", paper},
        {"provenance", "paper"},
        {"source", r.paper_value ? r.paper_value->source : std::string()},
        {"scenario", r.scenario_id},
        {"computed", std::move(computed)},
        {"status", to_string(r.status)},
        {"notes", r.notes},
    });
  }
  nlohmann::json out = {
      {"rows", std::move(rows)},
      {"constantsUsed", constants_to_json(report.constants_used)},
  };
  if (report.generated_at) out["generatedAt"] = *report.generated_at;
  return out;
}

void write_report_text(std::ostream& out, const ComparisonReport& report) {
  out << "# Decoherence timescales: published values vs computed\n\n";
  if (report.generated_at) out << "generated: " << *report.generated_at << "\n\n";
  for (const ReportRow& r : report.rows) {
    out << "## " << r.label << "\n";
    if (r.paper_value) {
      out << "  [paper]    " << format_sci(r.paper_value->tau.value());
      if (r.paper_value->tau_high) out << " .. " << format_sci(r.paper_value->tau_high->value());
      out << " s  (" << r.paper_value->source << ")\n";
    }
    for (const ComputedCell& cell : r.computed) {
      const TauEstimate& e = cell.estimate;
      out << fmt::format("  [computed] {} s  {:<24} {:<12} {}", format_sci(e.tau.value()), to_string(e.method),
                         to_string(e.regime), e.scenario_id);
      if (cell.log10_deviation) {
        out << fmt::format("  log10 dev {:+.2f}{}", *cell.log10_deviation, cell.within_order ? "" : "  (>1 order)");
      }
      out << '\n';
    }
    out << "  status: " << to_string(r.status) << '\n';
    for (const std::string& n : r.notes) out << "  note: " << n << '\n';
    out << '\n';
  }
  const Constants& c = report.constants_used;
  out << "## Constants used\n";
  out << "  h      = " << format_sci(c.h.value()) << " J s\n";
  out << "  hbar   = " << format_sci(c.hbar.value()) << " J s\n";
  out << "  kappa  = " << format_sci(c.kappa.value()) << " J/K\n";
  out << "  K      = " << format_sci(c.coulomb_k.value()) << " N m^2/C^2\n";
  out << "  e      = " << format_sci(c.elementary_charge.value()) << " C\n";
  out << "  m_p    = " << format_sci(c.proton_mass.value()) << " kg\n";
}

}  // namespace decohere
