#include "decohere/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "decohere/output.hpp"
#include "decohere/scenario_file.hpp"
#include "decohere/sweep.hpp"
#include "decohere/validation.hpp"

namespace decohere::cli {

namespace {

std::string format_name(Format f) {
  switch (f) {
    case Format::kText: return "text";
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
  }
  return "?";
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw UsageError(fmt::format("unknown format '{}'", s));
}

Scenario resolve_scenario(const std::string& ref) {
  if (const Scenario* builtin = find_builtin(ref)) return *builtin;
  if (!std::filesystem::exists(ref)) {
    throw UsageError(fmt::format("'{}' is neither a built-in scenario nor a readable file", ref));
  }
  try {
    return Scenario{ref, load_scenario_file(ref), fmt::format("scenario file {}", ref), {ref}};
  } catch (const ParseError& e) {
    throw UsageError(fmt::format("{}: {}", ref, e.what()));
  }
}

struct RawOptions {
  std::string scenario;
  std::string format;
  std::string output;
  std::string interaction;
  std::string param = "temperature";
  std::optional<double> lambda_ratio;
  int points = 0;
  double from_K = 1e-7;
  double to_K = 1e3;
  bool log_spacing = false;
  bool oracle = false;
  bool stamp = false;
  int samples = 1000;
  std::optional<double> max_phase_step;
  std::optional<double> rel_tol;
};

}  // namespace

CliInvocation parse_invocation(const std::vector<std::string>& args) {
  CLI::App app{"Decoherence timescales for microtubule superpositions", "decohere"};
  app.require_subcommand(1);
  RawOptions raw;

  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--output", raw.output, "Write to this file instead of standard output");
  };
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", raw.scenario, "Built-in scenario id or scenario file path")->required();
  };
  auto add_quadrature = [&](CLI::App* sub) {
    sub->add_option("--max-phase-step", raw.max_phase_step, "Largest phase change per subinterval (rad)");
    sub->add_option("--rel-tol", raw.rel_tol, "Quadrature error budget relative to D(0)");
  };

  CLI::App* tau = app.add_subcommand("tau", "Print every applicable closed-form decoherence time");
  add_scenario(tau);
  add_output(tau, {"text", "json"});
  tau->add_flag("--oracle", raw.oracle, "Also run the quadrature oracle");
  add_quadrature(tau);

  CLI::App* evolve = app.add_subcommand("evolve", "Write the oracle coherence curve D(t) as CSV");
  add_scenario(evolve);
  add_output(evolve, {"csv"});
  evolve->add_option("--interaction", raw.interaction, "ion or dipole")->check(CLI::IsMember({"ion", "dipole"}));
  evolve->add_option("--lambda-ratio", raw.lambda_ratio, "Use lambda = ratio * R instead of the thermal wavelength");
  evolve->add_option("--points", raw.points, "Geometric time samples after t = 0 (default 60)");
  add_quadrature(evolve);

  CLI::App* sweep = app.add_subcommand("sweep", "Temperature sweep of both regimes as CSV");
  add_scenario(sweep);
  add_output(sweep, {"csv"});
  sweep->add_option("--interaction", raw.interaction, "ion or dipole")->check(CLI::IsMember({"ion", "dipole"}));
  sweep->add_option("--param", raw.param, "Swept parameter")->check(CLI::IsMember({"temperature"}));
  sweep->add_option("--from", raw.from_K, "Lowest temperature (K)");
  sweep->add_option("--to", raw.to_K, "Highest temperature (K)");
  sweep->add_option("--points", raw.points, "Number of rows (default 100)");
  sweep->add_flag("--log", raw.log_spacing, "Logarithmic spacing");
  sweep->add_flag("--oracle", raw.oracle, "Fill the oracle column (slow)");
  add_quadrature(sweep);

  CLI::App* report = app.add_subcommand("report", "Published timescales next to computed ones");
  add_output(report, {"text", "json"});
  report->add_flag("--oracle", raw.oracle, "Add oracle estimates");
  report->add_flag("--stamp", raw.stamp, "Record the generation time (output no longer reproducible)");

  CLI::App* validate = app.add_subcommand("validate", "Run the identity, dimension and oracle self-checks");
  add_output(validate, {"text", "json"});
  validate->add_option("--samples", raw.samples, "Random scenarios for the identity checks");

  CliInvocation inv;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    inv.command = Command::kHelp;
    const auto subs = app.get_subcommands();
    inv.help_text = subs.empty() ? app.help() : subs.front()->help();
    return inv;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "tau") {
    inv.command = Command::kTau;
    inv.format = Format::kText;
  } else if (name == "evolve") {
    inv.command = Command::kEvolve;
    inv.format = Format::kCsv;
    inv.points = 60;
  } else if (name == "sweep") {
    inv.command = Command::kSweep;
    inv.format = Format::kCsv;
    inv.points = 100;
  } else if (name == "report") {
    inv.command = Command::kReport;
    inv.format = Format::kText;
  } else {
    inv.command = Command::kValidate;
    inv.format = Format::kText;
  }
  if (!raw.format.empty()) inv.format = parse_format(raw.format);
  if (!raw.output.empty()) inv.output = raw.output;
  if (!raw.interaction.empty()) inv.interaction = parse_interaction(raw.interaction);
  if (raw.points != 0) {
    if (raw.points < 2) throw UsageError(fmt::format("--points {} is below the minimum of 2", raw.points));
    inv.points = raw.points;
  }
  if (raw.lambda_ratio) {
    if (!(*raw.lambda_ratio > 0.0)) throw UsageError("--lambda-ratio must be positive");
    inv.lambda_ratio = raw.lambda_ratio;
  }
  if (raw.max_phase_step) inv.quadrature.max_phase_step = *raw.max_phase_step;
  if (raw.rel_tol) inv.quadrature.rel_tol = *raw.rel_tol;
  try {
    inv.quadrature.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  inv.param = raw.param;
  inv.from_K = raw.from_K;
  inv.to_K = raw.to_K;
  if (inv.command == Command::kSweep && !(raw.from_K > 0.0 && raw.from_K < raw.to_K)) {
    throw UsageError(fmt::format("--from {} --to {} is not an increasing positive range", raw.from_K, raw.to_K));
  }
  inv.log_spacing = raw.log_spacing;
  inv.oracle = raw.oracle;
  inv.stamp = raw.stamp;
  if (raw.samples < 1) throw UsageError("--samples must be at least 1");
  inv.samples = raw.samples;

  if (!raw.scenario.empty()) {
    inv.scenario_ref = raw.scenario;
    inv.scenario = resolve_scenario(raw.scenario);
    const ScenarioParams* params = inv.scenario->params();
    if ((inv.command == Command::kEvolve || inv.command == Command::kSweep) && !params) {
      throw UsageError(fmt::format("scenario '{}' carries no interaction parameters", raw.scenario));
    }
    if (params && inv.interaction) {
      const bool ok = *inv.interaction == Interaction::kIon ? params->has_ion() : params->has_dipole();
      if (!ok) {
        throw UsageError(fmt::format("scenario '{}' has no {} interaction", raw.scenario, to_string(*inv.interaction)));
      }
    }
  }
  return inv;
}

namespace {

Interaction default_interaction(const CliInvocation& inv, const ScenarioParams& params) {
  if (inv.interaction) return *inv.interaction;
  return params.has_ion() ? Interaction::kIon : Interaction::kDipole;
}

void write_tau(std::ostream& out, const CliInvocation& inv) {
  const Scenario& sc = *inv.scenario;
  const ScenarioParams* params = sc.params();
  if (!params) {
    const Quantity t = std::get<CoherenceTimeReference>(sc.body).t;
    const Quantity energy = orch_or_energy(t);
    if (inv.format == Format::kJson) {
      out << nlohmann::json{{"scenario", sc.id}, {"t_s", t.value()}, {"energy_J", energy.value()}}.dump(2) << '\n';
    } else {
      out << "scenario: " << sc.id << '\n'
          << "t_s      = " << format_sci(t.value()) << '\n'
          << "energy_J = " << format_sci(energy.value()) << "  (hbar / t)\n";
    }
    return;
  }

  std::vector<TauEstimate> estimates = applicable_estimates(*params, sc.id);
  if (inv.oracle) {
    for (Interaction inter : {Interaction::kIon, Interaction::kDipole}) {
      if ((inter == Interaction::kIon) ? !params->has_ion() : !params->has_dipole()) continue;
      estimates.push_back(run_oracle(*params, inter, sc.id, std::nullopt, inv.quadrature).tau);
    }
  }
  const Quantity lambda = params->lambda();
  const double ratio = lambda.value() / params->R.value();
  if (inv.format == Format::kJson) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TauEstimate& e : estimates) rows.push_back(estimate_to_json(e));
    out << nlohmann::json{{"scenario", sc.id},
                          {"lambda_m", lambda.value()},
                          {"ratio", ratio},
                          {"regime", to_string(params->regime())},
                          {"estimates", std::move(rows)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "scenario: " << sc.id << '\n'
      << "lambda_m = " << format_sci(lambda.value()) << "  (lambda/d = " << format_sci(ratio) << ", "
      << to_string(params->regime()) << ")\n"
      << fmt::format("{:<24} {:<18} {:<18} {}\n", "method", "tau_s", "rate_per_s", "regime");
  for (const TauEstimate& e : estimates) {
    out << fmt::format("{:<24} {:<18} {:<18} {}\n", to_string(e.method), format_sci(e.tau.value()),
                       format_sci(e.lambda_rate.value()), to_string(e.regime));
  }
}

void write_evolve(std::ostream& out, const CliInvocation& inv) {
  const ScenarioParams& params = *inv.scenario->params();
  const Interaction inter = default_interaction(inv, params);
  std::optional<Quantity> lambda;
  if (inv.lambda_ratio) lambda = *inv.lambda_ratio * params.R;
  const OracleRun run = run_oracle(params, inter, inv.scenario->id, lambda, inv.quadrature, inv.points);
  write_curve_csv(out, run.curve);
}

void write_sweep(std::ostream& out, const CliInvocation& inv) {
  const ScenarioParams& params = *inv.scenario->params();
  SweepOptions opts;
  opts.t_min = kelvin(inv.from_K);
  opts.t_max = kelvin(inv.to_K);
  opts.points = inv.points;
  opts.log_spacing = inv.log_spacing;
  opts.with_oracle = inv.oracle;
  opts.quadrature = inv.quadrature;
  const std::vector<SweepRow> rows = temperature_sweep(params, default_interaction(inv, params), opts);
  write_sweep_csv(out, rows);
}

void write_report(std::ostream& out, const CliInvocation& inv) {
  std::optional<std::string> stamp;
  if (inv.stamp) {
    stamp = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(
                                                     std::chrono::system_clock::now())));
  }
  const ComparisonReport report = table1_report(inv.oracle, stamp);
  if (inv.format == Format::kJson) {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    write_report_text(out, report);
  }
}

int write_validate(std::ostream& out, const CliInvocation& inv) {
  const std::vector<CheckResult> checks = run_validation(inv.samples);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  if (inv.format == Format::kJson) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckResult& c : checks) {
      rows.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
    }
    out << nlohmann::json{{"checks", std::move(rows)}, {"passed", all}}.dump(2) << '\n';
  } else {
    for (const CheckResult& c : checks) {
      out << fmt::format("{} {}  measured={:.3e} tolerance={:.3e}", c.passed ? "PASS" : "FAIL", c.name, c.measured,
                         c.tolerance);
      if (!c.detail.empty()) out << "  (" << c.detail << ')';
      out << '\n';
    }
    out << (all ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all ? kExitOk : kExitComputation;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

int execute(const CliInvocation& inv, std::ostream& out) {
  if (inv.command == Command::kHelp) {
    out << inv.help_text;
    return kExitOk;
  }
  std::ofstream file;
  if (inv.output) {
    file.open(*inv.output);
    if (!file) throw Error("io", fmt::format("cannot open '{}' for writing", inv.output->string()));
  }
  std::ostream& sink = inv.output ? static_cast<std::ostream&>(file) : out;
  int status = kExitOk;
  switch (inv.command) {
    case Command::kTau: write_tau(sink, inv); break;
    case Command::kEvolve: write_evolve(sink, inv); break;
    case Command::kSweep: write_sweep(sink, inv); break;
    case Command::kReport: write_report(sink, inv); break;
    case Command::kValidate: status = write_validate(sink, inv); break;
    case Command::kHelp: break;
  }
  sink.flush();
  if (!sink) throw Error("io", fmt::format("failed writing {} output", format_name(inv.format)));
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  try {
    inv = parse_invocation(args);
  } catch (const Error& e) {
    err << "error kind=" << e.kind() << " message=\"" << escape(e.what()) << "\"\n";
    return kExitUsage;
  }
  try {
    return execute(inv, out);
  } catch (const Error& e) {
    err << "error kind=" << e.kind() << " message=\"" << escape(e.what()) << "\"\n";
  } catch (const std::exception& e) {
    err << "error kind=internal message=\"" << escape(e.what()) << "\"\n";
  }
  return kExitComputation;
}

}  // namespace decohere::cli
