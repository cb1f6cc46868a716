#pragma once

// Command-line surface of the `decohere` tool.
//
//   decohere tau      --scenario <id|file> [--format text|json] [--oracle]
//   decohere evolve   --scenario <id|file> [--interaction ion|dipole] [--lambda-ratio r] [--points n]
//   decohere sweep    --scenario <id|file> [--param temperature] [--from T] [--to T] [--points n] [--log] [--oracle]
//   decohere report   [--format text|json] [--oracle] [--stamp]
//   decohere validate [--format text|json] [--samples n]
//
// Exit status: 0 success, 1 computation error, 2 usage error.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "decohere/evolution.hpp"
#include "decohere/scenarios.hpp"

namespace decohere::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("usage", what) {}
};

enum class Command { kTau, kEvolve, kSweep, kReport, kValidate, kHelp };
enum class Format { kText, kJson, kCsv };

struct CliInvocation {
  Command command = Command::kHelp;
  std::string scenario_ref;
  std::optional<Scenario> scenario;  // resolved from scenario_ref
  Format format = Format::kText;
  std::optional<std::filesystem::path> output;

  std::optional<Interaction> interaction;
  std::optional<double> lambda_ratio;
  int points = 0;
  std::string param = "temperature";
  double from_K = 1e-7;
  double to_K = 1e3;
  bool log_spacing = false;
  bool oracle = false;
  bool stamp = false;
  int samples = 1000;
  QuadratureConfig quadrature;

  std::string help_text;
};

// args excludes the program name. Throws UsageError naming the offending
// token; unreadable or malformed scenario files are usage errors too.
CliInvocation parse_invocation(const std::vector<std::string>& args);

// Writes artifacts to inv.output or `out`. Throws decohere::Error on
// computation failures.
int execute(const CliInvocation& inv, std::ostream& out);

// parse + execute, mapping errors to exit statuses with a single line on
// `err`: `error kind=<kind> message="<text>"`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decohere::cli
