#include "decohere/scenario_file.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace decohere {

namespace {

constexpr std::array<std::string_view, 4> kRequired = {"R_m", "s_m", "M_kg", "T_K"};
constexpr std::array<std::string_view, 4> kOptional = {"N", "p_Cm", "alpha_rad", "y1_m"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool known_key(std::string_view key) {
  for (auto k : kRequired) if (k == key) return true;
  for (auto k : kOptional) if (k == key) return true;
  return false;
}

double parse_double(std::string_view key, std::string_view text, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(fmt::format("line {}: malformed number '{}' for {}", line, text, key));
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(fmt::format("line {}: malformed integer '{}' for {}", line, text, key));
  }
  return value;
}

}  // namespace

ScenarioParams parse_scenario_text(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>, std::less<>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(fmt::format("line {}: expected 'key = value'", line_no));
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known_key(key)) throw ParseError(fmt::format("line {}: unknown key '{}'", line_no, key));
    if (value.empty()) throw ParseError(fmt::format("line {}: empty value for {}", line_no, key));
    if (!entries.emplace(std::string(key), std::pair{std::string(value), line_no}).second) {
      throw ParseError(fmt::format("line {}: duplicate key '{}'", line_no, key));
    }
  }

  std::vector<std::string_view> missing;
  for (auto k : kRequired) {
    if (!entries.contains(k)) missing.push_back(k);
  }
  if (!missing.empty()) throw ParseError(fmt::format("missing required keys: {}", fmt::join(missing, ", ")));

  auto real = [&](std::string_view key, double fallback) {
    const auto it = entries.find(key);
    return it == entries.end() ? fallback : parse_double(key, it->second.first, it->second.second);
  };
  ScenarioParams out;
  out.R = meters(real("R_m", 0.0));
  out.s = meters(real("s_m", 0.0));
  out.M = kilograms(real("M_kg", 0.0));
  out.T = kelvin(real("T_K", 0.0));
  out.p = coulomb_meters(real("p_Cm", 0.0));
  out.alpha = real("alpha_rad", 0.0);
  out.y1 = meters(real("y1_m", 0.0));
  if (const auto it = entries.find("N"); it != entries.end()) out.N = parse_int("N", it->second.first, it->second.second);
  try {
    out.validate();
  } catch (const DomainError& e) {
    throw ParseError(fmt::format("invalid scenario: {}", e.what()));
  }
  return out;
}

ScenarioParams load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read scenario file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

std::string format_scenario_file(const ScenarioParams& p) {
  return fmt::format(
      "R_m = {}\ns_m = {}\nM_kg = {}\nT_K = {}\nN = {}\np_Cm = {}\nalpha_rad = {}\ny1_m = {}\n", p.R.value(),
      p.s.value(), p.M.value(), p.T.value(), p.N, p.p.value(), p.alpha, p.y1.value());
}

}  // namespace decohere
