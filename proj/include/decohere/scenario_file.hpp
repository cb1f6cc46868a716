#pragma once

// Line-oriented scenario files:
//
//   # microtubule ring
//   R_m = 2.4e-8
//   s_m = 2.4e-8
//   M_kg = 3.006e-26
//   T_K = 309
//   N = 1000
//
// R_m, s_m, M_kg and T_K are required; N, p_Cm, alpha_rad and y1_m default
// to zero. Values are SI and parsed independently of the locale.

#include <filesystem>
#include <string>
#include <string_view>

#include "decohere/estimators.hpp"

namespace decohere {

// Throws ParseError naming every missing key at once, or the first unknown
// key, duplicate key or malformed number.
ScenarioParams parse_scenario_text(std::string_view text);

// Throws ParseError if the file cannot be read.
ScenarioParams load_scenario_file(const std::filesystem::path& path);

// Writes every key with round-trip precision.
std::string format_scenario_file(const ScenarioParams& params);

}  // namespace decohere
