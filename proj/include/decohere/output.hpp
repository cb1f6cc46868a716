#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "decohere/estimators.hpp"
#include "decohere/evolution.hpp"
#include "decohere/scenarios.hpp"
#include "decohere/sweep.hpp"

namespace decohere {

// Scientific notation with nine digits after the point and an unpadded
// exponent: 1.000000000e0, 2.830435611e-14.
std::string format_sci(double value);

// Header `t_s,D`.
void write_curve_csv(std::ostream& out, const DecayCurve& curve);

// Header `T_K,lambda_m,ratio,regime,tau_narrow_s,tau_broad_s,tau_oracle_s`;
// missing values are empty cells.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

nlohmann::json estimate_to_json(const TauEstimate& e);
nlohmann::json constants_to_json(const Constants& c);

nlohmann::json report_to_json(const ComparisonReport& report);
void write_report_text(std::ostream& out, const ComparisonReport& report);

}  // namespace decohere
