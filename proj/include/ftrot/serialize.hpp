// Copyright 2026 The ftrot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ftrot/analytics.hpp"
#include "ftrot/bench.hpp"
#include "ftrot/codes.hpp"
#include "ftrot/mcsim.hpp"
#include "ftrot/schemes.hpp"

namespace ftrot {

/// Shortest round-trip decimal form.
std::string format_double(double v);

struct AnalyzeRow {
  double theta = 0;
  double theta_L = 0;
  double eps_first_order = 0;
  double eps_total = 0;
  double eps_readout = 0;
  SuccessRate success;
  double coherent_std = 0;
  bool substrate_limited = false;
};

/// Closed-form budget of one code at one angle; sigma_theta is absolute (radians).
AnalyzeRow analyze_point(const StabilizerCode& code, double theta, double p_in, int r,
                         double sigma_theta);

std::string analyze_csv(const std::vector<AnalyzeRow>& rows);
nlohmann::ordered_json to_json(const AnalyzeRow& row);

nlohmann::ordered_json to_json(const StabilizerCode& code);
nlohmann::ordered_json to_json(const ValidationReport& rep);
nlohmann::ordered_json to_json(const McStats& st);
nlohmann::ordered_json to_json(const WalkStats& st);
nlohmann::ordered_json to_json(const ScaffoldPlan& plan);
nlohmann::ordered_json to_json(const ScaffoldResult& res);
nlohmann::ordered_json to_json(const CostPoint& pt);

std::string cost_points_csv(const std::vector<CostPoint>& points);

}  // namespace ftrot
