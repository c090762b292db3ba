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

namespace ftrot {

/// Radians ("0.5", "1e-3") or multiples of pi: "pi", "pi/4", "2pi/2^10", "3*pi/8".
/// Power-of-two denominators are applied with ldexp, so 2pi/2^k is exact.
double parse_angle(const std::string& text);

/// "start:stop:steps" with inclusive endpoints, or a single value. Endpoints go through
/// parse_angle.
std::vector<double> parse_range(const std::string& text);

}  // namespace ftrot
