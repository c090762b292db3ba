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

#include "ftrot/angle_parse.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "ftrot/errors.hpp"

namespace ftrot {
namespace {

double parse_number(const std::string& s, const std::string& whole) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ConfigError("malformed angle '" + whole + "'");
  }
  return v;
}

long parse_int(const std::string& s, const std::string& whole) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("malformed angle '" + whole + "'");
  }
  return v;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_number(s, text);

  std::string coeff = s.substr(0, pi_pos);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double value = std::numbers::pi;
  if (!coeff.empty()) {
    if (coeff == "-") {
      value = -value;
    } else {
      value *= parse_number(coeff, text);
    }
  }
  const std::string rest = s.substr(pi_pos + 2);
  if (rest.empty()) return value;
  if (rest.front() != '/') throw ConfigError("malformed angle '" + text + "'");
  const std::string den = rest.substr(1);
  if (den.rfind("2^", 0) == 0) {
    const long k = parse_int(den.substr(2), text);
    if (k < 0 || k > 1000) throw ConfigError("exponent out of range in '" + text + "'");
    return std::ldexp(value, static_cast<int>(-k));
  }
  const double q = parse_number(den, text);
  if (q == 0) throw ConfigError("division by zero in '" + text + "'");
  return value / q;
}

std::vector<double> parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_angle(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw ConfigError("range must be start:stop:steps, got '" + text + "'");
  }
  const double start = parse_angle(text.substr(0, c1));
  const double stop = parse_angle(text.substr(c1 + 1, c2 - c1 - 1));
  const long steps = parse_int(text.substr(c2 + 1), text);
  if (steps < 1) throw ConfigError("range needs at least one step, got '" + text + "'");
  if (steps == 1) {
    if (start != stop) throw ConfigError("a one-step range needs start == stop");
    return {start};
  }
  std::vector<double> out;
  for (long i = 0; i < steps; ++i) {
    out.push_back(i == steps - 1 ? stop
                                 : start + (stop - start) * static_cast<double>(i) /
                                               static_cast<double>(steps - 1));
  }
  return out;
}

}  // namespace ftrot
