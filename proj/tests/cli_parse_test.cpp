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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ftrot/angle_parse.hpp"
#include "ftrot/errors.hpp"

namespace {

using namespace ftrot;
constexpr double kPi = std::numbers::pi;

TEST(AngleParse, Forms) {
  EXPECT_EQ(parse_angle("0.5"), 0.5);
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle("pi/4"), kPi / 4);
  EXPECT_EQ(parse_angle("2pi/2^10"), 2 * kPi / 1024);
  EXPECT_EQ(parse_angle("2*pi/2^10"), 2 * kPi / 1024);
  EXPECT_DOUBLE_EQ(parse_angle("3*pi/8"), 3 * kPi / 8);
  EXPECT_EQ(parse_angle(" pi / 2 "), kPi / 2);
  EXPECT_EQ(parse_angle("-pi"), -kPi);
  EXPECT_EQ(parse_angle("1e-3"), 1e-3);
}

TEST(AngleParse, Malformed) {
  for (const char* bad : {"", "abc", "pi/", "pi/0", "pix", "2pi/2^x", "0.5.5", "pi/2^-1", "nan"}) {
    EXPECT_THROW(parse_angle(bad), ConfigError) << bad;
  }
}

TEST(RangeParse, Forms) {
  EXPECT_EQ(parse_range("0.3"), std::vector<double>{0.3});
  const auto r = parse_range("0.1:0.5:5");
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(r.front(), 0.1);
  EXPECT_EQ(r.back(), 0.5);
  EXPECT_NEAR(r[2], 0.3, 1e-15);
  EXPECT_EQ(parse_range("pi/4:pi/4:1"), std::vector<double>{kPi / 4});
  const auto p = parse_range("0:pi/2:3");
  EXPECT_EQ(p[1], kPi / 4);
}

TEST(RangeParse, Malformed) {
  for (const char* bad : {"0.1:0.5", "0.1:0.5:0", "0.1:0.5:1", "0.1:0.5:x", "1:2:3:4"}) {
    EXPECT_THROW(parse_range(bad), ConfigError) << bad;
  }
}

}  // namespace
