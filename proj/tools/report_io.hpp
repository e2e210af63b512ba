// Copyright 2026 The vortexsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serialization of scenario reports (JSON, text) and configuration figures
// (SVG) for the command-line tool.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vortexsym/scenarios.hpp"

namespace vortexsym::cli {

using Json = nlohmann::ordered_json;

// "num/den", always with a denominator.
std::string rational_text(const Rational& q);

// Midpoint of the enclosure with as many decimals as its width supports.
std::string decimal_text(const Interval& enclosure);

Json to_json(const ScenarioReport& report);
void print_text(std::ostream& out, const ScenarioReport& report);

// Angles of the configuration drawn for a report: the square, the kite at
// theta2 = 2pi/3, the rectangle at pi/4 and the trapezoid at its unique
// angle in (0, 2pi/3).
std::array<double, 4> figure_angles(const ScenarioReport& report);

// SVG 1.1: unit circle, the central vortex, four labelled vortices and the
// inscribed quadrilateral.
std::string svg_figure(const std::array<double, 4>& thetas, const std::string& title);

}  // namespace vortexsym::cli
