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

// Helpers shared by the scenario drivers; not installed.
#pragma once

#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vortexsym/scenarios.hpp"

namespace vortexsym::detail {

void add_check(ScenarioReport& rep, std::string name, bool ok, std::string detail);
void add_erratum(ScenarioReport& rep, std::string name, std::string detail);
std::string decimal(const BigFloat& x, int digits = 12);
std::string decimal(const Rational& x, int digits = 12);
std::vector<Poly> polys_of(const std::vector<PipelineResult>& res);
std::vector<Poly> parse_all(const Registry& vars, std::span<const char* const> texts);
void require_nonzero(const Circulations& mu);
// Real roots of p in r mapped to angles in [0, 2pi), ascending.
std::vector<BigFloat> thetas_of_roots(const UPoly& p, const Rational& eps);
RootReport root_report(const UPoly& p, const std::string& var, const IsolatingInterval& iv, const Rational& eps,
                       bool with_theta);
Condition condition(std::string text, const Poly& p);
std::string eigen_text(const EigenCount& e);
std::string mu_text(const Circulations& mu);
// Nonzero p/q with |p| <= 9, 1 <= q <= 5.
Rational sample_nonzero(std::mt19937_64& rng);
// Exact point at the fixed angles with the given circulations.
Poly specialize_mu(const Poly& p, const Circulations& mu);

}  // namespace vortexsym::detail
