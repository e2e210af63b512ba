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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <regex>

#include "report_io.hpp"

using namespace vortexsym;
using namespace vortexsym::cli;

TEST_CASE("rational and decimal text") {
  CHECK(rational_text(Rational(3)) == "3/1");
  CHECK(rational_text(make_rational(-6, 4)) == "-3/2");
  CHECK(decimal_text(Interval{make_rational(1, 3) - make_rational(1, 1000000), make_rational(1, 3)}) == "0.333333");
}

TEST_CASE("JSON reports round-trip byte-identically") {
  for (const ScenarioReport& rep : {run_square(), run_kite(), run_rectangle()}) {
    std::string first = to_json(rep).dump(2);
    std::string second = Json::parse(first).dump(2);
    CHECK(first == second);
    Json j = Json::parse(first);
    for (const char* key : {"scenario", "pipeline_polynomials", "elimination_basis", "conditions", "roots",
                            "stability", "oracle_checks"})
      CHECK(j.contains(key));
    for (const auto& root : j["roots"]) {
      CHECK(root["interval"][0].get<std::string>().find('/') != std::string::npos);
      CHECK(root["interval"][1].get<std::string>().find('/') != std::string::npos);
    }
  }
}

TEST_CASE("square report JSON lists the two conditions and the verdict") {
  Json j = to_json(run_square());
  REQUIRE(j["conditions"].size() == 2);
  CHECK(j["conditions"][0]["poly"] == "mu1 - mu3");
  CHECK(j["conditions"][1]["poly"] == "mu2 - mu4");
  CHECK(j["stability"]["verdict"] == "never linearly stable");
}

TEST_CASE("kite window serializes its endpoints") {
  Json j = to_json(run_kite());
  REQUIRE(j["stability"]["window"].size() == 1);
  const auto& w = j["stability"]["window"][0];
  CHECK(w["lower"]["closed"] == true);
  CHECK(w["upper"]["closed"] == false);
  CHECK(std::stod(w["upper"]["decimal"].get<std::string>()) == doctest::Approx(-1.0 / 3).epsilon(1e-9));
}

namespace {

std::vector<std::pair<double, double>> markers(const std::string& svg) {
  std::regex re(R"re(<circle cx="([-0-9.]+)" cy="([-0-9.]+)" r="6")re");
  std::vector<std::pair<double, double>> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
  return out;
}

}  // namespace

TEST_CASE("svg figures") {
  constexpr double pi = std::numbers::pi;
  std::string sq = svg_figure({0, pi / 2, pi, 3 * pi / 2}, "square");
  CHECK(sq.find("<svg") != std::string::npos);
  CHECK(sq.find("version=\"1.1\"") != std::string::npos);
  CHECK(sq.find("<polygon") != std::string::npos);
  auto m = markers(sq);
  REQUIRE(m.size() == 4);
  // On the axes: (350, 200), (200, 50), (50, 200), (200, 350).
  CHECK(m[0].first == doctest::Approx(350));
  CHECK(m[1].second == doctest::Approx(50));
  CHECK(m[2].first == doctest::Approx(50));
  CHECK(m[3].second == doctest::Approx(350));

  // The kite is symmetric about the horizontal axis.
  auto k = markers(svg_figure({0, 2 * pi / 3, pi, -2 * pi / 3}, "kite"));
  REQUIRE(k.size() == 4);
  CHECK(k[1].first == doctest::Approx(k[3].first));
  CHECK(k[1].second - 200 == doctest::Approx(200 - k[3].second));
}

TEST_CASE("trapezoid figure uses the unique angle in (0, 2pi/3)") {
  ScenarioReport rep;
  rep.kind = ScenarioKind::trapezoid;
  for (double t : {-0.687, 0.6871967, 2.423, 2.748}) {
    RootReport r;
    r.theta2 = BigFloat(t);
    rep.roots.push_back(r);
  }
  auto a = figure_angles(rep);
  CHECK(a[1] == doctest::Approx(0.6871967));
  CHECK(a[3] == doctest::Approx(3 * 0.6871967));
}
