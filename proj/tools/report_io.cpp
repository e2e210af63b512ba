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

#include "report_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace vortexsym::cli {

std::string rational_text(const Rational& q) {
  return to_string(Rational(q.get_num())) + "/" + to_string(Rational(q.get_den()));
}

std::string decimal_text(const Interval& enclosure) {
  Rational width = enclosure.hi - enclosure.lo;
  int places = 15;
  if (sgn(width) > 0) places = std::clamp(static_cast<int>(std::floor(-std::log10(to_double(width)))), 0, 40);
  return to_float<BigFloat>(enclosure.mid()).str(places, std::ios_base::fixed);
}

namespace {

Json interval_json(const Interval& iv) { return Json::array({rational_text(iv.lo), rational_text(iv.hi)}); }

Json endpoint_json(const std::optional<Interval>& iv, bool closed) {
  if (!iv) return nullptr;
  Json j;
  j["interval"] = interval_json(*iv);
  j["decimal"] = decimal_text(*iv);
  j["closed"] = closed;
  return j;
}

}  // namespace

Json to_json(const ScenarioReport& report) {
  Json j;
  j["scenario"] = std::string(to_string(report.kind));
  j["pipeline_polynomials"] = Json::array();
  for (const Poly& p : report.pipeline) j["pipeline_polynomials"].push_back(p.to_string());
  j["elimination_basis"] = Json::array();
  for (const Poly& p : report.elimination_basis) j["elimination_basis"].push_back(p.to_string());
  j["conditions"] = Json::array();
  for (const auto& c : report.conditions) j["conditions"].push_back({{"text", c.text}, {"poly", c.poly.to_string()}});
  j["roots"] = Json::array();
  for (const auto& r : report.roots) {
    Json root;
    root["poly"] = r.poly;
    root["variable"] = r.variable;
    root["interval"] = interval_json(r.enclosure);
    root["width"] = rational_text(r.enclosure.hi - r.enclosure.lo);
    root["decimal"] = decimal_text(r.enclosure);
    root["theta2"] = r.theta2 ? Json(r.theta2->str(15, std::ios_base::fixed)) : Json(nullptr);
    j["roots"].push_back(std::move(root));
  }
  Json stability;
  stability["eigencounts"] = report.stability.eigencounts;
  stability["verdict"] = report.stability.verdict;
  stability["window"] = Json::array();
  for (const auto& w : report.stability.windows)
    stability["window"].push_back({{"variable", w.variable},
                                   {"lower", endpoint_json(w.lower, w.lower_closed)},
                                   {"upper", endpoint_json(w.upper, w.upper_closed)}});
  j["stability"] = std::move(stability);
  j["oracle_checks"] = Json::array();
  for (const auto& c : report.checks)
    j["oracle_checks"].push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  return j;
}

void print_text(std::ostream& out, const ScenarioReport& report) {
  out << "== " << to_string(report.kind) << " ==\n";
  if (!report.conditions.empty()) {
    out << "conditions:\n";
    for (const auto& c : report.conditions) out << "  " << c.text << "\n";
  }
  if (!report.roots.empty()) {
    out << "roots:\n";
    for (const auto& r : report.roots) {
      out << "  " << r.variable << " = " << decimal_text(r.enclosure);
      if (r.theta2) out << "  theta2 = " << r.theta2->str(9, std::ios_base::fixed);
      out << "\n";
    }
  }
  out << "stability: " << report.stability.verdict << "\n";
  for (const auto& e : report.stability.eigencounts) out << "  " << e << "\n";
  for (const auto& w : report.stability.windows) {
    out << "  window in " << w.variable << ": " << (w.lower_closed ? "[" : "(")
        << (w.lower ? decimal_text(*w.lower) : "-inf") << ", " << (w.upper ? decimal_text(*w.upper) : "+inf")
        << (w.upper_closed ? "]" : ")") << "\n";
  }
  std::size_t counts[3] = {0, 0, 0};
  out << "checks:\n";
  for (const auto& c : report.checks) {
    ++counts[static_cast<int>(c.status)];
    std::string tag(to_string(c.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    out << "  " << tag << std::string(tag.size() < 8 ? 8 - tag.size() : 1, ' ') << c.name << ": " << c.detail << "\n";
  }
  out << counts[0] << " pass, " << counts[2] << " erratum, " << counts[1] << " fail\n";
}

std::array<double, 4> figure_angles(const ScenarioReport& report) {
  constexpr double pi = std::numbers::pi;
  switch (report.kind) {
    case ScenarioKind::square:
      return {0, pi / 2, pi, 3 * pi / 2};
    case ScenarioKind::kite:
      return {0, 2 * pi / 3, pi, -2 * pi / 3};
    case ScenarioKind::rectangle:
      return {0, pi / 4, pi, 5 * pi / 4};
    case ScenarioKind::trapezoid: {
      double t = 0.687197;
      for (const auto& r : report.roots)
        if (r.theta2 && *r.theta2 > 0 && *r.theta2 < 2 * pi / 3) t = static_cast<double>(*r.theta2);
      return {0, t, 2 * t, 3 * t};
    }
  }
  return {0, 0, 0, 0};
}

std::string svg_figure(const std::array<double, 4>& thetas, const std::string& title) {
  constexpr double size = 400, center = 200, radius = 150;
  auto x = [&](double t) { return center + radius * std::cos(t); };
  auto y = [&](double t) { return center - radius * std::sin(t); };  // SVG y points down

  std::array<int, 4> order{0, 1, 2, 3};
  auto turn = [](double t) {
    double r = std::fmod(t, 2 * std::numbers::pi);
    return r < 0 ? r + 2 * std::numbers::pi : r;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return turn(thetas[a]) < turn(thetas[b]); });

  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
    << "  <title>" << title << "</title>\n"
    << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "  <circle cx=\"" << center << "\" cy=\"" << center << "\" r=\"" << radius
    << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n"
    << "  <polygon points=\"";
  for (int i : order) s << x(thetas[i]) << "," << y(thetas[i]) << " ";
  s << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n"
    << "  <circle cx=\"" << center << "\" cy=\"" << center << "\" r=\"9\" fill=\"black\"/>\n"
    << "  <text x=\"" << center + 12 << "\" y=\"" << center - 12 << "\" font-size=\"14\">0</text>\n";
  for (int i = 0; i < 4; ++i) {
    double t = thetas[i];
    s << "  <circle cx=\"" << x(t) << "\" cy=\"" << y(t) << "\" r=\"6\" fill=\"#c0392b\"/>\n"
      << "  <text x=\"" << center + (radius + 18) * std::cos(t) - 4 << "\" y=\"" << center - (radius + 18) * std::sin(t) + 5
      << "\" font-size=\"14\">" << i + 1 << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace vortexsym::cli
