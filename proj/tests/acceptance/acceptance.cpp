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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// line fails. Tolerances are fixed here, not taken from the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/generators.hpp"
#include "vortexsym/reference_data.hpp"
#include "vortexsym/scenarios.hpp"

using namespace vortexsym;
using vortexsym::testing::Gen;

namespace {

constexpr double kPrinted = 1e-5;         // published decimals
constexpr double kEigenvalues = 1e-4;     // q eigenvalues
constexpr double kBranchRelative = 1e-10; // rectangle residual ratios
constexpr double kFiniteDiff = 1e-6;      // Hessian vs finite differences

struct Outcome {
  bool pass;
  std::string detail;
};

BigFloat bf(const Rational& q) { return to_float<BigFloat>(q); }
BigFloat mid(const Interval& x) { return bf(x.mid()); }
bool near(const BigFloat& x, double want, double tol) { return abs(x - BigFloat(want)) <= BigFloat(tol); }
std::string dec(const BigFloat& x, int digits = 7) { return x.str(digits); }

std::vector<Poly> parse_all(const Registry& vars, std::span<const char* const> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(Poly::parse(vars, t));
  return out;
}

// Same reduced basis once both sides are made primitive.
bool same_basis(const GroebnerBasis& computed, std::vector<Poly> printed) {
  return buchberger(printed, computed.order()) == computed;
}

bool elementwise_up_to_scalar(std::span<const Poly> computed, std::span<const Poly> printed) {
  if (computed.size() != printed.size()) return false;
  for (std::size_t i = 0; i < printed.size(); ++i)
    if (!equal_up_to_scalar(computed[i], printed[i])) return false;
  return true;
}

const TrapezoidFindings& trapezoid() {
  static const TrapezoidFindings f = [] {
    ScenarioOptions o;
    o.check_appendix = true;
    return analyze_trapezoid(o);
  }();
  return f;
}

// ---- 1 ----------------------------------------------------------------------

Outcome example_bases() {
  Registry xyz = VarRegistry::make({"x", "y", "z"});
  auto gens = parse_all(xyz, std::array{"x - y - z + 2", "x^2 + y^2 - z"});
  GroebnerBasis lex = buchberger(gens, MonomialOrder::lex());
  GroebnerBasis grevlex = buchberger(gens, MonomialOrder::grevlex());
  const std::size_t z[] = {2};
  GroebnerBasis elim = eliminate(gens, z);
  bool a = same_basis(lex, parse_all(xyz, std::array{"4 - 4*y + 2*y^2 - 5*z + 2*y*z + z^2", "2 + x - y - z"}));
  bool b = same_basis(grevlex, parse_all(xyz, std::array{"2 + x - y - z", "4 - 4*y + 2*y^2 - 5*z + 2*y*z + z^2"}));
  bool c = elim.size() == 1 && equal_up_to_scalar(elim[0], Poly::parse(xyz, "-2 - x + x^2 + y + y^2"));
  return {a && b && c, std::string("lex ") + (a ? "ok" : "differs") + ", grevlex " + (b ? "ok" : "differs") +
                           ", elimination of z " + (c ? "ok" : "differs")};
}

// ---- 2 ----------------------------------------------------------------------

Outcome kite_pipeline() {
  const auto kite = SymmetryScenario::make(ScenarioKind::kite);
  auto pipe = run_pipeline(kite);
  std::vector<Poly> computed;
  for (const auto& p : pipe) computed.push_back(p.polynomial);
  auto printed = parse_all(r_registry(), reference::kKitePipeline);
  bool pipeline = elementwise_up_to_scalar(computed, printed);
  const std::size_t r[] = {0};
  GroebnerBasis e = eliminate(computed, r);
  bool elim = e.size() == 1 && equal_up_to_scalar(e[0], Poly::parse(r_registry(), "mu2 - mu4"));
  return {pipeline && elim, std::string("pipeline ") + (pipeline ? "matches" : "differs") + ", elimination " +
                                (elim ? "{mu2 - mu4}" : "differs")};
}

// ---- 3 ----------------------------------------------------------------------

Outcome rectangle() {
  const auto rect = SymmetryScenario::make(ScenarioKind::rectangle);
  std::vector<Poly> computed;
  for (const auto& p : run_pipeline(rect)) computed.push_back(p.polynomial);
  const std::size_t r[] = {0};
  GroebnerBasis e = eliminate(computed, r);
  bool basis = same_basis(e, parse_all(r_registry(), std::array{"mu2*mu3 - mu1*mu4", "mu1*mu2 - mu3*mu4",
                                                                "mu1^2 - mu3^2"}));

  // Gradient along each branch divided by mu1 mu2 f(theta2) is the same
  // constant at every sample.
  Gen g(303);
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  BigFloat worst = 0;
  bool nonzero = true;
  for (int branch = 0; branch < 2; ++branch) {
    std::array<BigFloat, 4> first{};
    for (int k = 0; k < 20; ++k) {
      BigFloat t;
      do {
        t = BigFloat(std::uniform_real_distribution<double>(0.05, 3.09)(g.engine()));
      } while (abs(cos(2 * t)) < 0.05 || abs(cos(t)) < 0.05);
      BigFloat m1 = bf(g.nonzero_rational()), m2 = bf(g.nonzero_rational());
      int s = branch == 0 ? 1 : -1;
      Configuration c{{BigFloat(0), t, pi, t + pi}, {m1, m2, s * m1, s * m2}};
      BigFloat f = branch == 0 ? cos(t) / sin(t) : cos(2 * t) / sin(t);
      auto grad = gradient(c);
      for (int i = 0; i < 4; ++i) {
        BigFloat ratio = grad[i] / (m1 * m2 * f);
        if (k == 0) {
          first[i] = ratio;
          nonzero = nonzero && abs(ratio) > BigFloat("1e-6");
        } else {
          worst = std::max(worst, BigFloat(abs(ratio - first[i]) / abs(first[i])));
        }
      }
    }
  }
  bool residual = nonzero && worst < BigFloat(kBranchRelative);
  return {basis && residual, std::string("basis ") + (basis ? "matches" : "differs") +
                                 "; max relative spread of gradient/(mu1 mu2 f) over 2x20 samples = " + dec(worst, 3)};
}

// ---- 4 ----------------------------------------------------------------------

Outcome trapezoid_ideal() {
  const auto& f = trapezoid();
  return {f.contains_published && f.contained_in_published,
          std::string("f1..f9 in computed ideal: ") + (f.contains_published ? "yes" : "no") +
              "; computed basis in (f1..f9): " + (f.contained_in_published ? "yes" : "no") + "; " +
              std::to_string(f.elimination.size()) + " elements"};
}

// ---- 5 ----------------------------------------------------------------------

Outcome plane_families() {
  const auto& f = trapezoid();
  const Registry ab = f.ab_basis.registry();
  auto printed = parse_all(ab, reference::kRemainderCoefficients);
  bool rem = f.remainder_coefficients.size() == 6;
  for (std::size_t k = 0; rem && k < 6; ++k) rem = f.remainder_coefficients[k] == printed[k];
  Poly quintic = Poly::parse(ab, "-8 + 22*b - 54*b^2 + 117*b^3 - 98*b^4 + 17*b^5");
  bool has_quintic = std::any_of(f.ab_basis.polys().begin(), f.ab_basis.polys().end(),
                                 [&](const Poly& p) { return equal_up_to_scalar(p, quintic); });
  const double b_want[] = {0.638032, 0.843716, 4.330096};
  const double a_want[] = {-1.31061, -0.480743, -4.858868};
  bool b_ok = f.planes.size() == 3, a_ok = f.planes.size() == 3;
  std::string bs, as;
  for (std::size_t i = 0; i < f.planes.size() && i < 3; ++i) {
    BigFloat b = mid(f.planes[i].b.enclosure()), a = mid(f.planes[i].a);
    b_ok = b_ok && near(b, b_want[i], kPrinted);
    a_ok = a_ok && near(a, a_want[i], kPrinted);
    bs += (i ? ", " : "") + dec(b);
    as += (i ? ", " : "") + dec(a);
  }
  return {rem && has_quintic && b_ok && a_ok,
          std::string("remainder ") + (rem ? "matches" : "differs") + "; quintic " + (has_quintic ? "present" : "absent") +
              "; b = (" + bs + ")" + (b_ok ? "" : " MISMATCH") + "; a = (" + as + ")" + (a_ok ? "" : " MISMATCH") +
              " vs (-1.31061, -0.480743, -4.858868)"};
}

// ---- 6 ----------------------------------------------------------------------

Outcome quadratic_cofactor() {
  const auto& f = trapezoid();
  const double ev[] = {1.07524, 0.2035, 0.0};
  const double null[] = {-0.95922, -0.0997192, -0.264487};
  bool inertia = f.q_inertia == Inertia{2, 0, 1};
  bool eig = true, plus = true, minus = true;
  for (int k = 0; k < 3; ++k) {
    eig = eig && near(f.q_eigenvalues[k], ev[k], kEigenvalues);
    plus = plus && near(f.q_null[k], null[k], kPrinted);
    minus = minus && near(-f.q_null[k], null[k], kPrinted);
  }
  return {inertia && eig && (plus || minus),
          "inertia (" + std::to_string(f.q_inertia.positive) + ", " + std::to_string(f.q_inertia.negative) + ", " +
              std::to_string(f.q_inertia.zero) + "); eigenvalues " + dec(f.q_eigenvalues[0]) + ", " +
              dec(f.q_eigenvalues[1]) + ", " + dec(f.q_eigenvalues[2], 3) + "; null (" + dec(f.q_null[0]) + ", " +
              dec(f.q_null[1]) + ", " + dec(f.q_null[2]) + ")"};
}

// ---- 7 ----------------------------------------------------------------------

Outcome annihilating_lines() {
  const auto& f = trapezoid();
  auto printed_c = parse_all(mu_registry(), reference::kLinearCoefficients);
  bool cs = elementwise_up_to_scalar(f.linear_coefficients, printed_c);
  bool sig = f.hermite.real_roots == 20;

  std::size_t rows = 0;
  std::vector<bool> used(f.lines.size(), false);
  for (const auto& row : reference::kAnnihilatingLines) {
    bool found = false;
    for (std::size_t j = 0; j < f.lines.size() && !found; ++j) {
      if (used[j]) continue;
      const auto& line = f.lines[j];
      for (int s : {1, -1}) {
        bool dir = true;
        for (int k = 0; k < 3; ++k) dir = dir && near(s * mid(line.direction[k]), row.u[k], kPrinted);
        if (!dir || (line.discriminant_sign > 0) != row.discriminant_positive) continue;
        bool mu1 = true;
        if (row.discriminant_positive) {
          std::array<BigFloat, 2> got{s * line.mu1.at(0), s * line.mu1.at(1)};
          std::array<double, 2> want = row.mu1;
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          mu1 = near(got[0], want[0], kPrinted) && near(got[1], want[1], kPrinted);
        } else {
          mu1 = line.mu1.empty();
        }
        if (mu1) {
          used[j] = found = true;
          break;
        }
      }
    }
    rows += found;
  }
  bool table = rows == 10 && f.lines.size() == 10;
  return {cs && sig && table, std::string("c1..c14 ") + (cs ? "match" : "differ") + "; Hermite signature " +
                                  std::to_string(f.hermite.real_roots) + "; " + std::to_string(rows) +
                                  "/10 table rows reproduced from " + std::to_string(f.lines.size()) + " lines"};
}

// ---- 8 ----------------------------------------------------------------------

Outcome valid_angles() {
  const auto& f = trapezoid();
  auto printed = parse_all(f.valid_theta.registry(), reference::kValidThetaBasis);
  bool ideal = same_ideal(f.valid_theta.polys(), printed);
  const double r_want[] = {-2.79493, -0.375563, -0.199167, 0.199167, 0.375563, 2.79493};
  const double t_want[] = {-0.687197, -2.42306, -2.74840, 2.74840, 2.42306, 0.687197};
  bool roots = f.valid_roots.size() == 6 && f.valid_thetas.size() == 6;
  for (std::size_t k = 0; roots && k < 6; ++k)
    roots = near(mid(f.valid_roots[k].enclosure()), r_want[k], kPrinted) && near(f.valid_thetas[k], t_want[k], kPrinted);

  // A1 <-> 2.79493, B2 <-> 0.199167, C3 <-> 0.375563; off-diagonal planes
  // carry no solution.
  const double pair_r[] = {2.79493, 0.199167, 0.375563};
  bool pairs = f.pairings.size() == 9;
  for (const auto& p : f.pairings) {
    if (p.letter == p.digit)
      pairs = pairs && p.f_vanish && p.r_index &&
              near(mid(f.valid_roots[*p.r_index].enclosure()), pair_r[p.letter - 1], kPrinted);
    else
      pairs = pairs && !p.f_vanish && !p.r_index;
  }
  return {ideal && roots && pairs, std::string("ideal ") + (ideal ? "matches" : "differs") + "; roots and angles " +
                                       (roots ? "match" : "differ") + "; pairings " + (pairs ? "A1, B2, C3" : "differ")};
}

// ---- 9 ----------------------------------------------------------------------

Outcome square() {
  SquareFindings f = analyze_square();
  bool conditions = same_basis(f.conditions, parse_all(mu_registry(), std::array{"mu1 - mu3", "mu2 - mu4"}));
  std::size_t exact = 0;
  for (const auto& s : f.samples) exact += s.weighted_formulas_exact;
  bool formulas = f.samples.size() >= 10 && exact == f.samples.size();
  bool certificate = f.literal_certificate.is_zero();
  return {conditions && formulas && certificate,
          std::string("conditions ") + (conditions ? "{mu1 = mu3, mu2 = mu4}" : "differ") + "; weighted formulas exact at " +
              std::to_string(exact) + "/" + std::to_string(f.samples.size()) + " samples; e1 + e2 + e3 = " +
              f.literal_certificate.to_string() + (f.scaled_certificate.is_zero() ? " (2 e1 + 2 e2 + e3 = 0)" : "")};
}

// ---- 10 ---------------------------------------------------------------------

Outcome kite_window() {
  KiteFindings f = analyze_kite();
  bool forced = same_basis(f.forced, parse_all(f.forced.registry(), std::array{"mu1 - mu2", "mu2 - mu4"}));
  bool window = f.windows_positive.size() == 1;
  std::string text = "none";
  if (window) {
    const auto& w = f.windows_positive[0];
    window = w.lower && w.upper && near(mid(*w.lower), -0.335544, kPrinted) && near(mid(*w.upper), -1.0 / 3, kPrinted);
    text = (w.lower ? dec(mid(*w.lower)) : "-inf") + ", " + (w.upper ? dec(mid(*w.upper)) : "+inf");
  }
  return {forced && window, std::string("forced ") + (forced ? "mu1 = mu2 = mu4" : "differs") +
                                "; window in mu1/mu3 for mu3 > 0: " + text};
}

// ---- 11 ---------------------------------------------------------------------

Outcome properties() {
  std::ostringstream d;
  // (a) unweighted component sums.
  std::string nonzero_sums;
  for (ScenarioKind k : {ScenarioKind::square, ScenarioKind::kite, ScenarioKind::rectangle, ScenarioKind::trapezoid})
    if (!component_sum(SymmetryScenario::make(k), false).is_zero()) nonzero_sums += std::string(" ") + std::string(to_string(k));
  bool weighted = true;
  for (ScenarioKind k : {ScenarioKind::square, ScenarioKind::kite, ScenarioKind::rectangle, ScenarioKind::trapezoid})
    weighted = weighted && component_sum(SymmetryScenario::make(k), true).is_zero();
  bool a = nonzero_sums.empty();
  d << "(a) " << (a ? "ok" : "sum V_theta_i != 0 for" + nonzero_sums) << (weighted ? ", sum mu_i V_theta_i = 0 everywhere" : "");

  // (b) Hessian at random configurations.
  Gen g(1111);
  BigFloat asym = 0, kernel = 0, fd = 0;
  const BigFloat h("1e-15");
  for (int n = 0; n < 20;) {
    Configuration c;
    for (int i = 0; i < 4; ++i) {
      c.thetas[i] = BigFloat(std::uniform_real_distribution<double>(0, 6.283)(g.engine()));
      c.mus[i] = BigFloat(std::uniform_real_distribution<double>(0.2, 2.0)(g.engine())) * (g.integer(0, 1) ? 1 : -1);
    }
    bool separated = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) separated = separated && abs(sin((c.thetas[i] - c.thetas[j]) / 2)) > 0.1;
    if (!separated) continue;
    ++n;
    auto hm = hessian(c);
    BigFloat scale = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) scale = std::max(scale, BigFloat(abs(hm(i, j))));
    for (int i = 0; i < 4; ++i) {
      BigFloat row = 0;
      for (int j = 0; j < 4; ++j) {
        asym = std::max(asym, BigFloat(abs(hm(i, j) - hm(j, i)) / scale));
        row += hm(i, j);
        Configuration up = c, down = c;
        up.thetas[j] += h;
        down.thetas[j] -= h;
        BigFloat numeric = (gradient(up)[i] - gradient(down)[i]) / (2 * h);
        fd = std::max(fd, BigFloat(abs(numeric - hm(i, j)) / scale));
      }
      kernel = std::max(kernel, BigFloat(abs(row) / scale));
    }
  }
  bool b = asym < BigFloat("1e-40") && kernel < BigFloat("1e-40") && fd < BigFloat(kFiniteDiff);
  d << "; (b) asymmetry " << dec(asym, 2) << ", |H 1| " << dec(kernel, 2) << ", finite differences " << dec(fd, 2);

  // (c) Buchberger outputs.
  std::size_t bases = 0, good = 0;
  auto check = [&](const GroebnerBasis& gb) {
    ++bases;
    good += is_groebner_basis(gb.polys(), gb.order());
  };
  const auto& t = trapezoid();
  for (const GroebnerBasis* gb : {&t.elimination, &t.ab_basis, &t.annihilator, &t.valid_theta}) check(*gb);
  check(analyze_kite().elimination);
  check(analyze_rectangle().elimination);
  check(analyze_square().conditions);
  Registry xyz = VarRegistry::make({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(g.poly(xyz, 3, 2, 5));
    check(buchberger(gens, k % 2 ? MonomialOrder::lex() : MonomialOrder::grevlex()));
  }
  bool c = good == bases;
  d << "; (c) " << good << "/" << bases << " bases pass the S-polynomial check";

  // (d) kite configuration counts.
  KiteFindings kf = analyze_kite();
  std::size_t even = 0;
  for (const auto& s : kf.parity_samples) even += s.real_roots % 2 == 0 && s.real_roots <= 6;
  bool dd = kf.parity_samples.size() == 100 && even == 100;
  d << "; (d) " << even << "/" << kf.parity_samples.size() << " kite counts even and <= 6";

  // (e) Hermite count against Sturm on univariate ideals.
  Registry x = VarRegistry::make({"x"});
  std::size_t agree = 0;
  for (int round = 0; round < 20; ++round) {
    UPoly p = UPoly::constant(g.nonzero_rational());
    int linear = static_cast<int>(g.integer(1, 4)), quadratic = static_cast<int>(g.integer(0, 2));
    for (int k = 0; k < linear; ++k) p = p * UPoly({-g.rational(6, 3), Rational(1)});
    for (int k = 0; k < quadratic; ++k) {
      Rational a0 = g.rational(4, 2), b0 = g.nonzero_rational(6, 2);
      p = p * UPoly({a0 * a0 + b0, -2 * a0, Rational(1)});
    }
    std::vector<Poly> gens{p.to_poly(x, 0)};
    agree += hermite_count(gens).real_roots == count_real_roots(p);
  }
  bool e = agree == 20;
  d << "; (e) " << agree << "/20 Hermite counts equal Sturm counts";
  return {a && b && c && dd && e, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, example_bases},   {2, kite_pipeline},      {3, rectangle},          {4, trapezoid_ideal},
      {5, plane_families},  {6, quadratic_cofactor}, {7, annihilating_lines}, {8, valid_angles},
      {9, square},          {10, kite_window},       {11, properties},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << std::endl;
  }
  std::cout << (11 - failed) << "/11 criteria pass" << std::endl;
  return failed ? 1 : 0;
}
