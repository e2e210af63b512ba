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

#include <algorithm>
#include <cmath>

#include "support/generators.hpp"
#include "vortexsym/reference_data.hpp"
#include "vortexsym/scenarios.hpp"

using namespace vortexsym;
using vortexsym::testing::Gen;

namespace {

BigFloat bf(const Rational& q) { return to_float<BigFloat>(q); }

Poly at_mu(const Poly& p, const Circulations& mu) {
  Poly out = p;
  for (std::size_t i = 0; i < 4; ++i) {
    std::string name = "mu" + std::to_string(i + 1);
    if (p.registry()->find(name)) out = out.substitute(name, Poly(p.registry(), mu[i]));
  }
  return out;
}

// Elimination elements vanish at mu, and the pipeline numerators share a
// real root r there.
void check_solution_point(const ScenarioReport& rep, const Circulations& mu) {
  for (const Poly& e : rep.elimination_basis) REQUIRE(at_mu(e, mu).is_zero());
  UPoly g;
  for (const Poly& p : rep.pipeline) {
    Poly s = at_mu(p, mu);
    if (!s.is_zero()) g = gcd(g, UPoly::from_poly(s, 0));
  }
  REQUIRE(g.degree() > 0);
  CHECK(count_real_roots(g) > 0);
}

bool no_failures(const ScenarioReport& rep) {
  bool ok = true;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::fail) {
      MESSAGE(c.name << ": " << c.detail);
      ok = false;
    }
  return ok;
}

const TrapezoidFindings& trapezoid() {
  static const TrapezoidFindings f = analyze_trapezoid();
  return f;
}

}  // namespace

TEST_CASE("square report: no failed checks, conditions mu1 = mu3, mu2 = mu4") {
  ScenarioReport rep = run_square();
  CHECK(no_failures(rep));
  REQUIRE(rep.conditions.size() == 2);
  CHECK(rep.stability.verdict == "never linearly stable");
}

TEST_CASE("square gradient vanishes on the condition set") {
  Gen g(41);
  const BigFloat half_pi = boost::math::constants::half_pi<BigFloat>();
  for (int k = 0; k < 50; ++k) {
    BigFloat m1 = bf(g.nonzero_rational()), m2 = bf(g.nonzero_rational());
    Configuration c{{BigFloat(0), half_pi, 2 * half_pi, 3 * half_pi}, {m1, m2, m1, m2}};
    for (const BigFloat& v : gradient(c)) CHECK(abs(v) < BigFloat("1e-40"));
  }
}

TEST_CASE("square certificate: literal sum is not zero, 2 e1 + 2 e2 + e3 is") {
  SquareFindings f = analyze_square();
  CHECK_FALSE(f.literal_certificate.is_zero());
  CHECK(f.scaled_certificate.is_zero());
}

TEST_CASE("kite elimination annihilates the pipeline at 50 points with mu2 = mu4") {
  ScenarioReport rep = run_kite();
  CHECK(no_failures(rep));
  Gen g(42);
  for (int k = 0; k < 50; ++k) {
    Rational m2 = g.nonzero_rational();
    check_solution_point(rep, {g.nonzero_rational(), m2, g.nonzero_rational(), m2});
  }
}

TEST_CASE("kite configuration count is even and at most 6 (100 samples)") {
  KiteFindings f = analyze_kite();
  Gen g(43);
  for (int k = 0; k < 100; ++k) {
    Rational m2 = g.nonzero_rational();
    Circulations mu{g.nonzero_rational(), m2, g.nonzero_rational(), m2};
    Poly s = at_mu(f.config_factor, mu);
    if (s.is_zero()) continue;
    // Roots that put two vortices together are not configurations.
    std::size_t n = count_real_roots(UPoly::from_poly(strip_collision_factors(s, ScenarioKind::kite).poly, 0));
    CHECK(n % 2 == 0);
    CHECK(n <= 6);
  }
}

TEST_CASE("kite stability window for mu3 > 0") {
  KiteFindings f = analyze_kite();
  REQUIRE(f.windows_positive.size() == 1);
  CHECK(f.windows_negative.empty());
  const auto& w = f.windows_positive[0];
  REQUIRE(w.lower);
  REQUIRE(w.upper);
  CHECK(std::abs(to_double(w.lower->mid()) - 3.0 / 121 * (-47 + 4 * std::sqrt(70.0))) < 1e-9);
  CHECK(std::abs(to_double(w.upper->mid()) + 1.0 / 3) < 1e-9);
  CHECK(w.lower_closed);
  CHECK_FALSE(w.upper_closed);
}

TEST_CASE("rectangle elimination annihilates the pipeline on both branches") {
  ScenarioReport rep = run_rectangle();
  CHECK(no_failures(rep));
  Gen g(44);
  for (int k = 0; k < 50; ++k) {
    Rational m1 = g.nonzero_rational(), m2 = g.nonzero_rational();
    int s = k % 2 ? -1 : 1;
    check_solution_point(rep, {m1, m2, s * m1, s * m2});
  }
}

TEST_CASE("degenerate circulations are rejected") {
  ScenarioOptions o;
  o.mu = Circulations{1, 0, 2, 3};
  CHECK_THROWS_AS(run_kite(o), DegenerateCirculation);
  CHECK_THROWS_AS(run_rectangle(o), DegenerateCirculation);
}

TEST_CASE("trapezoid elimination annihilates the pipeline at 50 points with mu1 = mu3, mu2 = mu4") {
  const auto trap = SymmetryScenario::make(ScenarioKind::trapezoid);
  ScenarioReport rep;
  rep.kind = ScenarioKind::trapezoid;
  for (const auto& p : run_pipeline(trap)) rep.pipeline.push_back(p.polynomial);
  rep.elimination_basis = trapezoid().elimination.polys();
  Gen g(45);
  for (int k = 0; k < 50; ++k) {
    Rational m1 = g.nonzero_rational(), m2 = g.nonzero_rational();
    check_solution_point(rep, {m1, m2, m1, m2});
  }
}

TEST_CASE("trapezoid plane pairing: pipeline vanishes at random points of the diagonal planes") {
  const TrapezoidFindings& f = trapezoid();
  const auto trap = SymmetryScenario::make(ScenarioKind::trapezoid);
  auto pipeline = run_pipeline(trap);
  const double want_r[] = {2.79493, 0.199167, 0.375563};
  Gen g(46);
  REQUIRE(f.planes.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    auto pos = std::find_if(f.valid_roots.begin(), f.valid_roots.end(), [&](const IsolatingInterval& iv) {
      return std::abs(to_double(iv.enclosure().mid()) - want_r[i]) < 1e-5;
    });
    REQUIRE(pos != f.valid_roots.end());
    BigFloat r = bf(pos->enclosure().mid()), a = bf(f.planes[i].a.mid()), b = bf(f.planes[i].b.enclosure().mid());
    for (int k = 0; k < 10; ++k) {
      BigFloat m2 = bf(g.nonzero_rational()), m3 = bf(g.nonzero_rational());
      std::array<BigFloat, 5> pt{r, -b * m2 - a * m3, m2, m3, -a * m2 - b * m3};
      for (const auto& p : pipeline) {
        BigFloat scale = 0;
        for (const auto& t : p.polynomial.terms()) scale += abs(bf(t.coeff));
        CHECK(abs(p.polynomial.evaluate_as<BigFloat>(pt)) < scale * BigFloat("1e-30"));
      }
    }
    // Another plane's root does not solve this plane.
    BigFloat other(want_r[(i + 1) % 3]);
    std::array<BigFloat, 5> pt{other, -b - a, BigFloat(1), BigFloat(1), -a - b};
    BigFloat worst = 0;
    for (const auto& p : pipeline) worst = std::max(worst, BigFloat(abs(p.polynomial.evaluate_as<BigFloat>(pt))));
    CHECK(worst > BigFloat("1e-6"));
  }
}

TEST_CASE("f1 on planes") {
  const TrapezoidFindings& f = trapezoid();
  for (const auto& pl : f.planes) CHECK(check_f1_on_plane(f.ab_basis, pl, f.b_quintic));
  CHECK_FALSE(check_f1_on_plane(Rational(1), Rational(1)));
  // alpha^2 + beta - beta^2 = 0 at alpha = 0, beta = 1.
  CHECK(check_f1_on_plane(Rational(0), Rational(1)));
  std::array<Interval, 4> wide{Interval{-1, 1}, Interval{-1, 1}, Interval{-1, 1}, Interval{-1, 1}};
  CHECK_THROWS_AS(f1_vanishes_at(wide), InconclusiveEnclosure);
  std::array<Interval, 4> exact{Interval::point(1), Interval::point(2), Interval::point(1), Interval::point(2)};
  CHECK(f1_vanishes_at(exact));
}

TEST_CASE("trapezoid quadratic cofactor") {
  const TrapezoidFindings& f = trapezoid();
  CHECK(f.q_inertia == Inertia{2, 0, 1});
  CHECK(abs(f.q_eigenvalues[2]) < BigFloat("1e-40"));
  // q vanishes on its null direction.
  const auto& n = f.q_null;
  BigFloat v = f.q[0] * n[0] * n[0] + f.q[1] * n[0] * n[1] + f.q[2] * n[1] * n[1] + f.q[3] * n[0] * n[2] +
               f.q[4] * n[1] * n[2] + f.q[5] * n[2] * n[2];
  CHECK(abs(v) < BigFloat("1e-40"));
  CHECK(f.factorization_residual < BigFloat("1e-30"));
}
