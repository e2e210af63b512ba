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

// Gradient and Hessian of the (1+4)-vortex potential on the unit circle,
//   V = -sum_{i<j} mu_i mu_j [cos(t_i - t_j) + 1/2 log(2 - 2 cos(t_i - t_j))],
// and the reduction of symmetric gradients to polynomials in the tangent
// half-angle r.
#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vortexsym/numeric.hpp"
#include "vortexsym/poly.hpp"
#include "vortexsym/realroots.hpp"

namespace vortexsym {

enum class ScenarioKind { square, kite, rectangle, trapezoid };

std::string_view to_string(ScenarioKind kind);

// sum_k multiples[k] * angle_k + quarter_turns * pi/2.
struct AngleExpr {
  std::map<std::string, int> multiples;
  int quarter_turns = 0;

  static AngleExpr fixed(int quarter_turns) { return {{}, quarter_turns}; }
  static AngleExpr free(int multiple, int quarter_turns = 0, std::string name = "theta2");
  friend AngleExpr operator-(const AngleExpr& a, const AngleExpr& b);
};

struct SymmetryScenario {
  ScenarioKind kind;
  std::array<AngleExpr, 4> thetas;

  // Square (0, pi/2, pi, 3pi/2); kite (0, t, pi, -t); rectangle
  // (0, t, pi, t + pi); trapezoid (0, t, 2t, 3t).
  static SymmetryScenario make(ScenarioKind kind);
};

// {s, c, mu1, mu2, mu3, mu4} with s = sin t, c = cos t.
const Registry& trig_registry();
// {r, mu1, mu2, mu3, mu4}.
const Registry& r_registry();

// Rewrites s^2 -> 1 - c^2 until s has degree at most one.
Poly reduce_pythagorean(const Poly& p);

// num/den with num in Q[s, c, mu] reduced, den in Q[s, c] nonzero.
struct TrigRational {
  Poly num;
  Poly den;

  static TrigRational constant(const Rational& q);
  bool is_zero() const { return num.is_zero(); }
  // mu_index in 1..4.
  TrigRational substitute_mu(std::size_t mu_index, const Poly& value) const;
  BigFloat evaluate(const BigFloat& theta, std::span<const BigFloat> mus) const;

  friend TrigRational operator+(const TrigRational& a, const TrigRational& b);
  friend TrigRational operator*(const Poly& k, const TrigRational& a);
};

// (1/mu_i) dV/dtheta_i, i in 1..4, for angles fixed by the scenario.
// Throws std::invalid_argument for more than one free angle or a collision.
TrigRational gradient_component(const SymmetryScenario& scenario, int i);

// sum_i V_theta_i, or sum_i mu_i V_theta_i when weighted.
TrigRational component_sum(const SymmetryScenario& scenario, bool weighted);

struct StrippedFactor {
  Poly factor;
  unsigned multiplicity;
};

struct Stripped {
  Poly poly;
  std::vector<StrippedFactor> factors;
};

// Removes powers of the factors whose zeros are vortex collisions. Over
// {s, c, ...}: s, 1 - c, 1 + c, and 1 + 2c for the trapezoid. Over
// {r, ...}: r, 1 + r^2, and 3r^2 - 1 for the trapezoid.
Stripped strip_collision_factors(const Poly& p, ScenarioKind kind);

// Numerator in r after s = 2r/(1+r^2), c = (r^2-1)/(1+r^2); the
// denominator and the (1+r^2) powers are dropped.
Poly half_angle_polynomialize(const TrigRational& t);

// atan2(2r, r^2 - 1), the inverse of the substitution above.
double angle_of_r(double r);
BigFloat angle_of_r(const BigFloat& r);

struct PipelineResult {
  int component;  // 2, 3 or 4
  TrigRational gradient;
  Stripped trig;  // after stripping in (s, c)
  Stripped r;     // after polynomializing and stripping in r
  Poly polynomial;  // content-stripped final form
};

// The reduction for V_theta2, V_theta3, V_theta4.
std::vector<PipelineResult> run_pipeline(const SymmetryScenario& scenario);

// Angles as rational multiples of pi. Exact Hessians need every pairwise
// cosine rational, which holds for differences in (1/3)pi Z and (1/2)pi Z.
struct ExactConfiguration {
  std::array<Rational, 4> angles_over_pi;
  std::array<Rational, 4> mus;
};

struct Configuration {
  std::array<BigFloat, 4> thetas;
  std::array<BigFloat, 4> mus;
};

// cos(pi q) for the rational q where it is rational; throws otherwise.
Rational exact_cos_pi(const Rational& q);

QMatrix hessian(const ExactConfiguration& config);
Matrix<BigFloat> hessian(const Configuration& config);
// diag(1/mu) * Hessian. Throws std::invalid_argument if some mu_i = 0.
QMatrix weighted_hessian(const ExactConfiguration& config);
Matrix<BigFloat> weighted_hessian(const Configuration& config);

BigFloat potential(const Configuration& config);
// Full gradient dV/dtheta_i (not divided by mu_i).
std::array<BigFloat, 4> gradient(const Configuration& config);

}  // namespace vortexsym
