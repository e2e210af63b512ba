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

#include "vortexsym/trigvortex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "vortexsym/univariate.hpp"

namespace vortexsym {

namespace {

constexpr std::size_t kS = 0, kC = 1;

Poly tvar(std::size_t i) { return Poly::variable(trig_registry(), i); }
Poly tconst(const Rational& q) { return Poly(trig_registry(), q); }

// (cos, sin) of k t as polynomials in s, c (k may be negative).
std::pair<Poly, Poly> multiple_angle(int k) {
  const int n = k < 0 ? -k : k;
  Poly c = tvar(kC), s = tvar(kS);
  Poly t_prev = tconst(1), t_cur = c;          // T_0, T_1
  Poly u_prev = tconst(0), u_cur = tconst(1);  // U_{-1}, U_0
  if (n == 0) return {tconst(1), tconst(0)};
  for (int j = 1; j < n; ++j) {
    Poly t_next = tconst(2) * c * t_cur - t_prev;
    Poly u_next = tconst(2) * c * u_cur - u_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
    u_prev = std::move(u_cur);
    u_cur = std::move(u_next);
  }
  Poly sin_kt = s * u_cur;
  if (k < 0) sin_kt = -sin_kt;
  return {t_cur, sin_kt};
}

std::pair<Poly, Poly> cos_sin(const AngleExpr& a) {
  if (a.multiples.size() > 1) throw std::invalid_argument("more than one free angle");
  int k = a.multiples.empty() ? 0 : a.multiples.begin()->second;
  auto [co, si] = multiple_angle(k);
  switch (((a.quarter_turns % 4) + 4) % 4) {
    case 1: return {-si, co};
    case 2: return {-co, -si};
    case 3: return {si, -co};
    default: return {co, si};
  }
}

// Scales num and den together so den is primitive with positive lead.
TrigRational normalized(Poly num, Poly den) {
  if (num.is_zero()) return {std::move(num), tconst(1)};
  ContentSplit cs = content_strip(den);
  num *= 1 / cs.content;
  return {std::move(num), std::move(cs.primitive)};
}

AngleExpr normalized(AngleExpr a) {
  for (auto it = a.multiples.begin(); it != a.multiples.end();)
    it = it->second == 0 ? a.multiples.erase(it) : std::next(it);
  a.quarter_turns = ((a.quarter_turns % 4) + 4) % 4;
  return a;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::square: return "square";
    case ScenarioKind::kite: return "kite";
    case ScenarioKind::rectangle: return "rectangle";
    case ScenarioKind::trapezoid: return "trapezoid";
  }
  return "?";
}

AngleExpr AngleExpr::free(int multiple, int quarter_turns, std::string name) {
  AngleExpr a;
  a.multiples[std::move(name)] = multiple;
  a.quarter_turns = quarter_turns;
  return normalized(a);
}

AngleExpr operator-(const AngleExpr& a, const AngleExpr& b) {
  AngleExpr d = a;
  for (const auto& [name, k] : b.multiples) d.multiples[name] -= k;
  d.quarter_turns -= b.quarter_turns;
  return normalized(d);
}

SymmetryScenario SymmetryScenario::make(ScenarioKind kind) {
  using A = AngleExpr;
  switch (kind) {
    case ScenarioKind::square: return {kind, {A::fixed(0), A::fixed(1), A::fixed(2), A::fixed(3)}};
    case ScenarioKind::kite: return {kind, {A::fixed(0), A::free(1), A::fixed(2), A::free(-1)}};
    case ScenarioKind::rectangle: return {kind, {A::fixed(0), A::free(1), A::fixed(2), A::free(1, 2)}};
    case ScenarioKind::trapezoid: return {kind, {A::fixed(0), A::free(1), A::free(2), A::free(3)}};
  }
  throw std::invalid_argument("unknown scenario");
}

const Registry& trig_registry() {
  static const Registry r = VarRegistry::make({"s", "c", "mu1", "mu2", "mu3", "mu4"});
  return r;
}

const Registry& r_registry() {
  static const Registry r = VarRegistry::make({"r", "mu1", "mu2", "mu3", "mu4"});
  return r;
}

Poly reduce_pythagorean(const Poly& p) {
  if (p.degree_in(kS) < 2) return p;
  const Registry& vars = p.registry();
  Poly one_minus_c2 = Poly(vars, Rational(1)) - Poly::variable(vars, kC, 2);
  std::vector<Term> low;
  Poly out(vars);
  for (const Term& t : p.terms()) {
    unsigned e = t.mono[kS];
    if (e < 2) {
      low.push_back(t);
      continue;
    }
    Monomial m = t.mono;
    m.set(kS, e % 2);
    out += Poly::monomial(vars, m, t.coeff) * one_minus_c2.pow(e / 2);
  }
  return out + Poly::from_terms(vars, std::move(low));
}

TrigRational TrigRational::constant(const Rational& q) { return normalized(tconst(q), tconst(1)); }

TrigRational TrigRational::substitute_mu(std::size_t mu_index, const Poly& value) const {
  if (mu_index < 1 || mu_index > 4) throw std::out_of_range("mu index must be 1..4");
  return normalized(reduce_pythagorean(num.substitute(kC + mu_index, value)), den);
}

BigFloat TrigRational::evaluate(const BigFloat& theta, std::span<const BigFloat> mus) const {
  std::vector<BigFloat> pt{sin(theta), cos(theta)};
  pt.insert(pt.end(), mus.begin(), mus.end());
  return num.evaluate_as<BigFloat>(pt) / den.evaluate_as<BigFloat>(pt);
}

TrigRational operator+(const TrigRational& a, const TrigRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den == b.den) {
    return normalized(a.num + b.num, a.den);
  }
  Poly fa, fb, den;
  if (!a.den.involves(kS) && !b.den.involves(kS)) {
    // Both live in Q[c]: combine over the lcm.
    UPoly ua = UPoly::from_poly(a.den, kC), ub = UPoly::from_poly(b.den, kC);
    UPoly g = gcd(ua, ub);
    UPoly ca = divmod(ub, g).quotient, cb = divmod(ua, g).quotient;
    fa = ca.to_poly(trig_registry(), kC);
    fb = cb.to_poly(trig_registry(), kC);
    den = a.den * fa;
  } else {
    fa = b.den;
    fb = a.den;
    den = a.den * b.den;
  }
  return normalized(reduce_pythagorean(a.num * fa + b.num * fb), reduce_pythagorean(den));
}

TrigRational operator*(const Poly& k, const TrigRational& a) {
  return normalized(reduce_pythagorean(k * a.num), a.den);
}

TrigRational gradient_component(const SymmetryScenario& scenario, int i) {
  if (i < 1 || i > 4) throw std::out_of_range("vortex index must be 1..4");
  std::set<std::string> free_angles;
  for (const AngleExpr& a : scenario.thetas)
    for (const auto& [name, k] : a.multiples)
      if (k != 0) free_angles.insert(name);
  if (free_angles.size() > 1) throw std::invalid_argument("scenario leaves more than one free angle");

  TrigRational sum = TrigRational::constant(0);
  for (int j = 1; j <= 4; ++j) {
    if (j == i) continue;
    AngleExpr d = scenario.thetas[static_cast<std::size_t>(i - 1)] - scenario.thetas[static_cast<std::size_t>(j - 1)];
    auto [co, si] = cos_sin(d);
    Poly one_minus_cos = reduce_pythagorean(tconst(1) - co);
    if (one_minus_cos.is_zero()) throw std::invalid_argument("vortices collide");
    // mu_j sin d (1 - 2 cos d) / (2 (1 - cos d))
    Poly num = tvar(kC + static_cast<std::size_t>(j)) * si * (tconst(1) - tconst(2) * co);
    sum = sum + TrigRational{reduce_pythagorean(num), tconst(2) * one_minus_cos};
  }
  return sum;
}

TrigRational component_sum(const SymmetryScenario& scenario, bool weighted) {
  TrigRational sum = TrigRational::constant(0);
  for (int i = 1; i <= 4; ++i) {
    TrigRational g = gradient_component(scenario, i);
    sum = sum + (weighted ? tvar(kC + static_cast<std::size_t>(i)) * g : g);
  }
  return sum;
}

namespace {

// Divides out every power of `factor`, returning the multiplicity.
unsigned strip_power(Poly& p, const Poly& factor) {
  unsigned k = 0;
  while (!p.is_zero()) {
    try {
      p = divide_exact(p, factor);
    } catch (const NonExactDivision&) {
      break;
    }
    ++k;
  }
  return k;
}

unsigned strip_variable(Poly& p, std::size_t var) {
  if (p.is_zero()) return 0;
  unsigned k = ~0u;
  for (const Term& t : p.terms()) k = std::min<unsigned>(k, t.mono[var]);
  if (k == 0) return 0;
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.mono.set(var, t.mono[var] - k);
  p = Poly::from_terms(p.registry(), std::move(terms));
  return k;
}

}  // namespace

Stripped strip_collision_factors(const Poly& p, ScenarioKind kind) {
  if (p.is_zero()) throw std::invalid_argument("cannot strip factors of the zero polynomial");
  const Registry& vars = p.registry();
  Stripped out{p, {}};
  auto record = [&](const Poly& f, unsigned k) {
    if (k > 0) out.factors.push_back({f, k});
  };
  bool trapezoid = kind == ScenarioKind::trapezoid;
  if (auto s = vars->find("s"); s && vars->find("c")) {
    std::size_t sv = *s, cv = *vars->find("c");
    Poly one(vars, Rational(1)), c = Poly::variable(vars, cv);
    record(Poly::variable(vars, sv), strip_variable(out.poly, sv));
    std::vector<Poly> factors{one - c, one + c};
    if (trapezoid) factors.push_back(one + Rational(2) * c);
    for (const Poly& f : factors) record(f, strip_power(out.poly, f));
  } else if (auto r = vars->find("r")) {
    Poly one(vars, Rational(1)), r2 = Poly::variable(vars, *r, 2);
    record(Poly::variable(vars, *r), strip_variable(out.poly, *r));
    record(one + r2, strip_power(out.poly, one + r2));
    if (trapezoid) {
      Poly f = Rational(3) * r2 - one;
      record(f, strip_power(out.poly, f));
    }
  } else {
    throw std::invalid_argument("registry has neither (s, c) nor r");
  }
  return out;
}

Poly half_angle_polynomialize(const TrigRational& t) {
  const Registry& rv = r_registry();
  const Poly& n = t.num;
  if (n.is_zero()) return Poly(rv);
  unsigned d = 0;
  for (const Term& term : n.terms()) d = std::max<unsigned>(d, term.mono[kS] + term.mono[kC]);
  Poly r = Poly::variable(rv, std::size_t{0});
  Poly one(rv, Rational(1)), r2 = r * r;
  Poly sin_num = Rational(2) * r, cos_num = r2 - one, den = one + r2;
  Poly out(rv);
  for (const Term& term : n.terms()) {
    unsigned a = term.mono[kS], b = term.mono[kC];
    Monomial mu;
    for (std::size_t k = 0; k < 4; ++k) mu.set(k + 1, term.mono[kC + 1 + k]);
    out += Poly::monomial(rv, mu, term.coeff) * sin_num.pow(a) * cos_num.pow(b) * den.pow(d - a - b);
  }
  return out;
}

double angle_of_r(double r) { return std::atan2(2 * r, r * r - 1); }

BigFloat angle_of_r(const BigFloat& r) { return atan2(BigFloat(2) * r, r * r - 1); }

std::vector<PipelineResult> run_pipeline(const SymmetryScenario& scenario) {
  std::vector<PipelineResult> out;
  for (int i = 2; i <= 4; ++i) {
    PipelineResult res;
    res.component = i;
    res.gradient = gradient_component(scenario, i);
    if (res.gradient.is_zero()) throw std::domain_error("gradient component vanishes identically");
    res.trig = strip_collision_factors(res.gradient.num, scenario.kind);
    Poly rp = half_angle_polynomialize({res.trig.poly, res.gradient.den});
    res.r = strip_collision_factors(rp, scenario.kind);
    res.polynomial = content_strip(res.r.poly).primitive;
    out.push_back(std::move(res));
  }
  return out;
}

// ---- Hessians ---------------------------------------------------------------

Rational exact_cos_pi(const Rational& q) {
  // Reduce q modulo 2 into [0, 2).
  Rational half = q / 2;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  Rational x = q - Rational(2 * fl);
  mpz_class den = x.get_den();
  if (den == 1) return x == 0 ? Rational(1) : Rational(-1);
  if (den == 2) return Rational(0);
  if (den == 3) {
    // pi/3, 5pi/3 -> 1/2; 2pi/3, 4pi/3 -> -1/2.
    mpz_class num = x.get_num();
    return (num == 1 || num == 5) ? make_rational(1, 2) : make_rational(-1, 2);
  }
  throw std::domain_error("cos(" + to_string(q) + " pi) is irrational");
}

namespace {

template <class T, class CosFn>
Matrix<T> assemble_hessian(const std::array<T, 4>& mus, CosFn cos_of) {
  Matrix<T> h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      T c = cos_of(i, j);
      if (c == T(1)) throw std::invalid_argument("vortices collide");
      // w_ij = mu_i mu_j (cos d + 1/(2 - 2 cos d))
      T w = mus[i] * mus[j] * (c + T(1) / (T(2) - T(2) * c));
      h(i, j) = -w;
      h(i, i) += w;
    }
  return h;
}

template <class T>
Matrix<T> left_divide_mu(Matrix<T> h, const std::array<T, 4>& mus) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (mus[i] == T(0)) throw std::invalid_argument("circulation mu_" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < 4; ++j) h(i, j) /= mus[i];
  }
  return h;
}

}  // namespace

QMatrix hessian(const ExactConfiguration& config) {
  return assemble_hessian<Rational>(config.mus, [&](std::size_t i, std::size_t j) {
    return exact_cos_pi(config.angles_over_pi[i] - config.angles_over_pi[j]);
  });
}

Matrix<BigFloat> hessian(const Configuration& config) {
  return assemble_hessian<BigFloat>(config.mus, [&](std::size_t i, std::size_t j) {
    BigFloat d = config.thetas[i] - config.thetas[j];
    if (abs(sin(d / 2)) < BigFloat("1e-40")) throw std::invalid_argument("vortices collide");
    return BigFloat(cos(d));
  });
}

QMatrix weighted_hessian(const ExactConfiguration& config) { return left_divide_mu(hessian(config), config.mus); }

Matrix<BigFloat> weighted_hessian(const Configuration& config) {
  return left_divide_mu(hessian(config), config.mus);
}

BigFloat potential(const Configuration& config) {
  BigFloat v = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      BigFloat d = config.thetas[i] - config.thetas[j];
      v -= config.mus[i] * config.mus[j] * (cos(d) + log(BigFloat(2) - BigFloat(2) * cos(d)) / 2);
    }
  return v;
}

std::array<BigFloat, 4> gradient(const Configuration& config) {
  std::array<BigFloat, 4> g{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      BigFloat d = config.thetas[i] - config.thetas[j];
      BigFloat sd = sin(d);
      g[i] += config.mus[i] * config.mus[j] * (sd - sd / (BigFloat(2) - BigFloat(2) * cos(d)));
    }
  return g;
}

}  // namespace vortexsym
