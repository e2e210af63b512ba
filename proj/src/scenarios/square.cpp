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

#include "scenarios/common.hpp"

namespace vortexsym {

namespace {

using detail::add_check;
using detail::sample_nonzero;

ExactConfiguration square_at(const Rational& m1, const Rational& m2) {
  return {{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}, {m1, m2, m1, m2}};
}

UPoly product_of_roots(std::initializer_list<Rational> roots) {
  UPoly out = UPoly::constant(1);
  for (const Rational& r : roots) out = out * UPoly({-r, Rational(1)});
  return out;
}

}  // namespace

SquareFindings analyze_square(const ScenarioOptions& options) {
  auto sq = SymmetryScenario::make(ScenarioKind::square);
  SquareFindings f{
      .components = {gradient_component(sq, 1), gradient_component(sq, 2), gradient_component(sq, 3),
                     gradient_component(sq, 4)},
      .conditions = GroebnerBasis(mu_registry(), MonomialOrder::grevlex(), {}),
  };

  std::vector<Poly> nums;
  for (const auto& c : f.components) {
    // Constant in theta, so the denominator is a rational number.
    nums.push_back(c.num.embed(mu_registry()) * (1 / c.den.constant_term()));
  }
  f.conditions = buchberger(nums, MonomialOrder::grevlex());

  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < 10; ++k) {
    Rational m1 = sample_nonzero(rng), m2 = sample_nonzero(rng);
    auto cfg = square_at(m1, m2);
    UPoly h = product_of_roots({0, 2 * m1 * m2, (-3 * m1 * m1 + 2 * m1 * m2) / 2, (2 * m1 * m2 - 3 * m2 * m2) / 2});
    UPoly w = product_of_roots({0, (2 * m1 - 3 * m2) / 2, (-3 * m1 + 2 * m2) / 2, m1 + m2});
    f.samples.push_back({m1, m2, charpoly(hessian(cfg)) == h, charpoly(weighted_hessian(cfg)) == w});
  }

  const Registry& mu = mu_registry();
  Poly e1 = Poly::parse(mu, "1/2*(2*mu1 - 3*mu2)");
  Poly e2 = Poly::parse(mu, "1/2*(-3*mu1 + 2*mu2)");
  Poly e3 = Poly::parse(mu, "mu1 + mu2");
  f.literal_certificate = e1 + e2 + e3;
  f.scaled_certificate = Rational(2) * (e1 + e2) + e3;

  // Product of the nonzero Hessian eigenvalues is -(coefficient of x) when
  // x = 0 is simple. It has degree at most 6 in mu2 at mu1 = 1.
  std::vector<Rational> xs, ys;
  for (long k = 1; k <= 9; ++k) {
    xs.emplace_back(k);
    ys.push_back(-charpoly(hessian(square_at(1, Rational(k)))).coeff(1));
  }
  f.degeneracy = interpolate(xs, ys);
  for (const auto& iv : sturm_isolate(f.degeneracy)) {
    auto tight = refine(f.degeneracy, iv, Rational(1, Integer("1000000000000000000000000")));
    Rational guess = simplest_between(tight.lo, tight.hi);
    if (sgn(guess) != 0 && f.degeneracy(guess) == 0) f.degenerate_ratios.push_back(guess);
  }

  f.weighted_charpoly_ones = charpoly(weighted_hessian(square_at(1, 1)));
  f.hessian_at_3_2 = count_eigenvalues(hessian(square_at(3, 2)));
  return f;
}

ScenarioReport run_square(const ScenarioOptions& options) {
  if (options.mu) detail::require_nonzero(*options.mu);
  SquareFindings f = analyze_square(options);
  ScenarioReport rep{.kind = ScenarioKind::square};
  const Registry& mu = mu_registry();

  for (const auto& c : f.components) rep.pipeline.push_back(c.num.embed(mu) * (1 / c.den.constant_term()));
  rep.elimination_basis = f.conditions.polys();
  rep.conditions.push_back(detail::condition("mu1 = mu3", Poly::parse(mu, "mu1 - mu3")));
  rep.conditions.push_back(detail::condition("mu2 = mu4", Poly::parse(mu, "mu2 - mu4")));

  const char* published[] = {"1/2*(mu4 - mu2)", "1/2*(mu1 - mu3)", "1/2*(mu2 - mu4)", "1/2*(mu3 - mu1)"};
  bool comps = true;
  for (std::size_t i = 0; i < 4; ++i) comps = comps && rep.pipeline[i] == Poly::parse(mu, published[i]);
  add_check(rep, "square_gradient_values", comps, "1/2 (mu4-mu2, mu1-mu3, mu2-mu4, mu3-mu1)");

  std::vector<Poly> expect{Poly::parse(mu, "mu1 - mu3"), Poly::parse(mu, "mu2 - mu4")};
  add_check(rep, "conditions", f.conditions == buchberger(expect, MonomialOrder::grevlex()),
            "basis {mu1 - mu3, mu2 - mu4}");

  std::size_t h_ok = 0, w_ok = 0;
  for (const auto& s : f.samples) h_ok += s.hessian_formulas_exact, w_ok += s.weighted_formulas_exact;
  add_check(rep, "hessian_eigenvalue_formulas", h_ok == f.samples.size(),
            std::to_string(h_ok) + "/" + std::to_string(f.samples.size()) + " exact charpoly matches");
  add_check(rep, "weighted_eigenvalue_formulas", w_ok == f.samples.size(),
            std::to_string(w_ok) + "/" + std::to_string(f.samples.size()) + " exact charpoly matches");

  UPoly ones({0, Rational(-1, 2), Rational(-7, 4), Rational(-1), Rational(1)});  // x (x + 1/2)^2 (x - 2)
  add_check(rep, "weighted_eigenvalues_unit_mu", f.weighted_charpoly_ones == ones, "{0, -1/2, -1/2, 2}");

  std::vector<Rational> want{Rational(2, 3), Rational(3, 2)};
  auto got = f.degenerate_ratios;
  std::sort(got.begin(), got.end());
  std::string ratios;
  for (const auto& q : got) ratios += (ratios.empty() ? "" : ", ") + to_string(q);
  add_check(rep, "degenerate_ratios", got == want, "mu2/mu1 in {" + ratios + "}");
  add_check(rep, "degenerate_at_3_2", f.hessian_at_3_2.zero == 2,
            "Hessian at mu1=3, mu2=2: " + detail::eigen_text(f.hessian_at_3_2));
  for (const auto& iv : sturm_isolate(f.degeneracy))
    rep.roots.push_back(detail::root_report(f.degeneracy, "mu2/mu1", iv, options.eps, false));

  if (f.literal_certificate.is_zero()) {
    add_check(rep, "infeasibility_certificate_literal", true, "e1 + e2 + e3 = 0");
  } else {
    detail::add_erratum(rep, "infeasibility_certificate_literal",
                        "e1 + e2 + e3 = " + f.literal_certificate.to_string() + ", not 0; see scaled form");
  }
  add_check(rep, "infeasibility_certificate", f.scaled_certificate.is_zero(),
            "2 e1 + 2 e2 + e3 = 0, so the three cannot all be positive");

  add_check(rep, "component_sum_weighted", component_sum(SymmetryScenario::make(ScenarioKind::square), true).is_zero(), "sum mu_i V_theta_i = 0");
  add_check(rep, "component_sum", component_sum(SymmetryScenario::make(ScenarioKind::square), false).is_zero(), "sum V_theta_i = 0");

  EigenCount ones_count = count_eigenvalues(weighted_hessian(ExactConfiguration{
      {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}, {1, 1, 1, 1}}));
  rep.stability.eigencounts.push_back("weighted, mu=(1,1,1,1): " + detail::eigen_text(ones_count));
  rep.stability.eigencounts.push_back("Hessian, mu=(3,2,3,2): " + detail::eigen_text(f.hessian_at_3_2));
  if (options.mu) {
    const auto& m = *options.mu;
    ExactConfiguration cfg{{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}, m};
    rep.stability.eigencounts.push_back("weighted, " + detail::mu_text(m) + ": " +
                                        detail::eigen_text(count_eigenvalues(weighted_hessian(cfg))));
  }
  rep.stability.verdict = f.scaled_certificate.is_zero() ? "never linearly stable" : "undetermined";
  return rep;
}

}  // namespace vortexsym
