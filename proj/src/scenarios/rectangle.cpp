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


#include <algorithm>
#include <functional>

#include "scenarios/common.hpp"
#include "vortexsym/reference_data.hpp"

namespace vortexsym {

namespace {

using detail::add_check;

const BigFloat kPi = boost::math::constants::pi<BigFloat>();

struct Branch {
  const char* name;
  int sign;  // mu3 = sign mu1, mu4 = sign mu2
  std::function<BigFloat(const BigFloat&)> f;
};

const std::array<Branch, 2>& branches() {
  static const std::array<Branch, 2> b{{
      {"equal pairs, cot(theta2)", 1, [](const BigFloat& t) { return cos(t) / sin(t); }},
      {"opposite pairs, cos(2 theta2) csc(theta2)", -1, [](const BigFloat& t) { return cos(2 * t) / sin(t); }},
  }};
  return b;
}

Configuration rectangle_at(const BigFloat& theta, const Circulations& mu) {
  Configuration cfg{{BigFloat(0), theta, kPi, theta + kPi}, {}};
  for (std::size_t i = 0; i < 4; ++i) cfg.mus[i] = to_float<BigFloat>(mu[i]);
  return cfg;
}

// Common real roots in r of the pipeline at mu, as angles.
std::vector<BigFloat> branch_thetas(const std::vector<Poly>& pipeline, const Circulations& mu, const Rational& eps,
                                    UPoly* common) {
  UPoly g;
  for (const Poly& p : pipeline) {
    UPoly u = UPoly::from_poly(detail::specialize_mu(p, mu), 0);
    g = gcd(g, u);
  }
  if (common) *common = g;
  if (g.degree() <= 0) return {};
  return detail::thetas_of_roots(g, eps);
}

// Angles at multiples of pi/4; roots are refined to width eps in r and
// |d theta / d r| = 2/(1+r^2) <= 2.
bool near_all(const std::vector<BigFloat>& got, std::initializer_list<int> quarters, const Rational& eps) {
  if (got.size() != quarters.size()) return false;
  const BigFloat tol = 2 * to_float<BigFloat>(eps);
  std::size_t i = 0;
  for (int k : quarters)
    if (abs(got[i++] - kPi * k / 4) > tol) return false;
  return true;
}

}  // namespace

RectangleFindings analyze_rectangle(const ScenarioOptions& options) {
  const auto rect = SymmetryScenario::make(ScenarioKind::rectangle);
  RectangleFindings f{.pipeline = run_pipeline(rect),
                      .elimination = GroebnerBasis(r_registry(), MonomialOrder::grevlex(), {})};
  std::vector<Poly> polys = detail::polys_of(f.pipeline);
  const std::size_t drop[] = {0};
  f.elimination = eliminate(polys, drop);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.05, 2 * 3.141592653589793 - 0.05);
  for (const Branch& b : branches()) {
    std::array<std::vector<BigFloat>, 4> ratios;
    for (int k = 0; k < 20; ++k) {
      Rational m1 = detail::sample_nonzero(rng), m2 = detail::sample_nonzero(rng);
      BigFloat theta;
      do theta = BigFloat(angle(rng));
      while (abs(b.f(theta)) < 0.05 || abs(sin(theta)) < 0.05);
      Circulations mu{m1, m2, b.sign * m1, b.sign * m2};
      auto grad = gradient(rectangle_at(theta, mu));
      BigFloat scale = to_float<BigFloat>(m1 * m2) * b.f(theta);
      for (std::size_t i = 0; i < 4; ++i) ratios[i].push_back(grad[i] / scale);
    }
    for (int i = 0; i < 4; ++i) {
      BranchResidual r{b.name, i + 1, ratios[i].front(), 0};
      for (const auto& x : ratios[i]) r.max_deviation = std::max(r.max_deviation, BigFloat(abs(x - r.ratio)));
      if (r.ratio != 0) r.max_deviation /= abs(r.ratio);
      f.residuals.push_back(r);
    }
  }

  f.equal_branch_thetas = branch_thetas(polys, {1, Rational(7, 3), 1, Rational(7, 3)}, options.eps, nullptr);
  f.opposite_branch_thetas = branch_thetas(polys, {1, Rational(7, 3), -1, Rational(-7, 3)}, options.eps, nullptr);

  // Non-square rectangles: opposite pairs at odd multiples of pi/4.
  for (int k = 0; k < 12; ++k) {
    Rational m1 = detail::sample_nonzero(rng), m2 = detail::sample_nonzero(rng);
    Circulations mu{m1, m2, -m1, -m2};
    Configuration cfg = rectangle_at(kPi * (2 * (k % 4) + 1) / 4, mu);
    f.hessian_samples.push_back({mu, count_eigenvalues(hessian(cfg), 1)});
    f.unstable_samples.push_back({mu, count_eigenvalues(weighted_hessian(cfg), 1)});
  }
  return f;
}

ScenarioReport run_rectangle(const ScenarioOptions& options) {
  if (options.mu) detail::require_nonzero(*options.mu);
  RectangleFindings f = analyze_rectangle(options);
  ScenarioReport rep{.kind = ScenarioKind::rectangle};
  const Registry& rv = r_registry();
  const Registry& mu = mu_registry();
  const auto rect = SymmetryScenario::make(ScenarioKind::rectangle);

  rep.pipeline = detail::polys_of(f.pipeline);
  rep.elimination_basis = f.elimination.polys();
  for (const Poly& p : f.elimination.polys())
    rep.conditions.push_back(detail::condition(p.embed(mu).to_string() + " = 0", p.embed(mu)));
  rep.conditions.push_back(detail::condition("branch a: mu1 = mu3 (then mu2 = mu4)", Poly::parse(mu, "mu1 - mu3")));
  rep.conditions.push_back(detail::condition("branch b: mu1 = -mu3 (then mu2 = -mu4)", Poly::parse(mu, "mu1 + mu3")));

  auto published = detail::parse_all(rv, reference::kRectanglePipeline);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < 3; ++i) matched += equal_up_to_scalar(rep.pipeline[i], published[i]);
  add_check(rep, "rectangle_pipeline", matched == 3, std::to_string(matched) + "/3 numerators match up to scalar");

  const char* basis[] = {"mu2*mu3 - mu1*mu4", "mu1*mu2 - mu3*mu4", "mu1^2 - mu3^2"};
  std::size_t found = 0;
  for (const char* b : basis) {
    Poly want = Poly::parse(rv, b);
    found += std::any_of(f.elimination.polys().begin(), f.elimination.polys().end(),
                         [&](const Poly& p) { return equal_up_to_scalar(p, want); });
  }
  add_check(rep, "elimination_basis", found == 3 && f.elimination.size() == 3,
            "basis {mu2 mu3 - mu1 mu4, mu1 mu2 - mu3 mu4, mu1^2 - mu3^2}, " + std::to_string(f.elimination.size()) +
                " elements computed");

  const BigFloat tol("1e-10");
  for (const Branch& b : branches()) {
    bool ok = true;
    std::string ratios;
    for (const auto& r : f.residuals) {
      if (r.name != b.name) continue;
      ok = ok && r.ratio != 0 && r.max_deviation < tol;
      ratios += (ratios.empty() ? "" : ", ") + detail::decimal(r.ratio, 6);
    }
    add_check(rep, b.sign > 0 ? "branch_residual_equal" : "branch_residual_opposite", ok,
              std::string("grad V / (mu1 mu2 f) constant over 20 samples for f = ") + b.name + ": (" + ratios + ")");
  }

  add_check(rep, "equal_branch_angles", near_all(f.equal_branch_thetas, {2, 6}, options.eps), "theta2 in {pi/2, 3pi/2}");
  add_check(rep, "opposite_branch_angles", near_all(f.opposite_branch_thetas, {1, 3, 5, 7}, options.eps),
            "theta2 in {pi/4, 3pi/4, 5pi/4, 7pi/4}");
  UPoly g;
  branch_thetas(rep.pipeline, {1, Rational(7, 3), -1, Rational(-7, 3)}, options.eps, &g);
  for (const auto& iv : sturm_isolate(g)) rep.roots.push_back(detail::root_report(g, "r", iv, options.eps, true));

  std::size_t nondeg = 0, unstable = 0;
  for (const auto& [m, e] : f.hessian_samples) nondeg += e.zero == 1;
  // Sum mu = 0 on this branch, so the weighted Hessian's zero eigenvalue is
  // defective (left null vector mu is orthogonal to the right one).
  for (const auto& [m, e] : f.unstable_samples) unstable += e.positive < 3;
  add_check(rep, "nondegenerate", nondeg == f.hessian_samples.size(),
            std::to_string(nondeg) + "/" + std::to_string(f.hessian_samples.size()) +
                " Hessians at non-square rectangles have a simple zero eigenvalue");
  add_check(rep, "linearly_unstable", unstable == f.unstable_samples.size(),
            std::to_string(unstable) + "/" + std::to_string(f.unstable_samples.size()) +
                " weighted Hessians have fewer than 3 positive eigenvalues");

  add_check(rep, "component_sum_weighted", component_sum(rect, true).is_zero(), "sum mu_i V_theta_i = 0");
  if (component_sum(rect, false).is_zero())
    add_check(rep, "component_sum", true, "sum V_theta_i = 0");
  else
    detail::add_erratum(rep, "component_sum", "sum V_theta_i is not identically 0; the weighted sum is");

  for (std::size_t k = 0; k < std::min<std::size_t>(4, f.unstable_samples.size()); ++k)
    rep.stability.eigencounts.push_back("weighted, theta2 = " + (k == 0 ? std::string() : std::to_string(2 * k + 1)) + "pi/4, " +
                                        detail::mu_text(f.unstable_samples[k].first) + ": " +
                                        detail::eigen_text(f.unstable_samples[k].second));
  if (options.mu) {
    const Circulations& m = *options.mu;
    bool equal = m[0] == m[2] && m[1] == m[3], opposite = m[0] == -m[2] && m[1] == -m[3];
    if (!equal && !opposite) {
      rep.stability.eigencounts.push_back(detail::mu_text(m) + ": no rectangle exists");
    } else {
      for (const BigFloat& t : equal ? f.equal_branch_thetas : f.opposite_branch_thetas)
        rep.stability.eigencounts.push_back(
            "weighted, theta2 = " + detail::decimal(t, 10) + ", " + detail::mu_text(m) + ": " +
            detail::eigen_text(count_eigenvalues(weighted_hessian(rectangle_at(t, m)), 1)));
    }
  }
  rep.stability.verdict = "non-square rectangles are nondegenerate and never linearly stable";
  return rep;
}

}  // namespace vortexsym
