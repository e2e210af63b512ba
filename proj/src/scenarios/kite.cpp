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

#include "scenarios/common.hpp"
#include "vortexsym/reference_data.hpp"

namespace vortexsym {

namespace {

using detail::add_check;

constexpr std::size_t kR = 0;  // r in r_registry()

ExactConfiguration third_turn(const Circulations& mu) {
  return {{Rational(0), Rational(2, 3), Rational(1), Rational(-2, 3)}, mu};
}

UPoly quadratic_factor(const Rational& lambda2, const Rational& sum, const Rational& prod) {
  // x (x - lambda2) (x^2 - sum x + prod)
  return UPoly::x() * UPoly({-lambda2, Rational(1)}) * UPoly({prod, -sum, Rational(1)});
}

// Eigenvalues of the weighted Hessian at mu = (t, t, sigma, t), theta2 = 2pi/3,
// are 0 and the roots of x^3 + k3 x^2 + k2 x + k1. Three positive roots iff
// k3 < 0, k2 > 0, k1 < 0 and the cubic discriminant is nonnegative.
struct CubicFamily {
  UPoly k3, k2, k1, disc;

  bool stable(const std::array<int, 4>& signs) const {
    return signs[0] < 0 && signs[1] > 0 && signs[2] < 0 && signs[3] >= 0;
  }
  bool stable_at(const Rational& t) const {
    return sgn(t) != 0 && stable({k3.sign_at(t), k2.sign_at(t), k1.sign_at(t), disc.sign_at(t)});
  }
  bool stable_at_root(const UPoly& boundary, const IsolatingInterval& iv) const {
    if (iv.exact() && sgn(iv.lo) == 0) return false;
    return stable({sign_at_root(k3, boundary, iv), sign_at_root(k2, boundary, iv), sign_at_root(k1, boundary, iv),
                   sign_at_root(disc, boundary, iv)});
  }
};

CubicFamily weighted_family(const Rational& sigma) {
  std::vector<Rational> ts;
  std::array<std::vector<Rational>, 5> cs;
  for (long k = 1; k <= 7; ++k) {
    Rational t(k);
    UPoly chi = charpoly(weighted_hessian(third_turn({t, t, sigma, t})));
    ts.push_back(t);
    for (std::size_t j = 0; j < 5; ++j) cs[j].push_back(chi.coeff(j));
  }
  // Entries are linear in t, so degree 4 - j suffices; the seventh point checks it.
  auto fit = [&](std::size_t j) {
    UPoly p = interpolate(std::span(ts).first(6), std::span(cs[j]).first(6));
    if (p(ts[6]) != cs[j][6]) throw std::logic_error("weighted charpoly is not polynomial of degree <= 5 in t");
    return p;
  };
  if (!fit(0).is_zero()) throw std::logic_error("weighted Hessian has no kernel");
  CubicFamily f{fit(3), fit(2), fit(1), {}};
  const UPoly& a = f.k3;
  const UPoly& b = f.k2;
  const UPoly& c = f.k1;
  f.disc = a * a * b * b - Rational(4) * b * b * b - Rational(4) * a * a * a * c + Rational(18) * a * b * c -
           Rational(27) * c * c;
  return f;
}

// Maximal runs of stable points along the real line in t. Boundary roots
// and the open gaps between them alternate; each is classified exactly.
std::vector<StabilityWindow> stable_windows(const CubicFamily& fam, const std::string& variable,
                                            const Rational& eps, UPoly* boundary_out) {
  UPoly boundary = squarefree_part(UPoly::x() * fam.k3 * fam.k2 * fam.k1 * fam.disc);
  if (boundary_out) *boundary_out = boundary;
  auto roots = sturm_isolate(boundary);

  // Make consecutive intervals strictly separated so a gap point exists.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    Rational w = eps;
    while (roots[i].hi >= roots[i + 1].lo) {
      roots[i] = refine(boundary, roots[i], w);
      roots[i + 1] = refine(boundary, roots[i + 1], w);
      w /= 2;
    }
  }

  struct Piece {
    bool stable;
    std::optional<std::size_t> root;  // nullopt for a gap
  };
  std::vector<Piece> pieces;
  auto gap = [&](const Rational& t) { pieces.push_back({fam.stable_at(t), std::nullopt}); };
  if (roots.empty()) {
    gap(Rational(1));
  } else {
    gap(roots.front().lo - 1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      pieces.push_back({fam.stable_at_root(boundary, roots[i]), i});
      gap(i + 1 < roots.size() ? Rational((roots[i].hi + roots[i + 1].lo) / 2) : Rational(roots.back().hi + 1));
    }
  }

  std::vector<StabilityWindow> out;
  for (std::size_t i = 0; i < pieces.size();) {
    if (!pieces[i].stable) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < pieces.size() && pieces[j + 1].stable) ++j;
    StabilityWindow w;
    w.variable = variable;
    // A run starting at a gap is open at the preceding root, or unbounded.
    if (pieces[i].root) {
      w.lower = refine(boundary, roots[*pieces[i].root], eps).enclosure();
      w.lower_closed = true;
    } else if (i > 0) {
      w.lower = refine(boundary, roots[*pieces[i - 1].root], eps).enclosure();
    }
    if (pieces[j].root) {
      w.upper = refine(boundary, roots[*pieces[j].root], eps).enclosure();
      w.upper_closed = true;
    } else if (j + 1 < pieces.size()) {
      w.upper = refine(boundary, roots[*pieces[j + 1].root], eps).enclosure();
    }
    out.push_back(std::move(w));
    i = j + 1;
  }
  return out;
}

std::string window_text(const StabilityWindow& w) {
  std::string lo = w.lower ? detail::decimal(w.lower->mid(), 8) : "-inf";
  std::string hi = w.upper ? detail::decimal(w.upper->mid(), 8) : "+inf";
  return w.variable + " in " + (w.lower_closed ? "[" : "(") + lo + ", " + hi + (w.upper_closed ? "]" : ")");
}

}  // namespace

KiteFindings analyze_kite(const ScenarioOptions& options) {
  const auto kite = SymmetryScenario::make(ScenarioKind::kite);
  const Registry& rv = r_registry();
  const GroebnerBasis empty(rv, MonomialOrder::grevlex(), {});
  KiteFindings f{.pipeline = run_pipeline(kite), .elimination = empty, .forced = empty};
  std::vector<Poly> polys = detail::polys_of(f.pipeline);
  const std::size_t drop[] = {kR};
  f.elimination = eliminate(polys, drop);

  // V_theta2 with mu4 = mu2.
  f.config_factor =
      content_strip(f.pipeline[0].polynomial.substitute("mu4", Poly::variable(rv, "mu2"))).primitive;

  auto sextic_at = [&](const Circulations& mu) {
    Poly p = detail::specialize_mu(f.config_factor, mu);
    return UPoly::from_poly(strip_collision_factors(p, ScenarioKind::kite).poly, kR);
  };
  {
    UPoly u = UPoly::from_poly(detail::specialize_mu(f.config_factor, {1, 1, 1, 1}), kR);
    f.unit_roots_exact = u(Rational(1)) == 0 && divmod(u, UPoly({Rational(-1), Rational(0), Rational(3)})).remainder.is_zero();
  }

  f.probe = options.mu.value_or(Circulations{1, 1, 1, 1});
  if (f.probe[1] == f.probe[3]) f.probe_roots = sturm_isolate(sextic_at(f.probe));

  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < 100; ++k) {
    Rational m1 = detail::sample_nonzero(rng), m2 = detail::sample_nonzero(rng), m3 = detail::sample_nonzero(rng);
    Circulations mu{m1, m2, m3, m2};
    f.parity_samples.push_back({mu, count_real_roots(sextic_at(mu))});
  }

  // theta2 = 2pi/3: c = -1/2, s = sqrt(3)/2. With V_theta_i = (A + B s)/(D + E s)
  // the s-free part is (A D - 3/4 B E) and the s part (B D - A E), over
  // D^2 - 3/4 E^2.
  const Registry& tv = trig_registry();
  const Registry& mu = mu_registry();
  std::vector<Poly> forced;
  for (int i = 1; i <= 4; ++i) {
    TrigRational g = gradient_component(kite, i);
    Poly num = g.num.substitute("c", Poly(tv, Rational(-1, 2)));
    Poly den = g.den.substitute("c", Poly(tv, Rational(-1, 2)));
    Poly a(tv), b(tv);
    const std::size_t s_var[] = {0};
    for (const auto& [m, coeff] : num.coefficients_in(s_var)) (m[0] == 0 ? a : b) = coeff;
    Rational d(0), e(0);
    for (const auto& [m, coeff] : den.coefficients_in(s_var)) (m[0] == 0 ? d : e) = coeff.constant_term();
    Rational norm = d * d - Rational(3, 4) * e * e;
    Poly even = a * d - b * e * Rational(3, 4);
    if (!even.is_zero()) throw std::logic_error("gradient at 2pi/3 has a rational part");
    Poly odd = (b * d - a * e) * (1 / norm);
    // sqrt(3) * mu_i * odd * sqrt(3)/2
    f.gradient_at_third[i - 1] = (Poly::variable(tv, "mu" + std::to_string(i)) * odd * Rational(3, 2)).embed(mu);
    if (!odd.is_zero()) forced.push_back(odd.embed(mu));
  }
  f.forced = buchberger(forced, MonomialOrder::grevlex());

  f.hessian_formulas_exact = f.weighted_formulas_exact = true;
  for (int k = 0; k < 10; ++k) {
    Rational m1 = detail::sample_nonzero(rng), m3 = detail::sample_nonzero(rng);
    auto cfg = third_turn({m1, m1, m3, m1});
    Rational d_h = m1 * m1 + 12 * m1 * m3 + 108 * m3 * m3;
    Rational s_h = m1 * (-m1 + 6 * m3) / 2;
    Rational p_h = m1 * m1 * ((-m1 + 6 * m3) * (-m1 + 6 * m3) - d_h) / 16;
    f.hessian_formulas_exact &= charpoly(hessian(cfg)) == quadratic_factor(-m1 * (m1 - 3 * m3) / 2, s_h, p_h);
    Rational d_w = 121 * m1 * m1 + 282 * m1 * m3 + 81 * m3 * m3;
    Rational s_w = (7 * m1 + 3 * m3) / 4;
    Rational p_w = ((7 * m1 + 3 * m3) * (7 * m1 + 3 * m3) - d_w) / 64;
    f.weighted_formulas_exact &= charpoly(weighted_hessian(cfg)) == quadratic_factor((-m1 + 3 * m3) / 2, s_w, p_w);
  }

  f.windows_positive = stable_windows(weighted_family(Rational(1)), "mu1/mu3 (mu3 > 0)", options.eps, &f.boundary);
  f.windows_negative = stable_windows(weighted_family(Rational(-1)), "mu1/|mu3| (mu3 < 0)", options.eps, nullptr);
  return f;
}

ScenarioReport run_kite(const ScenarioOptions& options) {
  if (options.mu) detail::require_nonzero(*options.mu);
  KiteFindings f = analyze_kite(options);
  ScenarioReport rep{.kind = ScenarioKind::kite};
  const Registry& rv = r_registry();
  const Registry& mu = mu_registry();
  const auto kite = SymmetryScenario::make(ScenarioKind::kite);

  rep.pipeline = detail::polys_of(f.pipeline);
  rep.elimination_basis = f.elimination.polys();
  rep.conditions.push_back(detail::condition("mu2 = mu4", Poly::parse(mu, "mu2 - mu4")));

  auto published = detail::parse_all(rv, reference::kKitePipeline);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < 3; ++i) matched += equal_up_to_scalar(rep.pipeline[i], published[i]);
  add_check(rep, "kite_pipeline", matched == 3, std::to_string(matched) + "/3 numerators match up to scalar");

  bool elim = f.elimination.size() == 1 && equal_up_to_scalar(f.elimination[0], Poly::parse(rv, "mu2 - mu4"));
  add_check(rep, "elimination_basis", elim, "basis {mu2 - mu4}");
  add_check(rep, "config_factor", equal_up_to_scalar(f.config_factor, Poly::parse(rv, reference::kKiteConfigFactor)),
            "even sextic in r when mu4 = mu2");
  add_check(rep, "unit_mu_roots", f.unit_roots_exact, "r = 1 and 3 r^2 = 1 are exact roots at mu = (1,1,1,1)");

  std::size_t good = 0;
  for (const auto& s : f.parity_samples) good += s.real_roots % 2 == 0 && s.real_roots <= 6;
  add_check(rep, "kite_count_parity", good == f.parity_samples.size(),
            std::to_string(good) + "/" + std::to_string(f.parity_samples.size()) +
                " samples have an even count <= 6");

  if (f.probe[1] == f.probe[3]) {
    std::size_t n = f.probe_roots.size();
    add_check(rep, "probe_count", n % 2 == 0 && n <= 6,
              std::to_string(n) + " kite configurations at " + detail::mu_text(f.probe));
    Poly p = detail::specialize_mu(f.config_factor, f.probe);
    UPoly u = UPoly::from_poly(strip_collision_factors(p, ScenarioKind::kite).poly, 0);
    for (const auto& iv : f.probe_roots) rep.roots.push_back(detail::root_report(u, "r", iv, options.eps, true));
  } else {
    add_check(rep, "probe_count", true, detail::mu_text(f.probe) + " has mu2 != mu4, so no kite exists");
  }

  // Published value of sqrt(3) grad V at theta2 = 2pi/3, compared up to one common scalar.
  const char* third[] = {"mu1*(mu4 - mu2)", "mu2*(mu1 - mu4)", "0", "mu4*(mu2 - mu1)"};
  std::optional<Rational> k;
  bool grad = true;
  for (std::size_t i = 0; i < 4; ++i) {
    Poly want = Poly::parse(mu, third[i]);
    if (want.is_zero() || f.gradient_at_third[i].is_zero()) {
      grad = grad && want.is_zero() && f.gradient_at_third[i].is_zero();
      continue;
    }
    const MonomialOrder lex = MonomialOrder::lex();
    Rational ratio = f.gradient_at_third[i].leading_term(lex).coeff / want.leading_term(lex).coeff;
    if (!k) k = ratio;
    grad = grad && f.gradient_at_third[i] == want * *k;
  }
  add_check(rep, "gradient_at_2pi_3", grad,
            "sqrt(3) grad V = " + std::string(k ? to_string(*k) : "?") +
                " * (mu1(mu4-mu2), mu2(mu1-mu4), 0, mu4(mu2-mu1))");
  std::vector<Poly> want_forced{Poly::parse(mu, "mu1 - mu2"), Poly::parse(mu, "mu2 - mu4")};
  add_check(rep, "forced_condition", f.forced == buchberger(want_forced, MonomialOrder::grevlex()),
            "theta2 = 2pi/3 forces mu1 = mu2 = mu4");
  rep.conditions.push_back(detail::condition("mu1 = mu2 (theta2 = 2pi/3)", Poly::parse(mu, "mu1 - mu2")));

  add_check(rep, "hessian_eigenvalues_2pi_3", f.hessian_formulas_exact,
            "charpoly = x (x - lambda2)(x - lambda3)(x - lambda4) at 10 samples");
  add_check(rep, "weighted_eigenvalues_2pi_3", f.weighted_formulas_exact,
            "weighted charpoly matches lambda2 = (-mu1 + 3 mu3)/2 and lambda3,4 at 10 samples");

  // (3/121)(-47 + 4 sqrt 70) and -1/3.
  const BigFloat lower_ref = BigFloat(3) / 121 * (-47 + 4 * sqrt(BigFloat(70)));
  const BigFloat upper_ref = BigFloat(-1) / 3;
  const BigFloat tol("1e-5");
  bool window = false;
  std::string wtext = "no window found";
  if (f.windows_positive.size() == 1) {
    const auto& w = f.windows_positive.front();
    wtext = window_text(w);
    window = w.lower && w.upper && abs(to_float<BigFloat>(w.lower->mid()) - lower_ref) < tol &&
             abs(to_float<BigFloat>(w.upper->mid()) - upper_ref) < tol;
  } else if (!f.windows_positive.empty()) {
    wtext = std::to_string(f.windows_positive.size()) + " windows";
  }
  add_check(rep, "stability_window", window, wtext + ", expected [" + detail::decimal(lower_ref, 8) + ", " +
                                                 detail::decimal(upper_ref, 8) + "]");
  for (const auto& w : f.windows_positive) rep.stability.windows.push_back(w);
  for (const auto& w : f.windows_negative) rep.stability.windows.push_back(w);

  add_check(rep, "component_sum_weighted", component_sum(kite, true).is_zero(), "sum mu_i V_theta_i = 0");
  TrigRational plain = component_sum(kite, false);
  if (plain.is_zero())
    add_check(rep, "component_sum", true, "sum V_theta_i = 0");
  else
    detail::add_erratum(rep, "component_sum", "sum V_theta_i is not identically 0; the weighted sum is");

  if (f.probe[0] == f.probe[1] && f.probe[1] == f.probe[3]) {
    EigenCount e = count_eigenvalues(weighted_hessian(third_turn(f.probe)));
    rep.stability.eigencounts.push_back("weighted, theta2 = 2pi/3, " + detail::mu_text(f.probe) + ": " +
                                        detail::eigen_text(e));
  }
  const Rational t(-1677, 5000);
  Circulations inside{t, t, 1, t};
  rep.stability.eigencounts.push_back("weighted, theta2 = 2pi/3, " + detail::mu_text(inside) + ": " +
                                      detail::eigen_text(count_eigenvalues(weighted_hessian(third_turn(inside)))));
  std::string verdict = "theta2 = 2pi/3 linearly stable iff ";
  for (std::size_t i = 0; i < rep.stability.windows.size(); ++i)
    verdict += (i ? " or " : "") + window_text(rep.stability.windows[i]);
  rep.stability.verdict = rep.stability.windows.empty() ? "theta2 = 2pi/3 never linearly stable" : verdict;
  return rep;
}

}  // namespace vortexsym
