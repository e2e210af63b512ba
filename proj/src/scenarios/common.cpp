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

#include <algorithm>

namespace vortexsym {

const Registry& mu_registry() {
  static const Registry vars = VarRegistry::make({"mu1", "mu2", "mu3", "mu4"});
  return vars;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::erratum: return "erratum";
  }
  return "?";
}

bool ScenarioReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.status == CheckStatus::fail; });
}

const OracleCheck* ScenarioReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool equal_up_to_scalar(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.size() != q.size()) return false;
  const MonomialOrder lex = MonomialOrder::lex();
  Rational k = p.leading_term(lex).coeff / q.leading_term(lex).coeff;
  return p == q * k;
}

bool same_ideal(std::span<const Poly> a, std::span<const Poly> b) {
  const MonomialOrder order = MonomialOrder::grevlex();
  GroebnerBasis ga = buchberger(a, order);
  GroebnerBasis gb = buchberger(b, order);
  Reducer ra(ga), rb(gb);
  for (const Poly& p : b)
    if (!ra(p).is_zero()) return false;
  for (const Poly& p : a)
    if (!rb(p).is_zero()) return false;
  return true;
}

namespace {

// Counts real roots of p with multiplicity, split by sign, by peeling one
// layer of multiplicity per round.
void count_roots(UPoly p, EigenCount& out) {
  std::size_t degree = static_cast<std::size_t>(std::max(p.degree(), 0));
  std::size_t real = 0;
  while (p.degree() > 0) {
    UPoly sf = squarefree_part(p);
    SturmSequence st(sf);
    Rational bound = root_bound(sf) + 1;
    out.positive += st.count(Rational(0), bound);
    out.negative += st.count(-bound, Rational(0));
    real += st.count(-bound, Rational(0)) + st.count(Rational(0), bound);
    p = divmod(p, sf).quotient;
  }
  out.nonreal += degree - real;
}

}  // namespace

EigenCount count_eigenvalues(const QMatrix& m) {
  UPoly chi = charpoly(m);
  EigenCount out;
  out.zero = chi.zero_multiplicity();
  std::vector<Rational> rest(chi.coeffs().begin() + static_cast<long>(out.zero), chi.coeffs().end());
  count_roots(UPoly(rest), out);
  return out;
}

EigenCount count_eigenvalues(const Matrix<BigFloat>& m, std::size_t known_zero) {
  std::vector<BigFloat> c = charpoly_coeffs(m);
  BigFloat scale = 0;
  for (const auto& x : c) scale = std::max(scale, BigFloat(abs(x)));
  const BigFloat tiny = scale * BigFloat("1e-40");
  for (std::size_t k = 0; k < known_zero; ++k)
    if (abs(c[k]) > tiny) throw std::runtime_error("expected zero eigenvalue is not numerically zero");
  EigenCount out;
  out.zero = known_zero;
  std::size_t k = known_zero;
  while (k + 1 < c.size() && abs(c[k]) <= tiny) ++k, ++out.zero;
  std::vector<Rational> rest;
  for (; k < c.size(); ++k) rest.push_back(to_rational(c[k]));
  count_roots(UPoly(rest), out);
  return out;
}

// ---- helpers shared by the drivers ------------------------------------------

namespace detail {

void add_check(ScenarioReport& rep, std::string name, bool ok, std::string detail) {
  rep.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void add_erratum(ScenarioReport& rep, std::string name, std::string detail) {
  rep.checks.push_back({std::move(name), CheckStatus::erratum, std::move(detail)});
}

std::string decimal(const BigFloat& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string decimal(const Rational& x, int digits) { return decimal(to_float<BigFloat>(x), digits); }

std::vector<Poly> polys_of(const std::vector<PipelineResult>& res) {
  std::vector<Poly> out;
  for (const auto& r : res) out.push_back(r.polynomial);
  return out;
}

std::vector<Poly> parse_all(const Registry& vars, std::span<const char* const> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(Poly::parse(vars, t));
  return out;
}

void require_nonzero(const Circulations& mu) {
  for (std::size_t i = 0; i < 4; ++i)
    if (sgn(mu[i]) == 0)
      throw DegenerateCirculation("mu" + std::to_string(i + 1) + " = 0; circulations must be nonzero");
}

std::vector<BigFloat> thetas_of_roots(const UPoly& p, const Rational& eps) {
  std::vector<BigFloat> out;
  for (const auto& iv : sturm_isolate(p)) {
    Rational r = refine(p, iv, eps).enclosure().mid();
    BigFloat t = angle_of_r(to_float<BigFloat>(r));
    if (t < 0) t += 2 * boost::math::constants::pi<BigFloat>();
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootReport root_report(const UPoly& p, const std::string& var, const IsolatingInterval& iv, const Rational& eps,
                       bool with_theta) {
  RootReport rep;
  rep.poly = p.to_string(var);
  rep.variable = var;
  rep.enclosure = refine(p, iv, eps).enclosure();
  if (with_theta) rep.theta2 = angle_of_r(to_float<BigFloat>(rep.enclosure.mid()));
  return rep;
}

Condition condition(std::string text, const Poly& p) { return {std::move(text), p}; }

std::string eigen_text(const EigenCount& e) {
  return "positive " + std::to_string(e.positive) + ", negative " + std::to_string(e.negative) + ", zero " +
         std::to_string(e.zero) + ", nonreal " + std::to_string(e.nonreal);
}

std::string mu_text(const Circulations& mu) {
  std::string s = "mu=(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + to_string(mu[i]);
  return s + ")";
}

Rational sample_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (sgn(q) != 0) return q;
  }
}

Poly specialize_mu(const Poly& p, const Circulations& mu) {
  Poly out = p;
  for (std::size_t i = 0; i < 4; ++i) {
    if (auto v = p.registry()->find("mu" + std::to_string(i + 1))) out = out.substitute(*v, Poly(p.registry(), mu[i]));
  }
  return out;
}

}  // namespace detail
}  // namespace vortexsym
