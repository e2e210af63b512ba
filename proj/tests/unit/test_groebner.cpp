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

#include "support/generators.hpp"
#include "vortexsym/groebner.hpp"

using namespace vortexsym;
using vortexsym::testing::Gen;

namespace {

std::vector<Poly> parse_all(const Registry& vars, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(Poly::parse(vars, t));
  return out;
}

// Normalized copy for scalar-invariant comparison.
std::vector<Poly> normalized(std::vector<Poly> polys, const MonomialOrder& order) {
  for (Poly& p : polys) p = content_strip(p, order).primitive;
  return polys;
}

}  // namespace

TEST_CASE("plane and paraboloid bases") {
  auto vars = VarRegistry::make({"x", "y", "z"});
  auto gens = parse_all(vars, {"x - y - z + 2", "x^2 + y^2 - z"});

  auto lex = buchberger(gens, MonomialOrder::lex());
  CHECK(lex.polys() == normalized(parse_all(vars, {"4 - 4*y + 2*y^2 - 5*z + 2*y*z + z^2", "2 + x - y - z"}),
                                  MonomialOrder::lex()));

  auto grevlex = buchberger(gens, MonomialOrder::grevlex());
  CHECK(grevlex.polys() == normalized(parse_all(vars, {"2 + x - y - z", "4 - 4*y + 2*y^2 - 5*z + 2*y*z + z^2"}),
                                      MonomialOrder::grevlex()));

  std::vector<std::size_t> drop{2};
  auto elim = eliminate(gens, drop);
  REQUIRE(elim.size() == 1);
  CHECK(elim[0] == content_strip(Poly::parse(vars, "-2 - x + x^2 + y + y^2"), elim.order()).primitive);
}

TEST_CASE("division with remainder") {
  auto vars = VarRegistry::make({"x", "y"});
  auto r = reduce(Poly::parse(vars, "x^2 - 1"), parse_all(vars, {"x - 1"}), MonomialOrder::lex());
  CHECK(r.quotients[0] == Poly::parse(vars, "x + 1"));
  CHECK(r.remainder.is_zero());
  auto r2 = reduce(Poly::parse(vars, "x"), parse_all(vars, {"x^2", "x^3"}), MonomialOrder::lex());
  CHECK(r2.quotients[0].is_zero());
  CHECK(r2.quotients[1].is_zero());
  CHECK(r2.remainder == Poly::parse(vars, "x"));

  Gen g(3);
  for (int i = 0; i < 300; ++i) {
    Poly p = g.poly(vars, 6, 4);
    std::vector<Poly> ds;
    for (int k = 0; k < 3; ++k) {
      Poly d = g.poly(vars, 3, 2);
      if (!d.is_zero()) ds.push_back(d);
    }
    if (ds.empty()) continue;
    auto out = reduce(p, ds, MonomialOrder::grevlex());
    Poly sum = out.remainder;
    for (std::size_t k = 0; k < ds.size(); ++k) sum += out.quotients[k] * ds[k];
    REQUIRE(sum == p);
    for (const Term& t : out.remainder.terms())
      for (const Poly& d : ds) REQUIRE_FALSE(d.leading_term(MonomialOrder::grevlex()).mono.divides(t.mono));
  }
}

TEST_CASE("normal forms and quotient bases") {
  auto x1 = VarRegistry::make({"x"});
  auto G = buchberger(parse_all(x1, {"x^2 - 1"}), MonomialOrder::grevlex());
  CHECK(normal_form(Poly::parse(x1, "x^2"), G) == Poly(x1, Rational(1)));
  auto sm = standard_monomials(G);
  REQUIRE(sm.size() == 2);
  CHECK(sm[1].to_string(*x1) == "x");

  auto xy = VarRegistry::make({"x", "y"});
  auto H = buchberger(parse_all(xy, {"x^2", "x*y", "y^3"}), MonomialOrder::grevlex());
  std::vector<std::string> names;
  for (const Monomial& m : standard_monomials(H)) names.push_back(m.to_string(*xy));
  CHECK(names == std::vector<std::string>{"1", "y", "x", "y^2"});

  auto K = buchberger(parse_all(xy, {"x*y - 1"}), MonomialOrder::grevlex());
  CHECK_FALSE(is_zero_dimensional(K));
  CHECK_THROWS_AS(standard_monomials(K), std::domain_error);
}

TEST_CASE("unit ideal collapses") {
  auto vars = VarRegistry::make({"x", "y"});
  auto G = buchberger(parse_all(vars, {"x*y - 1", "x", "y + 3"}), MonomialOrder::lex());
  CHECK(G.is_unit_ideal());
  auto single = buchberger(parse_all(vars, {"x"}), MonomialOrder::lex());
  CHECK(single.polys() == parse_all(vars, {"x"}));
}

TEST_CASE("random ideals: fixed point, membership, uniqueness, vanishing") {
  auto vars = VarRegistry::make({"x", "y", "z"});
  Gen g(424242);
  const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(0b001)};
  int points = 0;
  for (int round = 0; round < 24; ++round) {
    // Every generator vanishes at a chosen rational point.
    std::vector<Rational> pt{g.rational(), g.rational(), g.rational()};
    std::vector<Poly> lin;
    for (std::size_t v = 0; v < 3; ++v) lin.push_back(Poly::variable(vars, v) - Poly(vars, pt[v]));
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      Poly f(vars);
      for (const Poly& l : lin) f += g.poly(vars, 2, 1, 4) * l;
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    const MonomialOrder& ord = orders[round % 3];
    auto G = buchberger(gens, ord);
    REQUIRE(is_groebner_basis(G.polys(), ord));
    for (const Poly& f : gens) REQUIRE(ideal_contains(G, f));
    for (const Poly& b : G.polys()) REQUIRE(b.evaluate(pt) == 0);
    ++points;

    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
    std::reverse(shuffled.begin(), shuffled.end());
    REQUIRE(buchberger(shuffled, ord) == G);

    BuchbergerOptions plain;
    plain.chain_criterion = false;
    plain.coprime_criterion = false;
    REQUIRE(buchberger(gens, ord, plain) == G);

    // Reduced: no term of any element is divisible by another leading monomial.
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        const Monomial& lj = G[j].leading_term(ord).mono;
        for (const Term& t : G[i].terms()) REQUIRE_FALSE(lj.divides(t.mono));
      }
  }
  CHECK(points >= 20);
}

TEST_CASE("elimination drops variables and stays inside the ideal") {
  auto vars = VarRegistry::make({"t", "x", "y"});
  Gen g(17);
  for (int round = 0; round < 10; ++round) {
    std::vector<Poly> gens{g.poly(vars, 3, 2, 5), g.poly(vars, 3, 2, 5), Poly::parse(vars, "t*x - y + 1")};
    std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
    std::vector<std::size_t> drop{0};
    auto E = eliminate(gens, drop);
    auto full = buchberger(gens, E.order());
    for (const Poly& p : E.polys()) {
      REQUIRE_FALSE(p.involves(0));
      REQUIRE(ideal_contains(full, p));
    }
    // Every full-basis element free of t must already be in the eliminated basis.
    for (const Poly& p : full.polys())
      if (!p.involves(0)) REQUIRE(std::find(E.polys().begin(), E.polys().end(), p) != E.polys().end());
  }
  // Twisted cubic: eliminating t from (x - t, y - t^2) gives y - x^2.
  auto G = eliminate(parse_all(vars, {"x - t", "y - t^2"}), std::vector<std::size_t>{0});
  REQUIRE(G.size() == 1);
  CHECK(G[0] == Poly::parse(vars, "x^2 - y"));
}
