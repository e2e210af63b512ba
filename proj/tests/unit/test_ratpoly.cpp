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

#include "support/generators.hpp"
#include "vortexsym/poly.hpp"

using namespace vortexsym;
using vortexsym::testing::Gen;

TEST_CASE("rational literals") {
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("0.125") == make_rational(1, 8));
  CHECK(parse_rational("1e-3") == make_rational(1, 1000));
  CHECK(parse_rational("-2.5e1") == Rational(-25));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
}

TEST_CASE("parse and print round trip") {
  auto vars = VarRegistry::make({"x", "y", "z"});
  Poly p = Poly::parse(vars, "-3/2*x^2*y + z - 7");
  CHECK(p.to_string(MonomialOrder::lex()) == "-3/2*x^2*y + z - 7");
  CHECK(Poly::parse(vars, p.to_string()) == p);
  CHECK(Poly::parse(vars, "2x(y+1)^2 - x/2") == Poly::parse(vars, "2*x*y^2 + 4*x*y + 3/2*x"));
  CHECK(Poly::parse(vars, "-(x - y)") == Poly::parse(vars, "y - x"));
  CHECK(Poly::parse(vars, "0").is_zero());
  CHECK_THROWS_AS(Poly::parse(vars, "x + w"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse(vars, "x / y"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse(vars, "(x + 1"), std::invalid_argument);
}

TEST_CASE("random parse/print round trip") {
  auto vars = VarRegistry::make({"a", "b", "mu1", "mu2"});
  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Poly p = g.poly(vars, 6, 4, 30);
    for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(2)})
      REQUIRE(Poly::parse(vars, p.to_string(order)) == p);
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  auto vars = VarRegistry::make({"x", "y", "z", "w"});
  Gen g(20260101);
  Poly zero(vars), one(vars, Rational(1));
  int cases = 0;
  for (; cases < 10000; ++cases) {
    Poly a = g.poly(vars, 4, 3), b = g.poly(vars, 4, 3), c = g.poly(vars, 3, 2);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + zero == a);
    REQUIRE(a * one == a);
    REQUIRE((a - a).is_zero());
    REQUIRE(a + (-a) == zero);
  }
  CHECK(cases == 10000);
}

TEST_CASE("leading terms are multiplicative") {
  auto vars = VarRegistry::make({"x", "y", "z", "w", "v"});
  Gen g(7);
  const MonomialOrder orders[] = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                  MonomialOrder::elimination(0b01010), MonomialOrder::block(2, OrderKind::lex),
                                  MonomialOrder::elimination(0b00110, OrderKind::grevlex, OrderKind::lex)};
  for (int i = 0; i < 2000; ++i) {
    Poly a = g.poly(vars, 5, 4), b = g.poly(vars, 5, 4);
    if (a.is_zero() || b.is_zero()) continue;
    Poly ab = a * b;
    for (const auto& ord : orders) {
      const Term& la = a.leading_term(ord);
      const Term& lb = b.leading_term(ord);
      const Term& lab = ab.leading_term(ord);
      REQUIRE(lab.mono == la.mono * lb.mono);
      REQUIRE(lab.coeff == la.coeff * lb.coeff);
    }
  }
}

TEST_CASE("orders compare as documented") {
  auto vars = VarRegistry::make({"x", "y", "z"});
  auto lt = [&](const char* text, const MonomialOrder& o) {
    return Poly::parse(vars, text).leading_term(o).mono.to_string(*vars);
  };
  CHECK(lt("x*z^3 + y^2", MonomialOrder::lex()) == "x*z^3");
  CHECK(lt("x*y^2 + y^3 + x^2*z", MonomialOrder::grevlex()) == "x*y^2");
  CHECK(lt("x*z + y^2", MonomialOrder::grevlex()) == "y^2");
  CHECK(lt("x^3 + y^5", MonomialOrder::grevlex()) == "y^5");
  // z eliminated: any z beats pure x,y regardless of degree.
  CHECK(lt("x^9 + z", MonomialOrder::elimination(0b100)) == "z");
  CHECK(MonomialOrder::elimination(0b100).describe(*vars) == "elimination(z;grevlex;grevlex)");
}

TEST_CASE("substitution, evaluation, derivatives") {
  auto vars = VarRegistry::make({"x", "y"});
  Poly p = Poly::parse(vars, "x^3*y - 2*x + y^2");
  Poly q = p.substitute("x", Poly::parse(vars, "y + 1"));
  CHECK(q == Poly::parse(vars, "(y+1)^3*y - 2*(y+1) + y^2"));
  std::vector<Rational> pt{make_rational(1, 2), Rational(3)};
  CHECK(p.evaluate(pt) == Rational(3, 8) - 1 + 9);
  CHECK(p.derivative(0) == Poly::parse(vars, "3*x^2*y - 2"));
  std::vector<double> ptd{0.5, 3.0};
  CHECK(p.evaluate_as<double>(ptd) == doctest::Approx(8.375));
  auto groups = p.coefficients_in(std::vector<std::size_t>{1});
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].first.to_string(*vars) == "y^2");
  CHECK(groups[1].second == Poly::parse(vars, "x^3"));
  CHECK(groups[2].second == Poly::parse(vars, "-2*x"));
}

TEST_CASE("content strip and exact division") {
  auto vars = VarRegistry::make({"x", "y"});
  Poly p = Poly::parse(vars, "-4/3*x^2 + 2/9*y - 2");
  auto [c, prim] = content_strip(p);
  CHECK(prim == Poly::parse(vars, "6*x^2 - y + 9"));
  CHECK(c * prim == p);
  Poly a = Poly::parse(vars, "x^2 - y^2"), b = Poly::parse(vars, "x + y");
  CHECK(divide_exact(a, b) == Poly::parse(vars, "x - y"));
  CHECK_THROWS_AS(divide_exact(a, Poly::parse(vars, "x + 2*y")), NonExactDivision);
}

TEST_CASE("registries do not mix") {
  auto v1 = VarRegistry::make({"x"});
  auto v2 = VarRegistry::make({"x"});
  CHECK_THROWS_AS(Poly::variable(v1, 0) + Poly::variable(v2, 0), std::invalid_argument);
  auto big = VarRegistry::make({"y", "x"});
  CHECK(Poly::parse(v1, "x^2 + 1").embed(big) == Poly::parse(big, "x^2 + 1"));
  CHECK_THROWS(VarRegistry::make({"a", "a"}));
}
