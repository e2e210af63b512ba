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

#include <cmath>

#include "support/generators.hpp"
#include "vortexsym/realroots.hpp"

using namespace vortexsym;
using vortexsym::testing::Gen;

namespace {

UPoly up(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return UPoly(c);
}

UPoly from_text(const char* text) {
  auto vars = VarRegistry::make({"x"});
  return UPoly::from_poly(Poly::parse(vars, text), 0);
}

std::vector<double> roots_of(const UPoly& p, const Rational& eps) {
  std::vector<double> out;
  for (const auto& iv : sturm_isolate(p)) out.push_back(to_double(refine_midpoint(p, iv, eps)));
  return out;
}

QMatrix random_unimodular(Gen& g, std::size_t n) {
  // Product of elementary row operations with integer multipliers.
  QMatrix u = QMatrix::identity(n);
  for (int step = 0; step < 8; ++step) {
    std::size_t i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    QMatrix e = QMatrix::identity(n);
    e(i, j) = g.integer(-3, 3);
    u = e * u;
  }
  return u;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace

TEST_CASE("univariate arithmetic and gcd") {
  UPoly p = from_text("x^3 - 3*x + 2");  // (x-1)^2 (x+2)
  CHECK(p.degree() == 3);
  CHECK(p(Rational(1)) == 0);
  CHECK(squarefree_part(p) == from_text("x^2 + x - 2"));
  CHECK(gcd(p, p.derivative()) == from_text("x - 1"));
  auto qr = divmod(from_text("x^2 + 1"), from_text("x - 1"));
  CHECK(qr.quotient == from_text("x + 1"));
  CHECK(qr.remainder == UPoly::constant(2));
  CHECK(p.reflect() == from_text("-x^3 + 3*x + 2"));
  CHECK(p.shift(Rational(1)) == from_text("x^3 + 3*x^2"));
  CHECK(from_text("x^3 + 2*x^2").zero_multiplicity() == 2);
  // Power sums of the roots 1, 2, 3.
  std::vector<Rational> sums{6, 14, 36};
  CHECK(from_power_sums(sums) == from_text("x^3 - 6*x^2 + 11*x - 6"));
}

TEST_CASE("Descartes sign changes") {
  auto q = descartes_positive(from_text("-8 + 22*x - 54*x^2 + 117*x^3 - 98*x^4 + 17*x^5"));
  CHECK(q.sign_changes == 5);
  CHECK(q.positive_roots == 3);
  CHECK_FALSE(q.exact);

  auto none = descartes_positive(from_text("x^2 + 1"));
  CHECK(none.sign_changes == 0);
  CHECK(none.positive_roots == 0);
  CHECK(none.exact);

  auto two = descartes_positive(from_text("x^2 - 3*x + 2"));
  CHECK(two.sign_changes == 2);
  CHECK(two.positive_roots == 2);
  CHECK(two.exact);
  CHECK_THROWS_AS(descartes_positive(UPoly()), std::domain_error);
}

TEST_CASE("Sturm isolation") {
  UPoly g = from_text("-1 + 33*x^2 - 202*x^4 + 146*x^6 - 117*x^8 + 13*x^10");
  auto r = roots_of(g, make_rational(1, 1000000000));
  REQUIRE(r.size() == 6);
  const double want[] = {-2.79493, -0.375563, -0.199167, 0.199167, 0.375563, 2.79493};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(r[i] - want[i]) < 1e-5);

  UPoly b = from_text("-8 + 22*x - 54*x^2 + 117*x^3 - 98*x^4 + 17*x^5");
  auto rb = roots_of(b, make_rational(1, 1000000000));
  REQUIRE(rb.size() == 3);
  CHECK(std::abs(rb[0] - 0.638032) < 1e-5);
  CHECK(std::abs(rb[1] - 0.843716) < 1e-5);
  CHECK(std::abs(rb[2] - 4.330096) < 1e-5);

  auto ivs = sturm_isolate(from_text("x^2 - 2"));
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].hi <= 0);
  CHECK(ivs[1].lo >= 0);

  // Repeated and rational roots are isolated once each.
  UPoly rep = from_text("x^3 - 3*x + 2");
  CHECK(count_real_roots(rep) == 2);
  CHECK(sturm_isolate(rep).size() == 2);
  CHECK(count_real_roots(from_text("x^4 + 1")) == 0);
  CHECK(sturm_isolate(UPoly::constant(5)).empty());
}

TEST_CASE("refinement reaches the requested width") {
  UPoly p = from_text("x^2 - 2");
  auto ivs = sturm_isolate(p);
  Rational eps = make_rational(1, 1000000000);
  auto iv = refine(p, ivs[1], eps);
  CHECK(iv.hi - iv.lo < eps);
  CHECK(p.sign_at(iv.lo) != p.sign_at(iv.hi));
  CHECK(std::abs(to_double(iv.enclosure().mid()) - std::sqrt(2.0)) < 1e-9);

  // Each bisection halves the width and keeps the sign change.
  IsolatingInterval cur = ivs[1];
  for (int step = 0; step < 30; ++step) {
    Rational w = cur.hi - cur.lo;
    IsolatingInterval next = refine(p, cur, w);
    CHECK(next.hi - next.lo == w / 2);
    CHECK(p.sign_at(next.lo) * p.sign_at(next.hi) < 0);
    cur = next;
  }

  // A root hit exactly by a midpoint collapses the interval.
  UPoly lin = from_text("x - 1/2");
  auto hit = refine(lin, {Rational(0), Rational(1)}, make_rational(1, 100));
  CHECK(hit.exact());
  CHECK(hit.lo == make_rational(1, 2));
}

TEST_CASE("refinement with a root at the lower endpoint") {
  UPoly p = from_text("x^2 - x");  // roots 0 and 1
  auto iv = refine(p, {Rational(0), Rational(3, 2)}, make_rational(1, 1000));
  CHECK(iv.lo <= 1);
  CHECK(iv.hi >= 1);
  CHECK(iv.hi - iv.lo < make_rational(1, 1000));
}

TEST_CASE("Sturm count agrees with Descartes when all roots are real") {
  Gen g(7);
  for (int round = 0; round < 50; ++round) {
    UPoly p = UPoly::constant(1);
    int n = static_cast<int>(g.integer(1, 6));
    for (int k = 0; k < n; ++k) p = p * UPoly({-g.rational(9, 4), Rational(1)});
    auto d = descartes_positive(p.primitive());
    // With only real roots Descartes counts positive roots with multiplicity.
    std::size_t with_mult = 0;
    UPoly rest = p;
    while (rest.zero_multiplicity() > 0) rest = divmod(rest, UPoly::x()).quotient;
    UPoly tmp = rest;
    for (;;) {
      std::size_t pos = count_positive_roots(tmp);
      if (pos == 0) break;
      with_mult += pos;
      tmp = gcd(tmp, tmp.derivative());
      if (tmp.degree() <= 0) break;
    }
    CHECK(d.sign_changes == with_mult);
  }
}

TEST_CASE("characteristic polynomial and inertia") {
  QMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = -1;
  CHECK(inertia(d) == Inertia{1, 1, 0});
  CHECK(charpoly(d) == from_text("x^2 - x - 2"));

  QMatrix a(3, 3);
  long vals[3][3] = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
  CHECK(charpoly(a) == from_text("x^3 - 6*x^2 + 10*x - 4"));
  CHECK(inertia(a) == Inertia{3, 0, 0});

  QMatrix sing(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sing(i, j) = (i + 1) * (j + 1);
  CHECK(inertia(sing) == Inertia{1, 0, 2});
  CHECK(rank(sing) == 1);
  auto ker = kernel_basis(sing);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    for (const Rational& x : sing.apply(v)) CHECK(x == 0);
  }

  QMatrix asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(inertia(asym), std::invalid_argument);
}

TEST_CASE("inertia is invariant under unimodular congruence") {
  Gen g(11);
  for (int round = 0; round < 10; ++round) {
    std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = g.rational(5, 3);
    // Force some rank deficiency half the time.
    if (round % 2 == 0) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(j, n - 1) = 0;
    }
    Inertia base = inertia(m);
    CHECK(base.positive + base.negative + base.zero == n);
    QMatrix u = random_unimodular(g, n);
    QMatrix c = transpose(u) * m * u;
    CHECK(inertia(c) == base);
  }
}

TEST_CASE("Hermite counting on small ideals") {
  auto x = VarRegistry::make({"x"});
  std::vector<Poly> real{Poly::parse(x, "x^2 - 1")};
  auto h = hermite_count(real);
  CHECK(h.real_roots == 2);
  CHECK(h.complex_roots == 2);

  std::vector<Poly> cplx{Poly::parse(x, "x^2 + 1")};
  h = hermite_count(cplx);
  CHECK(h.real_roots == 0);
  CHECK(h.complex_roots == 2);

  // A double root counts once.
  std::vector<Poly> dbl{Poly::parse(x, "(x - 1)^2*(x + 3)")};
  h = hermite_count(dbl);
  CHECK(h.real_roots == 2);
  CHECK(h.complex_roots == 2);
  CHECK(h.dimension == 3);

  // Circle meets line in two real points; circle meets far line in two complex points.
  auto xy = VarRegistry::make({"x", "y"});
  std::vector<Poly> meet{Poly::parse(xy, "x^2 + y^2 - 1"), Poly::parse(xy, "x - y")};
  CHECK(hermite_count(meet).real_roots == 2);
  std::vector<Poly> miss{Poly::parse(xy, "x^2 + y^2 - 1"), Poly::parse(xy, "x + y - 3")};
  h = hermite_count(miss);
  CHECK(h.real_roots == 0);
  CHECK(h.complex_roots == 2);

  std::vector<Poly> line{Poly::parse(xy, "x - y")};
  CHECK_THROWS_AS(hermite_count(line), std::domain_error);
}

TEST_CASE("multiplication matrices commute and traces match eigenvalues") {
  auto xy = VarRegistry::make({"x", "y"});
  std::vector<Poly> gens{Poly::parse(xy, "x^2 - 3*x + 2"), Poly::parse(xy, "y^2 - 5")};
  QuotientRing q(buchberger(gens, MonomialOrder::grevlex()));
  CHECK(q.dimension() == 4);
  QMatrix mx = q.multiplication_matrix(Poly::parse(xy, "x"));
  QMatrix my = q.multiplication_matrix(Poly::parse(xy, "y"));
  auto diff = mx * my;
  auto other = my * mx;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(diff(i, j) == other(i, j));
  // Sum of x over the four points (1,±√5), (2,±√5) is 6.
  CHECK(q.trace(Poly::parse(xy, "x")) == 6);
  CHECK(mx.trace() == 6);
  CHECK(q.trace(Poly::parse(xy, "y^2")) == 20);
  CHECK(q.trace(Poly::parse(xy, "x*y")) == 0);
}

TEST_CASE("Hermite count equals Sturm count on random univariate ideals") {
  Gen g(23);
  auto x = VarRegistry::make({"x"});
  for (int round = 0; round < 20; ++round) {
    UPoly p = UPoly::constant(g.nonzero_rational());
    int linear = static_cast<int>(g.integer(0, 4));
    int quadratic = static_cast<int>(g.integer(0, 2));
    if (linear + quadratic == 0) linear = 1;
    for (int k = 0; k < linear; ++k) {
      UPoly f({-g.rational(6, 3), Rational(1)});
      p = p * f;
      if (g.integer(0, 3) == 0) p = p * f;  // occasional repeated root
    }
    for (int k = 0; k < quadratic; ++k) {
      // (x - a)^2 + b with b of either sign.
      Rational a = g.rational(4, 2), b = g.nonzero_rational(6, 2);
      p = p * UPoly({a * a + b, -2 * a, Rational(1)});
    }
    std::vector<Poly> gens{p.to_poly(x, 0)};
    auto h = hermite_count(gens);
    CAPTURE(p.to_string());
    CHECK(h.real_roots == count_real_roots(p));
    CHECK(static_cast<int>(h.complex_roots) == squarefree_part(p).degree());
    CHECK(h.real_roots <= h.complex_roots);
  }
}

TEST_CASE("interval arithmetic encloses exact values") {
  Interval a{Rational(-1), Rational(2)};
  Interval b{Rational(3), Rational(4)};
  CHECK((a * b).lo == -4);
  CHECK((a * b).hi == 8);
  CHECK(pow(a, 2).lo == 0);
  CHECK(pow(a, 2).hi == 4);
  CHECK_THROWS(b / a);
  CHECK((a / b).lo == make_rational(-1, 3));
  UPoly p = from_text("x^2 - 2");
  Interval r = evaluate(p, Interval{Rational(1), Rational(2)});
  CHECK(r.contains_zero());
  CHECK(evaluate(p, Interval{Rational(2), Rational(3)}).certain_sign() == 1);
  std::string text = format_interval(Interval{make_rational(1, 3), make_rational(1, 3)}, 6);
  CHECK(text.find("3.33333") != std::string::npos);
}
