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

#include "vortexsym/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <set>
#include <stdexcept>

namespace vortexsym {

namespace {

// Engine representation: integer coefficients, terms sorted descending by
// the order key of the working order.
struct ETerm {
  OrderKey key;
  Monomial mono;
  Integer coeff;
};
using EPoly = std::vector<ETerm>;

Integer content_of(const EPoly& f, std::size_t from = 0) {
  Integer g = 0;
  for (std::size_t i = from; i < f.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_coeffs(EPoly& f, const Integer& c, std::size_t from = 0) {
  for (std::size_t i = from; i < f.size(); ++i)
    mpz_divexact(f[i].coeff.get_mpz_t(), f[i].coeff.get_mpz_t(), c.get_mpz_t());
}

// Primitive with a positive leading coefficient.
void normalize(EPoly& f) {
  if (f.empty()) return;
  Integer c = content_of(f);
  if (sgn(f[0].coeff) < 0) c = -c;
  if (c != 1) divide_coeffs(f, c);
}

class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t nvars) : order_(order), nvars_(nvars) {}

  OrderKey key(const Monomial& m) const { return order_.key(m, nvars_); }

  // p = scale * result, result primitive.
  EPoly import(const Poly& p, Rational* scale = nullptr) const {
    EPoly e;
    e.reserve(p.size());
    Integer den = 1;
    for (const Term& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const Term& t : p.terms()) {
      Integer c = den / t.coeff.get_den();
      c *= t.coeff.get_num();
      e.push_back({key(t.mono), t.mono, std::move(c)});
    }
    std::sort(e.begin(), e.end(), [](const ETerm& a, const ETerm& b) { return compare(a.key, b.key) > 0; });
    Integer c = e.empty() ? Integer(1) : content_of(e);
    if (c != 1) divide_coeffs(e, c);
    if (scale) {
      *scale = Rational(c, den);
      scale->canonicalize();
    }
    return e;
  }

  static Poly export_poly(const EPoly& e, const Registry& vars) {
    std::vector<Term> terms;
    terms.reserve(e.size());
    for (const ETerm& t : e) terms.push_back({t.mono, Rational(t.coeff)});
    return Poly::from_terms(vars, std::move(terms));
  }

  // a * f[fs..] - b * m * g[gs..]
  EPoly reduce_step(EPoly&& f, std::size_t fs, const Integer& a, const EPoly& g, std::size_t gs, const Monomial& m,
                    const OrderKey& km, const Integer& b) const {
    EPoly out;
    out.reserve(f.size() - fs + g.size() - gs);
    const bool scale_f = a != 1;
    std::size_t i = fs, j = gs;
    ETerm shifted;
    bool have_shifted = false;
    auto load = [&] {
      if (j < g.size()) {
        shifted.key = km + g[j].key;
        shifted.mono = m * g[j].mono;
        have_shifted = true;
      } else {
        have_shifted = false;
      }
    };
    load();
    while (i < f.size() || have_shifted) {
      int c = i == f.size() ? -1 : !have_shifted ? 1 : compare(f[i].key, shifted.key);
      if (c > 0) {
        if (scale_f) f[i].coeff *= a;
        out.push_back(std::move(f[i++]));
      } else if (c < 0) {
        shifted.coeff = g[j].coeff * b;
        shifted.coeff = -shifted.coeff;
        out.push_back(shifted);
        ++j;
        load();
      } else {
        Integer v = scale_f ? Integer(f[i].coeff * a) : f[i].coeff;
        v -= g[j].coeff * b;
        if (sgn(v) != 0) out.push_back({f[i].key, f[i].mono, std::move(v)});
        ++i;
        ++j;
        load();
      }
    }
    return out;
  }

  EPoly spoly(const EPoly& f, const EPoly& g) const {
    Monomial l = lcm(f[0].mono, g[0].mono);
    Monomial mf = l.quotient(f[0].mono), mg = l.quotient(g[0].mono);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f[0].coeff.get_mpz_t(), g[0].coeff.get_mpz_t());
    Integer a = g[0].coeff / d, b = f[0].coeff / d;
    EPoly fs;
    fs.reserve(f.size());
    OrderKey kf = key(mf);
    for (std::size_t i = 1; i < f.size(); ++i) fs.push_back({kf + f[i].key, mf * f[i].mono, f[i].coeff});
    return reduce_step(std::move(fs), 0, a, g, 1, mg, key(mg), b);
  }

  // Fraction-free reduction. On return, result ≡ mult * f modulo the
  // reducers (mult is multiplied into *mult when given).
  EPoly reduce(EPoly f, const std::vector<const EPoly*>& reducers, bool full, Rational* mult) const {
    EPoly done;
    std::size_t head = 0;
    unsigned steps = 0;
    Integer d, a, b;
    while (head < f.size()) {
      const EPoly* g = nullptr;
      for (const EPoly* cand : reducers)
        if ((*cand)[0].mono.divides(f[head].mono)) {
          g = cand;
          break;
        }
      if (!g) {
        if (!full) break;
        done.push_back(std::move(f[head++]));
        continue;
      }
      const Integer& lg = (*g)[0].coeff;
      mpz_gcd(d.get_mpz_t(), lg.get_mpz_t(), f[head].coeff.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), lg.get_mpz_t(), d.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), f[head].coeff.get_mpz_t(), d.get_mpz_t());
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      Monomial m = f[head].mono.quotient((*g)[0].mono);
      f = reduce_step(std::move(f), head + 1, a, *g, 1, m, key(m), b);
      head = 0;
      if (a != 1) {
        for (ETerm& t : done) t.coeff *= a;
        if (mult) *mult *= a;
      }
      if (++steps % 8 == 0) {
        Integer c = content_of(done);
        if (c != 1) {
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), content_of(f).get_mpz_t());
          if (c > 1) {
            divide_coeffs(done, c);
            divide_coeffs(f, c);
            if (mult) *mult /= c;
          }
        }
      }
    }
    done.insert(done.end(), std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(head)),
                std::make_move_iterator(f.end()));
    return done;
  }

 private:
  MonomialOrder order_;
  std::size_t nvars_;
};

Registry common_registry(std::span<const Poly> polys) {
  if (polys.empty()) throw std::invalid_argument("need at least one polynomial");
  Registry vars = polys[0].registry();
  for (const Poly& p : polys)
    if (p.registry() != vars) throw std::invalid_argument("polynomials belong to different variable registries");
  return vars;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  OrderKey key;
  unsigned sugar;
  std::size_t seq;
};

}  // namespace

DivisionResult reduce(const Poly& p, std::span<const Poly> divisors, const MonomialOrder& order) {
  DivisionResult out;
  Registry vars = p.registry();
  for (const Poly& d : divisors) {
    if (d.registry() != vars) throw std::invalid_argument("polynomials belong to different variable registries");
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    out.quotients.emplace_back(vars);
  }
  std::vector<Term> leads;
  for (const Poly& d : divisors) leads.push_back(d.leading_term(order));
  Poly rest = p;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    Term t = rest.leading_term(order);
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].mono.divides(t.mono)) continue;
      Poly q = Poly::monomial(vars, t.mono.quotient(leads[i].mono), t.coeff / leads[i].coeff);
      out.quotients[i] += q;
      rest -= q * divisors[i];
      divided = true;
      break;
    }
    if (!divided) {
      rest -= Poly::monomial(vars, t.mono, t.coeff);
      remainder.push_back(std::move(t));
    }
  }
  out.remainder = Poly::from_terms(vars, std::move(remainder));
  return out;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  Monomial l = lcm(lf.mono, lg.mono);
  return Poly::monomial(f.registry(), l.quotient(lf.mono), 1 / lf.coeff) * f -
         Poly::monomial(g.registry(), l.quotient(lg.mono), 1 / lg.coeff) * g;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.vars_ == b.vars_ && a.order_ == b.order_ && a.polys_ == b.polys_;
}

GroebnerBasis buchberger(std::span<const Poly> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
  Registry vars = common_registry(generators);
  Engine eng(order, vars->size());
  BuchbergerStats local;
  BuchbergerStats& stats = options.stats ? *options.stats : local;

  std::vector<EPoly> polys;
  std::vector<unsigned> sugar;
  std::vector<std::size_t> basis;
  std::vector<const EPoly*> reducers;
  std::vector<Pair> pairs;  // sorted so that back() is the next pair
  std::size_t seq = 0;
  bool unit = false;

  auto refresh_reducers = [&] {
    reducers.clear();
    for (std::size_t idx : basis) reducers.push_back(&polys[idx]);
  };

  auto insert = [&](EPoly h, unsigned s) {
    normalize(h);
    if (h[0].mono.is_one()) {
      unit = true;
      return;
    }
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    sugar.push_back(s);
    const Monomial lh = polys[hi][0].mono;
    const unsigned deg_h = lh.degree();

    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g : basis) {
      const Monomial& lg = polys[g][0].mono;
      cands.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }
    std::vector<Cand> kept;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const Cand& c = cands[i];
      bool keep = true;
      if (options.chain_criterion && !c.coprime) {
        for (std::size_t k = i + 1; keep && k < cands.size(); ++k) keep = !cands[k].l.divides(c.l);
        for (std::size_t k = 0; keep && k < kept.size(); ++k) keep = !kept[k].l.divides(c.l);
      }
      if (keep)
        kept.push_back(c);
      else
        ++stats.chain_skips;
    }

    if (options.chain_criterion) {
      std::erase_if(pairs, [&](const Pair& p) {
        if (!lh.divides(p.lcm)) return false;
        bool drop = !(lcm(polys[p.i][0].mono, lh) == p.lcm) && !(lcm(polys[p.j][0].mono, lh) == p.lcm);
        if (drop) ++stats.chain_skips;
        return drop;
      });
    }

    for (const Cand& c : kept) {
      if (options.coprime_criterion && c.coprime) {
        ++stats.coprime_skips;
        continue;
      }
      const unsigned dl = c.l.degree();
      const unsigned sg = sugar[c.g] + dl - polys[c.g][0].mono.degree();
      const unsigned sh = s + dl - deg_h;
      pairs.push_back({c.g, hi, c.l, eng.key(c.l), std::max(sg, sh), seq++});
      ++stats.pairs_created;
    }
    std::sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (options.selection == PairSelection::sugar && a.sugar != b.sugar) return a.sugar > b.sugar;
      int c = compare(a.key, b.key);
      return c != 0 ? c > 0 : a.seq > b.seq;
    });

    std::erase_if(basis, [&](std::size_t g) { return lh.divides(polys[g][0].mono); });
    basis.push_back(hi);
    refresh_reducers();
  };

  for (const Poly& f : generators) {
    if (f.is_zero()) continue;
    EPoly h = eng.reduce(eng.import(f), reducers, true, nullptr);
    if (h.empty()) continue;
    insert(std::move(h), f.total_degree());
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    Pair p = pairs.back();
    pairs.pop_back();
    ++stats.pairs_reduced;
    EPoly h = eng.reduce(eng.spoly(polys[p.i], polys[p.j]), reducers, true, nullptr);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    if (options.trace)
      std::fprintf(stderr, "gb: pair %zu sugar=%u terms=%zu lc_bits=%zu basis=%zu queue=%zu\n", stats.pairs_reduced,
                   p.sugar, h.size(), mpz_sizeinbase(h[0].coeff.get_mpz_t(), 2), basis.size() + 1, pairs.size());
    insert(std::move(h), p.sugar);
  }

  if (unit) return GroebnerBasis(vars, order, {Poly(vars, Rational(1))});

  // Basis is minimal by construction; reduce tails against the others.
  std::vector<EPoly> reduced;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const EPoly*> others;
    for (std::size_t idx : basis)
      if (idx != basis[k]) others.push_back(&polys[idx]);
    EPoly g = polys[basis[k]];
    ETerm lead = g[0];
    EPoly tail(std::make_move_iterator(g.begin() + 1), std::make_move_iterator(g.end()));
    Rational mult(1);
    tail = eng.reduce(std::move(tail), others, true, &mult);
    // lead*mult + tail keeps the leading monomial; rescale into integers.
    Rational lc = Rational(lead.coeff) * mult;
    EPoly out;
    Integer den = lc.get_den();
    out.push_back({lead.key, lead.mono, Integer(lc.get_num())});
    for (ETerm& t : tail) {
      t.coeff *= den;
      out.push_back(std::move(t));
    }
    normalize(out);
    reduced.push_back(std::move(out));
  }
  std::sort(reduced.begin(), reduced.end(), [](const EPoly& a, const EPoly& b) { return compare(a[0].key, b[0].key) < 0; });
  std::vector<Poly> result;
  for (const EPoly& e : reduced) result.push_back(Engine::export_poly(e, vars));
  return GroebnerBasis(vars, order, std::move(result));
}

GroebnerBasis eliminate(std::span<const Poly> generators, std::span<const std::size_t> drop, OrderKind inner,
                        const BuchbergerOptions& options) {
  Registry vars = common_registry(generators);
  std::uint32_t mask = 0;
  for (std::size_t v : drop) {
    if (v >= vars->size()) throw std::out_of_range("variable index out of range");
    mask |= 1u << v;
  }
  MonomialOrder order = MonomialOrder::elimination(mask, OrderKind::grevlex, inner);
  GroebnerBasis full = buchberger(generators, order, options);
  std::vector<Poly> kept;
  for (const Poly& p : full.polys())
    if ((p.support() & mask) == 0) kept.push_back(p);
  return GroebnerBasis(vars, order, std::move(kept));
}

struct Reducer::Impl {
  Impl(const GroebnerBasis& b) : vars(b.registry()), eng(b.order(), b.registry()->size()) {
    for (const Poly& g : b.polys()) store.push_back(eng.import(g));
    for (const EPoly& e : store) reducers.push_back(&e);
  }
  Registry vars;
  Engine eng;
  std::vector<EPoly> store;
  std::vector<const EPoly*> reducers;
};

Reducer::Reducer(const GroebnerBasis& basis) : impl_(std::make_shared<const Impl>(basis)) {}

Poly Reducer::operator()(const Poly& p) const {
  if (p.registry() != impl_->vars) throw std::invalid_argument("polynomials belong to different variable registries");
  if (p.is_zero()) return p;
  Rational scale(1), mult(1);
  EPoly r = impl_->eng.reduce(impl_->eng.import(p, &scale), impl_->reducers, true, &mult);
  return Engine::export_poly(r, p.registry()) * Rational(scale / mult);
}

Poly normal_form(const Poly& p, const GroebnerBasis& basis) { return Reducer(basis)(p); }

bool ideal_contains(const GroebnerBasis& basis, const Poly& p) { return normal_form(p, basis).is_zero(); }

bool is_groebner_basis(std::span<const Poly> polys, const MonomialOrder& order) {
  Registry vars = common_registry(polys);
  Engine eng(order, vars->size());
  std::vector<EPoly> store;
  for (const Poly& p : polys)
    if (!p.is_zero()) store.push_back(eng.import(p));
  std::vector<const EPoly*> reducers;
  for (const EPoly& e : store) reducers.push_back(&e);
  for (std::size_t i = 0; i < store.size(); ++i)
    for (std::size_t j = i + 1; j < store.size(); ++j)
      if (!eng.reduce(eng.spoly(store[i], store[j]), reducers, true, nullptr).empty()) return false;
  return true;
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
  const std::size_t n = basis.registry()->size();
  if (basis.is_unit_ideal()) return true;
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const Poly& g : basis.polys()) {
      const Monomial& m = g.leading_term(basis.order()).mono;
      if (m[v] > 0 && m.degree() == m[v]) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis) {
  if (!is_zero_dimensional(basis)) throw std::domain_error("ideal is not zero-dimensional");
  if (basis.is_unit_ideal()) return {};
  const std::size_t n = basis.registry()->size();
  std::vector<Monomial> leads;
  for (const Poly& g : basis.polys()) leads.push_back(g.leading_term(basis.order()).mono);
  auto standard = [&](const Monomial& m) {
    for (const Monomial& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  // Standard monomials form an order ideal, so growing from 1 by single
  // variables reaches all of them.
  std::vector<Monomial> out{Monomial()};
  std::set<std::vector<std::uint16_t>> seen{std::vector<std::uint16_t>(kMaxVars, 0)};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial m = out[k] * Monomial::variable(v);
      if (!standard(m)) continue;
      std::vector<std::uint16_t> sig(m.data(), m.data() + kMaxVars);
      if (seen.insert(sig).second) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return basis.order().compare(a, b, n) < 0;
  });
  return out;
}

}  // namespace vortexsym
