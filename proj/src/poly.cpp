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

#include "vortexsym/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vortexsym {

void canonicalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (sgn(c) != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Poly::Poly(Registry vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("polynomial needs a variable registry");
}

Poly::Poly(Registry vars, const Rational& c) : Poly(std::move(vars)) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::variable(Registry vars, std::size_t index, unsigned power) {
  if (!vars || index >= vars->size()) throw std::out_of_range("variable index out of range");
  return monomial(std::move(vars), Monomial::variable(index, power), Rational(1));
}

Poly Poly::variable(Registry vars, std::string_view name, unsigned power) {
  std::size_t i = vars->index(name);
  return variable(std::move(vars), i, power);
}

Poly Poly::monomial(Registry vars, const Monomial& m, const Rational& c) {
  Poly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(Registry vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  for (const Term& t : terms)
    for (std::size_t i = p.nvars(); i < kMaxVars; ++i)
      if (t.mono[i] != 0) throw std::invalid_argument("monomial uses a variable outside the registry");
  canonicalize_terms(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned Poly::total_degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::uint32_t Poly::support() const noexcept {
  std::uint32_t mask = 0;
  for (const Term& t : terms_)
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mono[i]) mask |= 1u << i;
  return mask;
}

void Poly::require_same(const Poly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials belong to different variable registries");
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two canonical term lists with b scaled by `sign` (+1 or -1).
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : lex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  require_same(o);
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same(b);
  Poly p(a.vars_);
  if (a.is_zero() || b.is_zero()) return p;
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  canonicalize_terms(prod);
  p.terms_ = std::move(prod);
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result(vars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  a.require_same(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  const Term* best = &terms_[0];
  OrderKey best_key = order.key(best->mono, nvars());
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    OrderKey k = order.key(terms_[i].mono, nvars());
    if (compare(k, best_key) > 0) {
      best = &terms_[i];
      best_key = k;
    }
  }
  return *best;
}

std::vector<Term> Poly::sorted_terms(const MonomialOrder& order) const {
  std::vector<std::pair<OrderKey, std::size_t>> keyed;
  keyed.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) keyed.emplace_back(order.key(terms_[i].mono, nvars()), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, i] : keyed) out.push_back(terms_[i]);
  return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  require_same(value);
  if (var >= nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Poly> powers{Poly(vars_, Rational(1))};
  std::vector<Term> acc;
  for (const Term& t : terms_) {
    unsigned e = t.mono[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.mono;
    rest.set(var, 0);
    for (const Term& u : powers[e].terms_) acc.push_back({rest * u.mono, t.coeff * u.coeff});
  }
  return from_terms(vars_, std::move(acc));
}

Poly Poly::substitute(std::string_view var, const Poly& value) const {
  return substitute(vars_->index(var), value);
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars()) throw std::invalid_argument("evaluation point has too few coordinates");
  Rational sum(0);
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mono[i]) v *= vortexsym::pow(point[i], t.mono[i]);
    sum += v;
  }
  return sum;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(vars_, std::move(out));
}

std::vector<std::pair<Monomial, Poly>> Poly::coefficients_in(std::span<const std::size_t> vars) const {
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  for (const Term& t : terms_) {
    Monomial key;
    Monomial rest = t.mono;
    for (std::size_t v : vars) {
      key.set(v, t.mono[v]);
      rest.set(v, 0);
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({key, {}});
      it = groups.end() - 1;
    }
    it->second.push_back({rest, t.coeff});
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return lex_compare(a.first, b.first) > 0; });
  std::vector<std::pair<Monomial, Poly>> out;
  out.reserve(groups.size());
  for (auto& [k, ts] : groups) out.emplace_back(k, from_terms(vars_, std::move(ts)));
  return out;
}

Poly Poly::embed(Registry target) const {
  std::vector<std::size_t> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    bool used = false;
    for (const Term& t : terms_) used = used || t.mono[i] != 0;
    auto j = target->find(vars_->name(i));
    if (!j) {
      if (used) throw std::invalid_argument("variable '" + vars_->name(i) + "' is missing from the target registry");
      map[i] = kMaxVars;
      continue;
    }
    map[i] = *j;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string Poly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : sorted_terms(order)) {
    bool negative = sgn(t.coeff) < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += vortexsym::to_string(mag);
    } else {
      if (mag != 1) out += vortexsym::to_string(mag) + "*";
      out += t.mono.to_string(*vars_);
    }
  }
  return out;
}

// ---- parsing ---------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(Registry vars, std::string_view text) : vars_(std::move(vars)), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalpha(u) || ch == '_' || u >= 0x80;
  }
  static bool ident_char(char ch) { return ident_start(ch) || std::isdigit(static_cast<unsigned char>(ch)); }

  Poly expr() {
    Poly acc(vars_);
    bool first = true;
    for (;;) {
      char ch = peek();
      int sign = 1;
      if (ch == '+' || ch == '-') {
        sign = ch == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Poly t = term();
      if (sign < 0)
        acc -= t;
      else
        acc += t;
      first = false;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc *= factor();
      } else if (ch == '/') {
        ++pos_;
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division is only allowed by a nonzero constant");
        acc *= Rational(1 / d.constant_term());
      } else if (ident_start(ch) || ch == '(') {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > kMaxExponent) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (ident_start(ch)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = vars_->find(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return Poly::variable(vars_, *idx);
    }
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Registry vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(Registry vars, std::string_view text) { return Parser(std::move(vars), text).parse(); }

// ---- content and exact division --------------------------------------------

ContentSplit content_strip(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) return {Rational(1), p};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const Term& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading_term(order).coeff) < 0) content = -content;
  Poly prim = p * Rational(1 / content);
  return {content, std::move(prim)};
}

Poly divide_exact(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  // Lex on raw exponents matches the canonical term order, so the leading
  // term is always terms().front().
  const Term& lead = d.terms().front();
  Poly rem = p;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.terms().front();
    if (!lead.mono.divides(t.mono)) throw NonExactDivision(rem);
    Term q{t.mono.quotient(lead.mono), t.coeff / lead.coeff};
    rem -= Poly::monomial(p.registry(), q.mono, q.coeff) * d;
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(p.registry(), std::move(quotient));
}

}  // namespace vortexsym
