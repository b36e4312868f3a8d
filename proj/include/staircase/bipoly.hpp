// Copyright 2026 The Staircase Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/poly.hpp"
#include "staircase/rational.hpp"

namespace staircase {

/// Exponent pair (degree in the first variable, degree in the second).
using Monomial = std::pair<int, int>;

/// Sparse bivariate polynomial over the rationals.
///
/// Terms are kept in a map ordered lexicographically by (first, second)
/// degree; zero coefficients are never stored. The default variable names are
/// x and t, but the same type also carries (x, y) forms during assembly.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  BiPoly() = default;
  explicit BiPoly(std::array<char, 2> vars) : vars_(vars) {}
  BiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!staircase::is_zero(c)) terms_.emplace(Monomial{0, 0}, c);
  }
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly monomial(const Rational& c, int first_deg, int second_deg, std::array<char, 2> vars = {'x', 't'}) {
    BiPoly p(vars);
    if (!staircase::is_zero(c)) p.terms_.emplace(Monomial{first_deg, second_deg}, c);
    return p;
  }

  static BiPoly first_var(std::array<char, 2> vars = {'x', 't'}) { return monomial(1, 1, 0, vars); }
  static BiPoly second_var(std::array<char, 2> vars = {'x', 't'}) { return monomial(1, 0, 1, vars); }

  /// Lifts a univariate polynomial into the first (which = 0) or second variable.
  static BiPoly from_poly(const Poly& p, int which, std::array<char, 2> vars = {'x', 't'}) {
    BiPoly out(vars);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (staircase::is_zero(p.coeff(i))) continue;
      Monomial m = which == 0 ? Monomial{static_cast<int>(i), 0} : Monomial{0, static_cast<int>(i)};
      out.terms_.emplace(m, p.coeff(i));
    }
    return out;
  }

  /// Inverse of coefficients_in_first: entry i is the coefficient of first^i.
  static BiPoly from_coefficients(const std::vector<Poly>& by_first, std::array<char, 2> vars = {'x', 't'}) {
    BiPoly out(vars);
    for (std::size_t i = 0; i < by_first.size(); ++i) {
      const Poly& c = by_first[i];
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (!staircase::is_zero(c.coeff(j))) out.terms_.emplace(Monomial{static_cast<int>(i), static_cast<int>(j)}, c.coeff(j));
      }
    }
    return out;
  }

  const std::array<char, 2>& vars() const { return vars_; }
  BiPoly with_vars(std::array<char, 2> vars) const {
    BiPoly p = *this;
    p.vars_ = vars;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}); }

  Rational coeff(int first_deg, int second_deg) const {
    auto it = terms_.find({first_deg, second_deg});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest degree in the first (which = 0) or second variable; -1 for zero.
  int degree(int which) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, which == 0 ? m.first : m.second);
    return d;
  }

  /// Lexicographically largest / smallest monomial.
  Monomial leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading() const { return terms_.rbegin()->second; }
  Monomial lowest_monomial() const { return terms_.begin()->first; }
  const Rational& lowest() const { return terms_.begin()->second; }

  /// Coefficient of first^i as a polynomial in the second variable, for i = 0..deg.
  std::vector<Poly> coefficients_in_first() const {
    std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(degree(0) + 1));
    for (const auto& [m, c] : terms_) {
      auto& row = dense[static_cast<std::size_t>(m.first)];
      if (row.size() <= static_cast<std::size_t>(m.second)) row.resize(static_cast<std::size_t>(m.second) + 1);
      row[static_cast<std::size_t>(m.second)] = c;
    }
    std::vector<Poly> out;
    out.reserve(dense.size());
    for (auto& row : dense) out.emplace_back(std::move(row), vars_[1]);
    return out;
  }

  /// Exchanges the roles of the two variables.
  BiPoly swapped() const {
    BiPoly out(std::array<char, 2>{vars_[1], vars_[0]});
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.second, m.first}, c);
    return out;
  }

  Rational eval(const Rational& first, const Rational& second) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
      acc += c * pow(first, static_cast<unsigned>(m.first)) * pow(second, static_cast<unsigned>(m.second));
    }
    return acc;
  }

  /// Fixes the second variable, leaving a polynomial in the first.
  Poly at_second(const Rational& value) const {
    std::vector<Rational> out(static_cast<std::size_t>(std::max(degree(0), -1) + 1));
    for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.first)] += c * pow(value, static_cast<unsigned>(m.second));
    return Poly(std::move(out), vars_[0]);
  }

  /// Fixes the first variable, leaving a polynomial in the second.
  Poly at_first(const Rational& value) const { return swapped().at_second(value); }

  /// Polynomial substitution first -> a, second -> b; the result carries a's variables.
  BiPoly compose(const BiPoly& a, const BiPoly& b) const {
    std::vector<BiPoly> pa{BiPoly(1).with_vars(a.vars_)};
    std::vector<BiPoly> pb{BiPoly(1).with_vars(a.vars_)};
    for (int i = 0; i < degree(0); ++i) pa.push_back(pa.back() * a);
    for (int i = 0; i < degree(1); ++i) pb.push_back(pb.back() * b);
    BiPoly out(a.vars_);
    for (const auto& [m, c] : terms_) {
      out += pa[static_cast<std::size_t>(m.first)] * pb[static_cast<std::size_t>(m.second)] * c;
    }
    return out;
  }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  BiPoly& operator+=(const BiPoly& o) {
    adopt_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  BiPoly& operator-=(const BiPoly& o) {
    adopt_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  BiPoly& operator*=(const Rational& s) {
    if (staircase::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  BiPoly& operator/=(const Rational& s) {
    if (staircase::is_zero(s)) throw ZeroDenominator();
    for (auto& [m, c] : terms_) c /= s;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator/(BiPoly a, const Rational& s) { return a /= s; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out(a.is_constant() ? b.vars_ : a.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    // Dense accumulation keeps the inner loop free of map lookups.
    const int dx = a.degree(0) + b.degree(0) + 1;
    const int dt = a.degree(1) + b.degree(1) + 1;
    std::vector<Rational> acc(static_cast<std::size_t>(dx) * static_cast<std::size_t>(dt));
    std::vector<char> touched(acc.size(), 0);
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto idx = static_cast<std::size_t>(ma.first + mb.first) * static_cast<std::size_t>(dt) +
                   static_cast<std::size_t>(ma.second + mb.second);
        mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        acc[idx] += prod;
        touched[idx] = 1;
      }
    }
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
      if (touched[idx] && !staircase::is_zero(acc[idx])) {
        out.terms_.emplace_hint(out.terms_.end(), Monomial{static_cast<int>(idx / static_cast<std::size_t>(dt)),
                                                           static_cast<int>(idx % static_cast<std::size_t>(dt))},
                                std::move(acc[idx]));
      }
    }
    return out;
  }

  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Rational c and integer primitive p with this = c*p, p's lexicographically
  /// lowest coefficient positive.
  std::pair<Rational, BiPoly> content_primitive() const {
    if (is_zero()) return {Rational(0), *this};
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& [m, c] : terms_) {
      Integer scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (sgn(lowest()) < 0) content = -content;
    return {content, *this / content};
  }

  /// Largest monomial x^a t^b dividing every term.
  Monomial monomial_content() const {
    if (is_zero()) return {0, 0};
    Monomial m{terms_.begin()->first.first, terms_.begin()->first.second};
    for (const auto& [mono, c] : terms_) {
      m.first = std::min(m.first, mono.first);
      m.second = std::min(m.second, mono.second);
    }
    return m;
  }

  /// Divides by the monomial x^a t^b; every term must be divisible.
  BiPoly divided_by_monomial(Monomial by) const {
    BiPoly out(vars_);
    for (const auto& [m, c] : terms_) {
      if (m.first < by.first || m.second < by.second) throw NotDivisible("monomial division");
      out.terms_.emplace_hint(out.terms_.end(), Monomial{m.first - by.first, m.second - by.second}, c);
    }
    return out;
  }

  /// Canonical text: monomials by (first, second) degree descending.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out << "-";
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      auto append = [&](char v, int d) {
        if (d == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (d > 1) mono += "^" + std::to_string(d);
      };
      append(vars_[0], m.first);
      append(vars_[1], m.second);
      if (mono.empty()) {
        out << staircase::to_string(mag);
      } else {
        if (mag != 1) out << staircase::to_string(mag) << "*";
        out << mono;
      }
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (staircase::is_zero(it->second)) terms_.erase(it);
    }
  }

  void adopt_vars(const BiPoly& o) {
    if (is_constant() && !o.is_constant()) vars_ = o.vars_;
  }

  Terms terms_;
  std::array<char, 2> vars_{'x', 't'};
};

namespace detail {

// Polynomials in a main variable whose coefficients are univariate polynomials
// in the other one: the recursive view used for exact division and gcd.
using RecPoly = std::vector<Poly>;

inline void trim(RecPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly content(const RecPoly& p) {
  Poly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

inline RecPoly divide_coefficients(const RecPoly& p, const Poly& by) {
  RecPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.is_zero() ? c : divexact(c, by));
  return out;
}

inline RecPoly primitive_part(const RecPoly& p) {
  if (p.empty()) return p;
  return divide_coefficients(p, content(p));
}

inline RecPoly pseudo_remainder(RecPoly a, const RecPoly& b) {
  const Poly& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Poly factor = a.back();
    for (auto& c : a) c = c * lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= b[j] * factor;
    trim(a);
  }
  return a;
}

inline RecPoly divexact(RecPoly a, const RecPoly& b) {
  if (b.empty()) throw ZeroDenominator();
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw NotDivisible("bivariate division");
  RecPoly q(a.size() - b.size() + 1);
  while (!a.empty()) {
    if (a.size() < b.size()) throw NotDivisible("bivariate division");
    std::size_t shift = a.size() - b.size();
    Poly factor = staircase::divexact(a.back(), b.back());
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= b[j] * factor;
    if (!a.back().is_zero()) throw NotDivisible("bivariate division");
    trim(a);
  }
  return q;
}

}  // namespace detail

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
inline BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  auto q = detail::divexact(a.coefficients_in_first(), b.coefficients_in_first());
  return BiPoly::from_coefficients(q, b.is_constant() ? a.vars() : b.vars());
}

/// Greatest common divisor via the primitive remainder sequence over Q[s][m],
/// where m is whichever variable has the smaller degree. Normalized with
/// integer coefficients and positive lexicographically lowest coefficient.
inline BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.content_primitive().second;
  if (b.is_zero()) return a.content_primitive().second;
  const auto vars = a.is_constant() ? b.vars() : a.vars();
  const bool swap = std::max(a.degree(1), b.degree(1)) < std::max(a.degree(0), b.degree(0));
  BiPoly sa = swap ? a.swapped() : a;
  BiPoly sb = swap ? b.swapped() : b;

  detail::RecPoly p = sa.coefficients_in_first();
  detail::RecPoly q = sb.coefficients_in_first();
  Poly cp = detail::content(p);
  Poly cq = detail::content(q);
  Poly cg = gcd(cp, cq);
  p = detail::divide_coefficients(p, cp);
  q = detail::divide_coefficients(q, cq);
  if (p.size() < q.size()) std::swap(p, q);
  while (!q.empty()) {
    if (q.size() == 1) {
      p = {Poly::constant(1)};
      break;
    }
    detail::RecPoly r = detail::pseudo_remainder(p, q);
    p = std::move(q);
    q = detail::primitive_part(r);
  }
  for (auto& c : p) c = c * cg;
  BiPoly g = BiPoly::from_coefficients(p, sa.vars());
  if (swap) g = g.swapped();
  return g.with_vars(vars).content_primitive().second;
}

}  // namespace staircase
