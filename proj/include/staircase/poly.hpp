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
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/rational.hpp"

namespace staircase {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies var^i. The coefficient vector never ends in a
/// zero, so the zero polynomial is the empty vector and degree() is -1.
/// The variable tag only matters for printing and for catching accidental
/// mixes of x-polynomials with t-polynomials.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c, char var = 'x') : var_(var) {  // NOLINT(google-explicit-constructor)
    if (!staircase::is_zero(c)) coeffs_.push_back(c);
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  /// One coefficient of a braced list. Single-argument only, so a nested
  /// pair such as {{2, 7}, 't'} selects the vector constructor instead of
  /// silently becoming the fraction 2/7.
  struct Coeff {
    template <class T>
      requires std::convertible_to<const T&, Rational>
    Coeff(const T& v) : value(v) {}  // NOLINT(google-explicit-constructor)
    Rational value;
  };

  Poly(std::initializer_list<Coeff> coeffs, char var = 'x') : var_(var) {
    for (const Coeff& c : coeffs) coeffs_.push_back(c.value);
    trim();
  }
  explicit Poly(std::vector<Rational> coeffs, char var = 'x') : coeffs_(std::move(coeffs)), var_(var) { trim(); }

  static Poly constant(const Rational& c, char var = 'x') { return Poly(c, var); }
  static Poly zero(char var) { return Poly(Rational(0), var); }

  static Poly monomial(const Rational& c, std::size_t degree, char var = 'x') {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs), var);
  }

  /// The polynomial `var`.
  static Poly identity(char var = 'x') { return monomial(1, 1, var); }

  char var() const { return var_; }
  Poly with_var(char var) const {
    Poly p = *this;
    p.var_ = var;
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!staircase::is_zero(coeffs_[i])) return static_cast<int>(i);
    }
    return -1;
  }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  /// this(inner(var)), carrying inner's variable.
  Poly compose(const Poly& inner) const {
    Poly acc = zero(inner.var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + Poly::constant(*it, inner.var_);
    }
    return acc;
  }

  /// Multiplies by var^n.
  Poly shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<Rational> coeffs(n);
    coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(coeffs), var_);
  }

  Poly truncated(std::size_t order) const {
    if (coeffs_.size() <= order + 1) return *this;
    return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1), var_);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    var_ = merge_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    var_ = merge_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (staircase::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  Poly& operator/=(const Rational& s) {
    if (staircase::is_zero(s)) throw ZeroDenominator();
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    char var = a.merge_var(b);
    if (a.is_zero() || b.is_zero()) return zero(var);
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (staircase::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out), var);
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDenominator();
    char var = a.merge_var(b);
    Poly rem = a.with_var(var);
    if (a.degree() < b.degree()) return {zero(var), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
      Rational factor = rem.leading() / lead;
      quot[shift] = factor;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem.coeffs_[shift + j] -= factor * b.coeffs_[j];
      rem.trim();
    }
    return {Poly(std::move(quot), var), rem};
  }

  /// Rational number c and integer primitive polynomial p with this = c*p and
  /// p's leading coefficient positive. The zero polynomial gives (0, 0).
  std::pair<Rational, Poly> content_primitive() const {
    if (is_zero()) return {Rational(0), *this};
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& c : coeffs_) {
      Integer scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (sgn(leading()) < 0) content = -content;
    Poly prim = *this / content;
    return {content, prim};
  }

  Poly primitive_part() const { return content_primitive().second; }

  /// The unique monic associate; zero stays zero.
  Poly monic() const { return is_zero() ? *this : *this / leading(); }

  /// Text form with descending powers, e.g. "4*x^2 - 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (staircase::is_zero(c)) continue;
      write_term(out, c, i, first);
      first = false;
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && staircase::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  char merge_var(const Poly& o) const {
    if (is_constant()) return o.is_constant() ? var_ : o.var_;
    if (!o.is_constant() && o.var_ != var_) {
      throw InvalidArgument(std::string("mixed polynomial variables '") + var_ + "' and '" + o.var_ + "'");
    }
    return var_;
  }

  void write_term(std::ostream& out, const Rational& c, int power, bool first) const {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (power == 0) {
      out << staircase::to_string(mag);
      return;
    }
    if (mag != 1) out << staircase::to_string(mag) << "*";
    out << var_;
    if (power > 1) out << "^" << power;
  }

  std::vector<Rational> coeffs_;
  char var_ = 'x';
};

/// Quotient of an exact division; throws NotDivisible on a nonzero remainder.
inline Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("(" + a.to_string() + ") / (" + b.to_string() + "), remainder " + r.to_string());
  return q;
}

/// Pseudo-remainder of integer polynomials: lc(b)^(deg a - deg b + 1) * a mod b.
inline Poly pseudo_remainder(const Poly& a, const Poly& b) {
  Poly rem = a;
  if (rem.degree() < b.degree()) return rem;
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Poly step = b.shifted(shift) * rem.leading();
    rem = rem * lead - step;
  }
  return rem;
}

/// Greatest common divisor, normalized to an integer primitive polynomial with
/// positive leading coefficient (so gcd(a, 0) = primitive_part(a)).
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  Poly p = a.primitive_part();
  Poly q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    if (q.degree() == 0) return Poly::constant(1, a.is_constant() ? b.var() : a.var());
    Poly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.primitive_part();
  }
  return p;
}

}  // namespace staircase
