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
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "staircase/bipoly.hpp"
#include "staircase/errors.hpp"
#include "staircase/poly.hpp"
#include "staircase/rational.hpp"

namespace staircase {

namespace detail {

inline Rational lowest_coefficient(const Poly& p) { return p.coeff(static_cast<std::size_t>(p.low_degree())); }
inline Rational lowest_coefficient(const BiPoly& p) { return p.lowest(); }

inline std::size_t term_count(const Poly& p) { return p.size(); }
inline std::size_t term_count(const BiPoly& p) { return p.size(); }

// Above this many terms a bivariate gcd is skipped and only the monomial and
// integer content are removed; equality stays exact through cross-multiplication.
inline constexpr std::size_t kFullGcdTermLimit = 6000;

inline std::pair<Poly, Poly> cancel_common(const Poly& num, const Poly& den) {
  Poly g = gcd(num, den);
  if (g.degree() <= 0) return {num, den};
  return {divexact(num, g), divexact(den, g)};
}

inline std::pair<Poly, Poly> cancel_monomial(const Poly& num, const Poly& den) {
  int common = std::min(num.low_degree(), den.low_degree());
  if (common <= 0) return {num, den};
  auto drop = [common](const Poly& p) {
    const auto& c = p.coefficients();
    return Poly(std::vector<Rational>(c.begin() + common, c.end()), p.var());
  };
  return {drop(num), drop(den)};
}

inline std::pair<BiPoly, BiPoly> cancel_monomial(const BiPoly& num, const BiPoly& den) {
  Monomial mn = num.monomial_content();
  Monomial md = den.monomial_content();
  Monomial common{std::min(mn.first, md.first), std::min(mn.second, md.second)};
  if (common == Monomial{0, 0}) return {num, den};
  return {num.divided_by_monomial(common), den.divided_by_monomial(common)};
}

inline std::pair<BiPoly, BiPoly> cancel_common(const BiPoly& num, const BiPoly& den) {
  if (num.size() + den.size() > kFullGcdTermLimit) return cancel_monomial(num, den);
  BiPoly g = gcd(num, den);
  if (g.is_constant()) return {num, den};
  return {divexact(num, g), divexact(den, g)};
}

}  // namespace detail

/// Reduced quotient of two polynomials (Poly for one variable, BiPoly for two).
///
/// The denominator is stored as an integer primitive polynomial whose lowest
/// coefficient (constant term for anything regular at the origin) is positive;
/// the numerator absorbs the scale. Zero is 0/1.
template <class P>
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(P num) : num_(std::move(num)), den_(Rational(1)) {  // NOLINT(google-explicit-constructor)
    normalize();
  }
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  RatFunc(const Rational& c) : RatFunc(P(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}      // NOLINT(google-explicit-constructor)

  /// num/den for a pair known to share no factor other than a monomial; skips
  /// the gcd and only strips the common monomial and normalizes the scale.
  static RatFunc from_coprime(P num, P den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) return RatFunc();
    RatFunc r;
    std::tie(r.num_, r.den_) = detail::cancel_monomial(num, den);
    r.normalize_scale();
    return r;
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const { return raw(-num_, den_); }

  RatFunc inverse() const {
    if (num_.is_zero()) throw ZeroDenominator();
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel first so the products stay small.
    auto [an, bd] = detail::cancel_common(a.num_, b.den_);
    auto [bn, ad] = detail::cancel_common(b.num_, a.den_);
    return RatFunc(an * bn, ad * bd);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  /// Equality of rational functions, decided by cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Structural equality of the stored (reduced, normalized) pairs.
  bool same_representation(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

 private:
  static RatFunc raw(P num, P den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
      den_ = P(Rational(1));
      return;
    }
    std::tie(num_, den_) = detail::cancel_common(num_, den_);
    normalize_scale();
  }

  void normalize_scale() {
    auto [scale, prim] = den_.content_primitive();
    if (sgn(detail::lowest_coefficient(prim)) < 0) {
      scale = -scale;
      prim = -prim;
    }
    num_ /= scale;
    den_ = std::move(prim);
  }

  P num_;
  P den_;
};

using RatFuncX = RatFunc<Poly>;
using RatFuncXT = RatFunc<BiPoly>;

/// (n, d) -> reduced, sign-normalized rational function.
template <class P>
RatFunc<P> ratfunc_normalize(P num, P den) {
  return RatFunc<P>(std::move(num), std::move(den));
}

inline Rational evaluate(const RatFuncX& f, const Rational& x) {
  Rational d = f.den().eval(x);
  if (is_zero(d)) throw ZeroDenominator();
  return f.num().eval(x) / d;
}

inline Rational evaluate(const RatFuncXT& f, const Rational& x, const Rational& t) {
  Rational d = f.den().eval(x, t);
  if (is_zero(d)) throw ZeroDenominator();
  return f.num().eval(x, t) / d;
}

}  // namespace staircase
