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

#include <array>
#include <string>
#include <vector>

#include "staircase/bipoly.hpp"
#include "staircase/chebyshev.hpp"
#include "staircase/errors.hpp"
#include "staircase/poly.hpp"
#include "staircase/ratfunc.hpp"
#include "staircase/series.hpp"
#include "staircase/wordstats.hpp"

namespace staircase {

inline constexpr int kDefaultOrder = 12;
inline constexpr int kMaxSymbolicAlphabet = 8;

/// Closed form in (x, t) with its truncated expansion.
struct BiGF {
  RatFuncXT closed;
  BiSeries series;
};

/// Closed form in x alone with its truncated expansion.
struct UniGF {
  RatFuncX closed;
  Series series;
};

// Internally the closed forms are assembled in the variables (x, y) with
// y = x(t - 1). Every Chebyshev quantity then depends on y alone, gcds in
// (x, y) are cheap because the x-degree stays tiny, and substituting
// y = x(t - 1) at the end can only introduce common powers of x, which
// from_coprime strips.
using RatFuncXY = RatFunc<BiPoly>;
inline constexpr std::array<char, 2> kXY{'x', 'y'};

/// Cleared Chebyshev numerators for phi = (1 - y) / (2y):
/// P_j(y) = y^j U_j(phi), so P_0 = 1, P_1 = 1 - y and
/// P_{j+1} = (1 - y) P_j - y^2 P_{j-1}. All are polynomials in y.
class PhiContext {
 public:
  explicit PhiContext(int k, char var = 'y') : k_(k) {
    if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
    const Poly y = Poly::identity(var);
    const Poly one_minus_y = 1 - y;
    const Poly y_squared = y * y;
    cleared_.push_back(Poly::constant(1, var));
    cleared_.push_back(one_minus_y);
    for (int j = 1; j < k; ++j) {
      cleared_.push_back(one_minus_y * cleared_[static_cast<std::size_t>(j)] - y_squared * cleared_[static_cast<std::size_t>(j - 1)]);
    }
  }

  int k() const { return k_; }
  const std::vector<Poly>& cleared() const { return cleared_; }
  const Poly& cleared(int j) const { return cleared_.at(static_cast<std::size_t>(j)); }

  /// U_j(phi) = P_j(y) / y^j as a rational function of (x, y).
  RatFuncXY u_at_phi(int j) const {
    return RatFuncXY(BiPoly::from_poly(cleared(j), 1, kXY), BiPoly::monomial(1, 0, j, kXY));
  }

  /// U_j at phi with y specialized to a multiple of x, e.g. y = x for the
  /// staircase forms and y = -x for the Hertzsprung ones.
  RatFuncX u_at_phi_of_x(int j, const Rational& y_per_x) const {
    Poly y = Poly{0, y_per_x};
    Poly num = cleared(j).with_var('x').compose(y);
    Poly den = Poly::monomial(pow(y_per_x, static_cast<unsigned>(j)), static_cast<std::size_t>(j));
    return RatFuncX(num, den);
  }

 private:
  int k_;
  std::vector<Poly> cleared_;
};

namespace detail {

inline void check_alphabet(int k) {
  if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
  if (k > kMaxSymbolicAlphabet) throw InvalidArgument("closed forms are built for k <= " + std::to_string(kMaxSymbolicAlphabet));
}

inline const BiPoly& x_xy() {
  static const BiPoly x = BiPoly::first_var(kXY);
  return x;
}

inline const BiPoly& y_xy() {
  static const BiPoly y = BiPoly::second_var(kXY);
  return y;
}

inline RatFuncXT to_xt(const RatFuncXY& f) {
  const BiPoly x = BiPoly::first_var();
  const BiPoly y = x * (BiPoly::second_var() - 1);
  return RatFuncXT::from_coprime(f.num().compose(x, y).with_vars({'x', 't'}), f.den().compose(x, y).with_vars({'x', 't'}));
}

inline RatFuncXY gamma_xy(const PhiContext& ctx) {
  const RatFuncXY y(y_xy());
  const RatFuncXY one(1);
  const RatFuncXY k(ctx.k());
  const RatFuncXY a = one - RatFuncXY(3) * y;
  const RatFuncXY uk = ctx.u_at_phi(ctx.k());
  const RatFuncXY uk1 = ctx.u_at_phi(ctx.k() - 1);
  return k / a - RatFuncXY(2) * y / (a * a) * ((uk - uk1 - one) / uk);
}

}  // namespace detail

/// gamma(x, t) = k/(1 - 3x(t-1)) - 2x(t-1)/(1 - 3x(t-1))^2 * (U_k - U_{k-1} - 1)/U_k,
/// with every U_j taken at phi = (1 - x(t-1)) / (2x(t-1)).
inline RatFuncXT gamma_ratfunc(int k) {
  detail::check_alphabet(k);
  return detail::to_xt(detail::gamma_xy(PhiContext(k)));
}

/// F(x, t) = 1 / (1 - x gamma(x, t)): the generating function of the linear
/// statistic's distribution.
inline RatFuncXT f_closed(int k) {
  detail::check_alphabet(k);
  const RatFuncXY x(detail::x_xy());
  return detail::to_xt((RatFuncXY(1) - x * detail::gamma_xy(PhiContext(k))).inverse());
}

/// G(x, t) for the cyclic statistic, assembled term by term from its
/// printed form:
///
///   1 + (1+3y)/((1-3y)(1+y)) [ 1/(1 - x gamma)
///       - 2y(k+1)/((1+3y) U_k) ( (1 - x (1+k-U_k)/(1-3y)) / (1 - x gamma) + U_{k-1} - 1 )
///       + k y - 1 ]
///
/// where y = x(t - 1) and U_j = U_j(phi).
inline RatFuncXT g_closed(int k) {
  detail::check_alphabet(k);
  const PhiContext ctx(k);
  const RatFuncXY x(detail::x_xy());
  const RatFuncXY y(detail::y_xy());
  const RatFuncXY one(1);
  const RatFuncXY kk(k);
  const RatFuncXY three(3);
  const RatFuncXY uk = ctx.u_at_phi(k);
  const RatFuncXY uk1 = ctx.u_at_phi(k - 1);
  const RatFuncXY gamma = detail::gamma_xy(ctx);

  const RatFuncXY minus3y = one - three * y;
  const RatFuncXY plus3y = one + three * y;
  const RatFuncXY f = (one - x * gamma).inverse();
  const RatFuncXY inner = (one - x * (one + kk - uk) / minus3y) * f + uk1 - one;
  const RatFuncXY bracket = f - RatFuncXY(2) * y * (kk + one) / (plus3y * uk) * inner + kk * y - one;
  return detail::to_xt(one + plus3y / (minus3y * (one + y)) * bracket);
}

inline BiGF F_series(int k, int order = kDefaultOrder) {
  RatFuncXT closed = f_closed(k);
  BiSeries series = series_expand(closed, order);
  return {std::move(closed), std::move(series)};
}

inline BiGF G_series(int k, int order = kDefaultOrder) {
  RatFuncXT closed = g_closed(k);
  BiSeries series = series_expand(closed, order);
  return {std::move(closed), std::move(series)};
}

namespace detail {

inline UniGF expand(RatFuncX closed, int order) {
  Series series = series_expand(closed, order);
  return {std::move(closed), std::move(series)};
}

}  // namespace detail

/// Staircase words:
/// D(x) = 1 + x(k - (3k+2)x)/(1-3x)^2 + 2x^2/(1-3x)^2 * (U_{k-1} + 1)/U_k
/// with U_j at (1 - x)/(2x).
inline UniGF staircase_gf(int k, int order = kDefaultOrder) {
  detail::check_alphabet(k);
  const PhiContext ctx(k);
  const RatFuncX x(Poly::identity());
  const RatFuncX one(1);
  const RatFuncX kk(k);
  const RatFuncX a = one - RatFuncX(3) * x;
  const RatFuncX uk = ctx.u_at_phi_of_x(k, 1);
  const RatFuncX uk1 = ctx.u_at_phi_of_x(k - 1, 1);
  RatFuncX d = one + x * (kk - RatFuncX(3 * k + 2) * x) / (a * a) + RatFuncX(2) * x * x / (a * a) * (uk1 + one) / uk;
  return detail::expand(std::move(d), order);
}

/// Cyclic staircase words:
/// E(x) = 1 + kx(1+3x)/((1+x)(1-3x)) - 2(k+1)x U_{k-1} / ((1+x)(1-3x) U_k)
/// with U_j at (1 - x)/(2x).
inline UniGF cyclic_staircase_gf(int k, int order = kDefaultOrder) {
  detail::check_alphabet(k);
  const PhiContext ctx(k);
  const RatFuncX x(Poly::identity());
  const RatFuncX one(1);
  const RatFuncX kk(k);
  const RatFuncX denom = (one + x) * (one - RatFuncX(3) * x);
  const RatFuncX uk = ctx.u_at_phi_of_x(k, 1);
  const RatFuncX uk1 = ctx.u_at_phi_of_x(k - 1, 1);
  RatFuncX e = one + kk * x * (one + RatFuncX(3) * x) / denom - RatFuncX(2 * (k + 1)) * x * uk1 / (denom * uk);
  return detail::expand(std::move(e), order);
}

namespace detail {

// gamma(x, 0) with U_j at -(1 + x)/(2x).
inline RatFuncX gamma_at_t0(const PhiContext& ctx) {
  const int k = ctx.k();
  const RatFuncX x(Poly::identity());
  const RatFuncX one(1);
  const RatFuncX b = one + RatFuncX(3) * x;
  const RatFuncX uk = ctx.u_at_phi_of_x(k, -1);
  const RatFuncX uk1 = ctx.u_at_phi_of_x(k - 1, -1);
  return RatFuncX(k) / b + RatFuncX(2) * x / (b * b) * ((uk - uk1 - one) / uk);
}

}  // namespace detail

/// Hertzsprung words (no adjacent letters within distance one):
/// (1 - kx/(1+3x) - 2x^2/(1+3x)^2 * (U_k - U_{k-1} - 1)/U_k)^{-1}
/// with U_j at -(1 + x)/(2x).
inline UniGF hertzsprung_gf(int k, int order = kDefaultOrder) {
  detail::check_alphabet(k);
  const PhiContext ctx(k);
  const RatFuncX x(Poly::identity());
  const RatFuncX one(1);
  const RatFuncX b = one + RatFuncX(3) * x;
  const RatFuncX uk = ctx.u_at_phi_of_x(k, -1);
  const RatFuncX uk1 = ctx.u_at_phi_of_x(k - 1, -1);
  RatFuncX h = (one - RatFuncX(k) * x / b - RatFuncX(2) * x * x / (b * b) * (uk - uk1 - one) / uk).inverse();
  return detail::expand(std::move(h), order);
}

/// Cyclic Hertzsprung words, from the printed specialization of G at t = 0:
///
///   1 + (1-3x)/((1+3x)(1-x)) [ 1/(1 - x gamma(x,0))
///       + 2x(k+1)/((1-3x) U_k) ( (1 - x (1+k-U_k)/(1+3x)) / (1 - x gamma(x,0)) + U_{k-1} - 1 )
///       - kx - 1 ]
///
/// with U_j at -(1 + x)/(2x).
inline UniGF cyclic_hertzsprung_gf(int k, int order = kDefaultOrder) {
  detail::check_alphabet(k);
  const PhiContext ctx(k);
  const RatFuncX x(Poly::identity());
  const RatFuncX one(1);
  const RatFuncX kk(k);
  const RatFuncX three(3);
  const RatFuncX uk = ctx.u_at_phi_of_x(k, -1);
  const RatFuncX uk1 = ctx.u_at_phi_of_x(k - 1, -1);
  const RatFuncX f = (one - x * detail::gamma_at_t0(ctx)).inverse();
  const RatFuncX inner = (one - x * (one + kk - uk) / (one + three * x)) * f + uk1 - one;
  const RatFuncX bracket = f + RatFuncX(2) * x * (kk + one) / ((one - three * x) * uk) * inner - kk * x - one;
  RatFuncX g = one + (one - three * x) / ((one + three * x) * (one - x)) * bracket;
  return detail::expand(std::move(g), order);
}

enum class GFKind { F, G, staircase, cyclic_staircase, hertzsprung, cyclic_hertzsprung };

inline GFKind parse_gf_kind(const std::string& text) {
  if (text == "F") return GFKind::F;
  if (text == "G") return GFKind::G;
  if (text == "staircase") return GFKind::staircase;
  if (text == "cyclic-staircase") return GFKind::cyclic_staircase;
  if (text == "hertzsprung") return GFKind::hertzsprung;
  if (text == "cyclic-hertzsprung") return GFKind::cyclic_hertzsprung;
  throw InvalidArgument("unknown generating function '" + text + "'");
}

inline std::string to_string(GFKind kind) {
  switch (kind) {
    case GFKind::F: return "F";
    case GFKind::G: return "G";
    case GFKind::staircase: return "staircase";
    case GFKind::cyclic_staircase: return "cyclic-staircase";
    case GFKind::hertzsprung: return "hertzsprung";
    case GFKind::cyclic_hertzsprung: return "cyclic-hertzsprung";
  }
  return "?";
}

/// The enumeration oracle for coefficient n of a generating function: the
/// distribution polynomial for F and G, the special count otherwise.
inline Poly oracle_coefficient(GFKind kind, int k, int n) {
  switch (kind) {
    case GFKind::F: return dp_distribution(n, k, StatKind::linear).to_poly();
    case GFKind::G: return dp_distribution(n, k, StatKind::cyclic).to_poly();
    case GFKind::staircase: return Poly::constant(Rational(special_count(n, k, SpecialKind::staircase)), 't');
    case GFKind::cyclic_staircase: return Poly::constant(Rational(special_count(n, k, SpecialKind::cyclic_staircase)), 't');
    case GFKind::hertzsprung: return Poly::constant(Rational(special_count(n, k, SpecialKind::hertzsprung)), 't');
    case GFKind::cyclic_hertzsprung: return Poly::constant(Rational(special_count(n, k, SpecialKind::cyclic_hertzsprung)), 't');
  }
  throw InvalidArgument("unknown generating function");
}

}  // namespace staircase
