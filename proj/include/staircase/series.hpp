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

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "staircase/bipoly.hpp"
#include "staircase/errors.hpp"
#include "staircase/poly.hpp"
#include "staircase/ratfunc.hpp"

namespace staircase {

/// Univariate power series in x truncated after x^order: entry n is [x^n].
using Series = std::vector<Rational>;

/// Power series in x, truncated after x^order, with coefficients in Q[t].
class BiSeries {
 public:
  BiSeries() = default;
  explicit BiSeries(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument("series needs at least one coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Poly>& coefficients() const { return coeffs_; }
  const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Specializes t to a value.
  Series at_t(const Rational& t) const {
    Series out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(t));
    return out;
  }

  /// [x^n t^(n-shift)] for each n, zero where n < shift.
  Series diagonal(int shift) const {
    Series out;
    out.reserve(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      int tdeg = static_cast<int>(n) - shift;
      out.push_back(tdeg < 0 ? Rational(0) : coeffs_[n].coeff(static_cast<std::size_t>(tdeg)));
    }
    return out;
  }

  friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

 private:
  std::vector<Poly> coeffs_;
};

/// Diagonal extraction: shift 1 reads [x^n t^(n-1)], shift 0 reads [x^n t^n].
inline Series diagonal_extract(const BiSeries& series, int shift) {
  if (shift != 0 && shift != 1) throw InvalidArgument("diagonal shift must be 0 or 1");
  return series.diagonal(shift);
}

/// Taylor coefficients of num/den at x = 0 up to x^order.
///
/// The x-constant part of the denominator must be nonzero; when it is a
/// nonconstant polynomial in t each coefficient is obtained by exact division,
/// which fails (PoleAtOrigin) unless the expansion really lives in Q[t][[x]].
inline BiSeries series_expand(const RatFuncXT& f, int order) {
  if (order < 0) throw InvalidArgument("negative series order");
  const char tvar = f.num().vars()[1];
  std::vector<Poly> num = f.num().coefficients_in_first();
  std::vector<Poly> den = f.den().coefficients_in_first();
  if (den.empty() || den[0].is_zero()) throw PoleAtOrigin("denominator vanishes at x = 0");
  const Poly& d0 = den[0];
  const bool unit = d0.is_constant();
  const Rational d0_inv = unit ? Rational(1 / d0.coeff(0)) : Rational(0);
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Poly acc = static_cast<std::size_t>(n) < num.size() ? num[static_cast<std::size_t>(n)] : Poly::zero(tvar);
    for (int j = 1; j <= n && static_cast<std::size_t>(j) < den.size(); ++j) {
      acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
    }
    if (unit) {
      out.push_back((acc * d0_inv).with_var(tvar));
    } else {
      try {
        out.push_back(divexact(acc, d0).with_var(tvar));
      } catch (const NotDivisible&) {
        throw PoleAtOrigin("coefficient of x^" + std::to_string(n) + " is not a polynomial in " + tvar);
      }
    }
  }
  return BiSeries(std::move(out));
}

inline Series series_expand(const RatFuncX& f, int order) {
  if (order < 0) throw InvalidArgument("negative series order");
  const auto& num = f.num().coefficients();
  const auto& den = f.den().coefficients();
  if (den.empty() || is_zero(den[0])) throw PoleAtOrigin("denominator vanishes at x = 0");
  Series out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = static_cast<std::size_t>(n) < num.size() ? num[static_cast<std::size_t>(n)] : Rational(0);
    for (int j = 1; j <= n && static_cast<std::size_t>(j) < den.size(); ++j) {
      acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
    }
    out.push_back(acc / den[0]);
  }
  return out;
}

/// Lifts a univariate series to one with constant t-coefficients.
inline BiSeries to_biseries(const Series& s, char tvar = 't') {
  std::vector<Poly> coeffs;
  coeffs.reserve(s.size());
  for (const auto& c : s) coeffs.push_back(Poly::constant(c, tvar));
  return BiSeries(std::move(coeffs));
}

/// (series * poly) truncated after x^series.order(); used to check expansions.
inline std::vector<Poly> truncated_product(const BiSeries& s, const BiPoly& p) {
  std::vector<Poly> pc = p.coefficients_in_first();
  std::vector<Poly> out;
  const char tvar = p.vars()[1];
  for (int n = 0; n <= s.order(); ++n) {
    Poly acc = Poly::zero(tvar);
    for (int j = 0; j <= n && static_cast<std::size_t>(j) < pc.size(); ++j) {
      acc += pc[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(n - j)];
    }
    out.push_back(acc.with_var(tvar));
  }
  return out;
}

/// CSV rows "n,t_degree,coefficient" with a header; zero coefficients skipped.
inline void write_series_csv(std::ostream& out, const BiSeries& s) {
  out << "n,t_degree,coefficient\n";
  for (int n = 0; n <= s.order(); ++n) {
    const Poly& c = s[static_cast<std::size_t>(n)];
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (is_zero(c.coeff(d))) continue;
      out << n << "," << d << "," << to_string(c.coeff(d)) << "\n";
    }
  }
}

}  // namespace staircase
