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

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "staircase/chebyshev.hpp"
#include "staircase/csv.hpp"
#include "staircase/errors.hpp"
#include "staircase/genfunc.hpp"
#include "staircase/matrix.hpp"
#include "staircase/rational.hpp"

namespace staircase {

using QMatrix = Matrix<Rational>;
using IntMatrix = std::vector<std::vector<long>>;

/// A(x,t): 1 - tx on the diagonal, -tx on the two neighbouring diagonals, -x elsewhere.
template <class T>
Matrix<T> build_A(int k, const T& x, const T& t) {
  if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
  Matrix<T> a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      T e = std::abs(i - j) <= 1 ? T(-(t * x)) : T(-x);
      if (i == j) e = e + T(1);
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e;
    }
  }
  return a;
}

/// C(y): 1 - y on the diagonal, -y on the neighbouring diagonals, 0 elsewhere.
template <class T>
Matrix<T> build_C(int k, const T& y) {
  if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
  Matrix<T> c(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (std::abs(i - j) > 1) continue;
      T e = T(-y);
      if (i == j) e = e + T(1);
      c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e;
    }
  }
  return c;
}

/// The point phi = (1 - y)/(2y) at which the Chebyshev factors are taken.
inline Rational phi_of(const Rational& y) {
  if (is_zero(y)) throw SingularParameter("y = 0");
  return (1 - y) / (2 * y);
}

/// (C(y)^-1)_{ij} = U_{min-1}(phi) U_{k-max}(phi) / (y U_k(phi)), 1-based i, j.
inline QMatrix c_inverse_closed(int k, const Rational& y) {
  if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
  const Rational phi = phi_of(y);
  std::vector<Rational> u;
  for (int n = 0; n <= k; ++n) u.push_back(cheb_u(n).eval(phi));
  const Rational& uk = u[static_cast<std::size_t>(k)];
  if (is_zero(uk)) throw SingularParameter("U_k(phi) = 0");
  QMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          u[static_cast<std::size_t>(lo - 1)] * u[static_cast<std::size_t>(k - hi)] / (y * uk);
    }
  }
  return m;
}

/// alpha_i(z) = (U_{k-i}(U_i - 1) - U_{i-1}(U_{k-i-1} + 1)) / U_k, all at z.
inline Rational alpha(int k, int i, const Rational& z) {
  auto U = [&](long n) { return cheb_u(n).eval(z); };
  const Rational uk = U(k);
  if (is_zero(uk)) throw SingularParameter("U_k = 0");
  return (U(k - i) * (U(i) - 1) - U(i - 1) * (U(k - i - 1) + 1)) / uk;
}

/// k - (U_k - U_{k-1} - 1) / ((z - 1) U_k) at z.
inline Rational alpha_sum_closed(int k, const Rational& z) {
  const Rational uk = cheb_u(k).eval(z);
  if (is_zero(uk) || z == 1) throw SingularParameter("alpha sum pole");
  return k - (uk - cheb_u(k - 1).eval(z) - 1) / ((z - 1) * uk);
}

struct CheckResult {
  bool pass = true;
  std::string witness;
};

namespace detail {

inline std::string point_string(const Rational& x, const Rational& t) {
  return "x=" + to_string(x) + ";t=" + to_string(t);
}

inline QMatrix all_ones(int k) {
  return QMatrix::filled(static_cast<std::size_t>(k), static_cast<std::size_t>(k), Rational(1));
}

}  // namespace detail

/// A^-1 = C^-1 + x C^-1 1 1^T C^-1 / (1 - x 1^T C^-1 1), C taken at x(t-1).
inline CheckResult sherman_morrison_check(int k, const Rational& x, const Rational& t) {
  const QMatrix a_inv = invert(build_A(k, x, t));
  const QMatrix c_inv = invert(build_C(k, Rational(x * (t - 1))));
  const Rational denom = 1 - x * c_inv.total();
  if (is_zero(denom)) throw SingularParameter("1 - x 1^T C^-1 1 = 0");
  const QMatrix rhs = c_inv + Rational(x / denom) * (c_inv * detail::all_ones(k) * c_inv);
  if (a_inv == rhs) return {};
  return {false, "A^-1=" + a_inv.to_string() + " rank-one form=" + rhs.to_string()};
}

/// 1^T C^-1 1 = gamma(x,t); (C^-1 1)_i = alpha_i(phi)/(1 - 3y); and the
/// closed form of sum alpha_i(phi); here y = x(t-1).
inline CheckResult gamma_alpha_check(int k, const Rational& x, const Rational& t) {
  const Rational y = x * (t - 1);
  const Rational phi = phi_of(y);
  if (3 * y == 1) throw SingularParameter("1 - 3x(t-1) = 0");
  const QMatrix c_inv = invert(build_C(k, y));
  const Rational gamma = evaluate(gamma_ratfunc(k), x, t);
  if (c_inv.total() != gamma) return {false, "1^T C^-1 1=" + to_string(c_inv.total()) + " gamma=" + to_string(gamma)};
  const std::vector<Rational> rows = c_inv.row_sums();
  Rational sum = 0;
  for (int i = 1; i <= k; ++i) {
    const Rational a = alpha(k, i, phi);
    sum += a;
    const Rational want = a / (1 - 3 * y);
    if (rows[static_cast<std::size_t>(i - 1)] != want) {
      return {false, "i=" + std::to_string(i) + " (C^-1 1)_i=" + to_string(rows[static_cast<std::size_t>(i - 1)]) +
                         " alpha_i/(1-3y)=" + to_string(want)};
    }
  }
  const Rational closed = alpha_sum_closed(k, phi);
  if (sum != closed) return {false, "sum alpha=" + to_string(sum) + " closed=" + to_string(closed)};
  return {};
}

/// F(x,t) = 1 + x 1^T A^-1 1 against the closed form of F.
inline CheckResult f_reconstruction_check(int k, const Rational& x, const Rational& t) {
  const Rational lhs = 1 + x * invert(build_A(k, x, t)).total();
  const Rational rhs = evaluate(f_closed(k), x, t);
  if (lhs == rhs) return {};
  return {false, "1+x1^TA^-1 1=" + to_string(lhs) + " F=" + to_string(rhs)};
}

enum class XWhich { X1, X2, X3 };

inline std::string to_string(XWhich w) {
  switch (w) {
    case XWhich::X1: return "X1";
    case XWhich::X2: return "X2";
    case XWhich::X3: return "X3";
  }
  return "?";
}

/// Entry (j,s) counts the i in [k] with the defining conditions on |i-j|, |i-s|.
inline IntMatrix build_X_count(XWhich which, int k) {
  if (k < 2) throw InvalidArgument("alphabet size must be at least 2");
  IntMatrix m(static_cast<std::size_t>(k), std::vector<long>(static_cast<std::size_t>(k), 0));
  for (int j = 1; j <= k; ++j) {
    for (int s = 1; s <= k; ++s) {
      long count = 0;
      for (int i = 1; i <= k; ++i) {
        const bool near_j = std::abs(i - j) <= 1;
        const bool near_s = std::abs(i - s) <= 1;
        switch (which) {
          case XWhich::X1: count += near_j && near_s; break;
          case XWhich::X2: count += near_j && !near_s; break;
          case XWhich::X3: count += !near_j && !near_s; break;
        }
      }
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s - 1)] = count;
    }
  }
  return m;
}

namespace detail {

inline bool is_pair(int j, int s, std::initializer_list<std::pair<int, int>> pairs) {
  for (const auto& p : pairs) {
    if (p.first == j && p.second == s) return true;
  }
  return false;
}

inline long x1_case(int k, int j, int s) {
  if (2 <= s && s == j && j <= k - 1) return 3;
  if (is_pair(j, s, {{1, 1}, {k, k}}) || std::abs(s - j) == 1) return 2;
  if (std::abs(s - j) == 2) return 1;
  return 0;
}

// With `verbatim`, the "s = j - 1" branch keeps its printed lower bound 3,
// which contradicts the k = 8 example; otherwise it starts at s = 1.
inline long x2_case(int k, int j, int s, bool verbatim) {
  if (is_pair(j, s, {{1, 2}, {k, k - 1}}) || s == j) return 0;
  const bool below = s == j - 1 && s <= k - 2 && (!verbatim || 3 <= s);
  if (is_pair(j, s, {{1, 3}, {k, k - 2}}) || (3 <= s && s == j + 1) || below) return 1;
  if ((j == 1 && 4 <= s && s <= k) || (j == k && 1 <= s && s <= k - 3) || (4 <= s && s == j + 2) ||
      (s == j - 2 && s <= k - 3)) {
    return 2;
  }
  return 3;
}

inline long x3_case(int k, int j, int s) {
  if (is_pair(j, s, {{1, 1}, {k, k}})) return k - 2;
  if (is_pair(j, s, {{1, 2}, {2, 1}, {k - 1, k}, {k, k - 1}}) || (2 <= j && j == s && s <= k - 1)) return k - 3;
  if (is_pair(j, s, {{1, 3}, {3, 1}, {k - 2, k}, {k, k - 2}, {1, k}, {k, 1}}) || (3 <= s && s == j + 1 && s <= k - 1) ||
      (2 <= s && s == j - 1 && s <= k - 2)) {
    return k - 4;
  }
  if ((j == 1 && 4 <= s && s <= k - 1) || (j == k && 2 <= s && s <= k - 3) || (s == 1 && 4 <= j && j <= k - 1) ||
      (s == k && 2 <= j && j <= k - 3) || (4 <= s && s == j + 2 && s <= k - 1) || (2 <= s && s == j - 2 && s <= k - 3)) {
    return k - 5;
  }
  return k - 6;
}

}  // namespace detail

inline constexpr int kMinCaseAnalysisK = 5;

/// X matrices from the case analyses, first matching case winning. The
/// analyses overlap below k = 5, so smaller k is rejected.
inline IntMatrix build_X_cases(XWhich which, int k, bool verbatim = false) {
  if (k < kMinCaseAnalysisK) throw InvalidArgument("case analyses need k >= 5; use build_X_count");
  IntMatrix m(static_cast<std::size_t>(k), std::vector<long>(static_cast<std::size_t>(k), 0));
  for (int j = 1; j <= k; ++j) {
    for (int s = 1; s <= k; ++s) {
      long v = 0;
      switch (which) {
        case XWhich::X1: v = detail::x1_case(k, j, s); break;
        case XWhich::X2: v = detail::x2_case(k, j, s, verbatim); break;
        case XWhich::X3: v = detail::x3_case(k, j, s); break;
      }
      m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s - 1)] = v;
    }
  }
  return m;
}

/// (X1)_{js} + (X2)_{js} + (X2)_{sj} + (X3)_{js} = k for every j, s.
inline CheckResult x_partition_check(int k) {
  const IntMatrix x1 = build_X_count(XWhich::X1, k);
  const IntMatrix x2 = build_X_count(XWhich::X2, k);
  const IntMatrix x3 = build_X_count(XWhich::X3, k);
  for (std::size_t j = 0; j < x1.size(); ++j) {
    for (std::size_t s = 0; s < x1.size(); ++s) {
      const long total = x1[j][s] + x2[j][s] + x2[s][j] + x3[j][s];
      if (total != k) return {false, "j=" + std::to_string(j + 1) + ";s=" + std::to_string(s + 1) + ";sum=" + std::to_string(total)};
    }
  }
  return {};
}

inline CheckResult x_cases_check(XWhich which, int k, bool verbatim = false) {
  const IntMatrix cases = build_X_cases(which, k, verbatim);
  const IntMatrix count = build_X_count(which, k);
  for (std::size_t j = 0; j < cases.size(); ++j) {
    for (std::size_t s = 0; s < cases.size(); ++s) {
      if (cases[j][s] != count[j][s]) {
        return {false, "j=" + std::to_string(j + 1) + ";s=" + std::to_string(s + 1) + ";cases=" + std::to_string(cases[j][s]) +
                           ";count=" + std::to_string(count[j][s])};
      }
    }
  }
  return {};
}

/// G(x,t) = 1 + ktx + x^2 sum_{j,s} (t^2 X1 + 2t X2 + X3)_{js} (A^-1)_{js}
/// against the closed form of G.
inline CheckResult g_reconstruction_check(int k, const Rational& x, const Rational& t) {
  const QMatrix a_inv = invert(build_A(k, x, t));
  const IntMatrix x1 = build_X_count(XWhich::X1, k);
  const IntMatrix x2 = build_X_count(XWhich::X2, k);
  const IntMatrix x3 = build_X_count(XWhich::X3, k);
  Rational acc = 0;
  for (std::size_t j = 0; j < x1.size(); ++j) {
    for (std::size_t s = 0; s < x1.size(); ++s) {
      const Rational weight = t * t * x1[j][s] + 2 * t * x2[j][s] + x3[j][s];
      acc += weight * a_inv(j, s);
    }
  }
  const Rational lhs = 1 + k * t * x + x * x * acc;
  const Rational rhs = evaluate(g_closed(k), x, t);
  if (lhs == rhs) return {};
  return {false, "multiset form=" + to_string(lhs) + " G=" + to_string(rhs)};
}

inline constexpr int kMaxSymbolicInversion = 4;

/// F(x,t) = 1 + x 1^T A(x,t)^-1 1 with A inverted over Q(x,t), compared with
/// the closed form of F as rational functions.
inline CheckResult symbolic_f_check(int k) {
  if (k > kMaxSymbolicInversion) throw InvalidArgument("symbolic inversion is limited to k <= 4");
  const RatFuncXT x(BiPoly::first_var());
  const RatFuncXT t(BiPoly::second_var());
  const RatFuncXT lhs = RatFuncXT(1) + x * invert(build_A(k, x, t)).total();
  const RatFuncXT rhs = f_closed(k);
  if (lhs == rhs) return {};
  return {false, "inverse form=" + lhs.to_string() + " F=" + rhs.to_string()};
}

/// Random (x, t) with small numerators and denominators at which every
/// quantity used by the pointwise checks is defined.
inline std::pair<Rational, Rational> sample_regular_point(int k, std::mt19937_64& rng) {
  auto draw = [&rng]() {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 20) + 1;
    return make_rational(num, den);
  };
  for (;;) {
    const Rational x = draw();
    const Rational t = draw();
    const Rational y = x * (t - 1);
    if (is_zero(x) || is_zero(y) || 3 * y == 1 || y == -1) continue;
    try {
      const Rational phi = phi_of(y);
      if (is_zero(cheb_u(k).eval(phi))) continue;
      invert(build_A(k, x, t));
      const QMatrix c_inv = invert(build_C(k, y));
      if (is_zero(1 - x * c_inv.total())) continue;
      evaluate(g_closed(k), x, t);
      return {x, t};
    } catch (const Error&) {
      continue;
    }
  }
}

struct MatrixCheckRow {
  std::string check;
  int k;
  std::string point;
  bool pass;
  std::string witness;
};

/// Every check for k in [k_min, k_max], `points` random points each.
inline std::vector<MatrixCheckRow> run_matrix_checks(int k_min, int k_max, int points, std::uint64_t seed) {
  std::vector<MatrixCheckRow> rows;
  auto add = [&rows](const std::string& name, int k, const std::string& point, const CheckResult& r) {
    rows.push_back({name, k, point, r.pass, r.witness});
  };
  for (int k = k_min; k <= k_max; ++k) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
    for (int p = 0; p < points; ++p) {
      const auto [x, t] = sample_regular_point(k, rng);
      const std::string at = detail::point_string(x, t);
      const Rational y = x * (t - 1);
      const QMatrix c = build_C(k, y);
      const QMatrix c_inv = invert(c);
      add("invert_exact", k, at, {c * c_inv == QMatrix::identity(static_cast<std::size_t>(k)), ""});
      const QMatrix closed = c_inverse_closed(k, y);
      add("c_inverse_closed", k, at, {closed == c_inv, closed == c_inv ? "" : closed.to_string()});
      add("decomposition", k, at, {build_A(k, x, t) == c - Rational(x) * detail::all_ones(k), ""});
      add("sherman_morrison", k, at, sherman_morrison_check(k, x, t));
      add("gamma_alpha", k, at, gamma_alpha_check(k, x, t));
      add("f_reconstruction", k, at, f_reconstruction_check(k, x, t));
      add("g_reconstruction", k, at, g_reconstruction_check(k, x, t));
    }
    if (k <= kMaxSymbolicInversion) add("symbolic_f", k, "symbolic", symbolic_f_check(k));
    add("x_partition", k, "", x_partition_check(k));
    if (k >= kMinCaseAnalysisK) {
      for (XWhich w : {XWhich::X1, XWhich::X2, XWhich::X3}) add("x_cases_" + to_string(w), k, "", x_cases_check(w, k));
    }
  }
  return rows;
}

inline void write_matrix_report_csv(std::ostream& out, const std::vector<MatrixCheckRow>& rows) {
  out << "check,k,point,result,witness\n";
  for (const auto& r : rows) {
    out << r.check << ',' << r.k << ',' << csv_field(r.point) << ',' << (r.pass ? "pass" : "fail") << ',' << csv_field(r.witness) << '\n';
  }
}

}  // namespace staircase
