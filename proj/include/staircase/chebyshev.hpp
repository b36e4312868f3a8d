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
#include <cstdlib>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/poly.hpp"

namespace staircase {

enum class ChebKind { first, second };

/// Chebyshev polynomials of one kind for degrees 0..limit, built once.
///
/// Entry n satisfies p_n = 2x p_{n-1} - p_{n-2}, seeded by (1, x) for the first
/// kind and (1, 2x) for the second.
class ChebCache {
 public:
  static constexpr std::size_t kDefaultLimit = 64;

  explicit ChebCache(ChebKind kind, std::size_t limit = kDefaultLimit) : kind_(kind) {
    computed_.reserve(limit + 1);
    computed_.push_back(Poly{1});
    computed_.push_back(kind == ChebKind::first ? Poly{0, 1} : Poly{0, 2});
    while (computed_.size() <= limit) computed_.push_back(next(computed_[computed_.size() - 1], computed_[computed_.size() - 2]));
  }

  ChebKind kind() const { return kind_; }
  std::size_t limit() const { return computed_.size() - 1; }

  /// Degree-n polynomial, n >= 0. Past the cache limit the recurrence is
  /// continued locally without touching shared state.
  Poly get(std::size_t n) const {
    if (n < computed_.size()) return computed_[n];
    Poly prev = computed_[computed_.size() - 2];
    Poly cur = computed_.back();
    for (std::size_t i = computed_.size(); i <= n; ++i) {
      Poly nxt = next(cur, prev);
      prev = std::move(cur);
      cur = std::move(nxt);
    }
    return cur;
  }

  const std::vector<Poly>& computed() const { return computed_; }

  static Poly next(const Poly& cur, const Poly& prev) { return cur.shifted(1) * Rational(2) - prev; }

 private:
  ChebKind kind_;
  std::vector<Poly> computed_;
};

namespace detail {

inline const ChebCache& u_cache() {
  static const ChebCache cache(ChebKind::second);
  return cache;
}

inline const ChebCache& t_cache() {
  static const ChebCache cache(ChebKind::first);
  return cache;
}

}  // namespace detail

/// U_n(x) for any integer n. Negative indices follow from running the
/// recurrence backwards: U_{-1} = 0 and U_{-n} = -U_{n-2}.
inline Poly cheb_u(long n) {
  if (n >= 0) return detail::u_cache().get(static_cast<std::size_t>(n));
  if (n == -1) return Poly{};
  return -cheb_u(-n - 2);
}

/// T_n(x). Negative indices give T_{-n} = T_n, again forced by the recurrence;
/// they only arise inside closed forms evaluated at small k.
inline Poly cheb_t(long n) { return detail::t_cache().get(static_cast<std::size_t>(std::labs(n))); }

/// Z_k(x) = (U_k - U_{k-1} - 1) / (2(x - 1)), kept as an exact polynomial.
/// The numerator vanishes at x = 1 for every integer k, so the division is exact.
inline Poly z_poly(long k) {
  Poly numerator = cheb_u(k) - cheb_u(k - 1) - Poly{1};
  return divexact(numerator, Poly{-2, 2});
}

/// U_{m-1}(T_n(x)); with U_{n-1}(x) this factors U_{nm-1}(x).
inline Poly cheb_compose(long n, long m) {
  if (n < 1 || m < 1) throw InvalidArgument("cheb_compose needs n, m >= 1");
  return cheb_u(m - 1).compose(cheb_t(n));
}

}  // namespace staircase
