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

#include "gtest/gtest.h"
#include "staircase/chebyshev.hpp"
#include "staircase/ratfunc.hpp"

namespace staircase {
namespace {

const Poly kX = Poly::identity();

TEST(ChebyshevTest, SecondKindExamples) {
  EXPECT_EQ(cheb_u(2), (Poly{-1, 0, 4}));
  EXPECT_EQ(cheb_u(-1), Poly{});
  EXPECT_EQ(cheb_u(-2), Poly{-1});
  EXPECT_EQ(cheb_u(3).eval(2), 56);
  EXPECT_EQ(cheb_u(-5), -cheb_u(3));
}

TEST(ChebyshevTest, FirstKindExamples) {
  EXPECT_EQ(cheb_t(2), (Poly{-1, 0, 2}));
  EXPECT_EQ(cheb_t(3), (Poly{0, -3, 0, 4}));
  EXPECT_EQ((cheb_u(4) - cheb_u(2)) / Rational(2), (Poly{1, 0, -8, 0, 8}));
  EXPECT_EQ(cheb_t(-3), cheb_t(3));
}

TEST(ChebyshevTest, ZPolyExamples) {
  EXPECT_EQ(z_poly(1), Poly{1});
  EXPECT_EQ(z_poly(2), (Poly{1, 2}));
  EXPECT_EQ(z_poly(0), Poly{});
  EXPECT_EQ(z_poly(-2), Poly{1});
}

TEST(ChebyshevTest, CompositionExamples) {
  EXPECT_EQ(cheb_compose(2, 2), (Poly{-2, 0, 4}));
  EXPECT_EQ(cheb_compose(3, 1), Poly{1});
  EXPECT_EQ(cheb_compose(2, 3) * cheb_u(1), cheb_u(5));
  EXPECT_EQ(cheb_u(5), (Poly{0, 6, 0, -32, 0, 32}));
  EXPECT_THROW(cheb_compose(0, 2), InvalidArgument);
}

TEST(ChebyshevTest, RecurrencesHold) {
  for (long n = 1; n < 24; ++n) {
    EXPECT_EQ(cheb_u(n + 1), kX * cheb_u(n) * Rational(2) - cheb_u(n - 1));
    EXPECT_EQ(cheb_t(n + 1), kX * cheb_t(n) * Rational(2) - cheb_t(n - 1));
  }
}

TEST(ChebyshevTest, FirstKindFromSecondKind) {
  for (long n = 0; n <= 24; ++n) {
    EXPECT_EQ(cheb_t(n), (cheb_u(n) - cheb_u(n - 2)) / Rational(2)) << n;
  }
}

TEST(ChebyshevTest, ProductIdentity) {
  // U_i U_j = (U_{i-j} - x U_{i-j-1} - U_{i+j+2} + x U_{i+j+1}) / (2(1 - x^2))
  const Poly denom{2, 0, -2};
  for (long i = 0; i <= 10; ++i) {
    for (long j = 0; j <= i; ++j) {
      Poly rhs = cheb_u(i - j) - kX * cheb_u(i - j - 1) - cheb_u(i + j + 2) + kX * cheb_u(i + j + 1);
      EXPECT_EQ(cheb_u(i) * cheb_u(j) * denom, rhs) << i << "," << j;
      EXPECT_EQ(RatFuncX(cheb_u(i) * cheb_u(j)), RatFuncX(rhs, denom));
    }
  }
}

TEST(ChebyshevTest, CompositionFactorization) {
  for (long n = 1; n <= 5; ++n) {
    for (long m = 1; m <= 5; ++m) {
      EXPECT_EQ(cheb_u(n * m - 1), cheb_compose(n, m) * cheb_u(n - 1)) << n << "," << m;
    }
  }
}

TEST(ChebyshevTest, ZPolyDefiningRelation) {
  for (long k = 0; k <= 24; ++k) {
    EXPECT_EQ(z_poly(k) * (2 * Poly::identity() - 2) + Poly{1} + cheb_u(k - 1), cheb_u(k)) << k;
  }
}

TEST(ChebyshevTest, CacheMatchesRecurrenceBeyondLimit) {
  ChebCache small(ChebKind::second, 4);
  EXPECT_EQ(small.limit(), 4U);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(small.get(n), cheb_u(static_cast<long>(n)));
  ChebCache first(ChebKind::first, 3);
  for (std::size_t n = 2; n < first.computed().size(); ++n) {
    EXPECT_EQ(first.computed()[n], ChebCache::next(first.computed()[n - 1], first.computed()[n - 2]));
  }
}

}  // namespace
}  // namespace staircase
