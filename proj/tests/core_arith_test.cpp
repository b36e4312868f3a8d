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

#include <random>

#include "gtest/gtest.h"
#include "staircase/bipoly.hpp"
#include "staircase/poly.hpp"
#include "staircase/ratfunc.hpp"
#include "staircase/series.hpp"

namespace staircase {
namespace {

const BiPoly kX = BiPoly::first_var();
const BiPoly kT = BiPoly::second_var();
const Poly kPx = Poly::identity('x');

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 20) + 1;
  return make_rational(num, den);
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c(static_cast<std::size_t>(rng() % static_cast<unsigned>(max_degree + 1)) + 1);
  for (auto& v : c) v = random_rational(rng);
  return Poly(c);
}

BiPoly random_bipoly(std::mt19937_64& rng, int max_degree, int terms) {
  BiPoly p;
  for (int i = 0; i < terms; ++i) {
    p += BiPoly::monomial(random_rational(rng), static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1)),
                          static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1)));
  }
  return p;
}

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(make_rational(4, -6), make_rational(-2, 3));
  EXPECT_EQ(make_rational(0, 5).get_den(), 1);
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_THROW(make_rational(1, 0), ZeroDenominator);
  EXPECT_THROW(parse_rational("1/0"), ZeroDenominator);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
}

TEST(RationalTest, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), 0);
    if (!is_zero(a)) {
      EXPECT_EQ(a * (1 / a), 1);
    }
  }
}

TEST(PolyTest, Arithmetic) {
  EXPECT_EQ((Poly{-1, 1} * Poly{1, 1}), (Poly{-1, 0, 1}));
  Poly p{3, 0, 5};
  EXPECT_EQ(p + Poly{}, p);
  EXPECT_EQ((Poly{1, 2} * Poly{-1, 2}), (Poly{-1, 0, 4}));
  EXPECT_EQ((Poly{1, 1} - Poly{1, 1}).degree(), -1);
  EXPECT_EQ((Poly{-1, 0, 4}).to_string(), "4*x^2 - 1");
  EXPECT_EQ((Poly{0, 2}.compose(Poly{-1, 0, 2})), (Poly{-2, 0, 4}));
  EXPECT_THROW(Poly::identity('x') + Poly::identity('t'), InvalidArgument);
  // A nested pair lists coefficients; it must not collapse into a fraction.
  EXPECT_EQ((Poly{{2, 7}, 't'}), 2 + 7 * Poly::identity('t'));
  EXPECT_EQ((Poly{{1, -1}, 'y'}).to_string(), "-y + 1");
}

TEST(PolyTest, ExactDivision) {
  EXPECT_EQ(divexact(Poly{-1, 0, 1}, Poly{-1, 1}), (Poly{1, 1}));
  EXPECT_EQ(divexact(Poly{-2, -2, 4}, Poly{-2, 2}), (Poly{1, 2}));
  EXPECT_THROW(divexact(Poly{1, 0, 1}, Poly{-1, 1}), NotDivisible);
}

TEST(PolyTest, GcdRecoversCommonFactor) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Poly g = random_poly(rng, 3);
    if (g.is_zero()) continue;
    Poly a = g * random_poly(rng, 4);
    Poly b = g * random_poly(rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    Poly d = gcd(a, b);
    EXPECT_NO_THROW(divexact(a, d));
    EXPECT_NO_THROW(divexact(b, d));
    EXPECT_NO_THROW(divexact(d, g.primitive_part()));
  }
}

TEST(BiPolyTest, ArithmeticAndPrinting) {
  BiPoly p = (kX - 1) * (kX + 1);
  EXPECT_EQ(p, kX * kX - 1);
  EXPECT_EQ(((2 * kX + 1) * (2 * kX - 1)), 4 * kX * kX - 1);
  EXPECT_EQ(p + BiPoly{}, p);
  BiPoly q = 1 - 2 * kT * kX + 2 * kX;
  EXPECT_EQ(q.to_string(), "-2*x*t + 2*x + 1");
  EXPECT_EQ(q.eval(make_rational(1, 2), 3), -1);
}

TEST(BiPolyTest, ExactDivisionAndGcd) {
  BiPoly f = 1 - 3 * kX * (kT - 1);
  BiPoly g = kX * kX + kT + 2;
  EXPECT_EQ(divexact(f * g, g), f);
  EXPECT_THROW(divexact(f * g + 1, g), NotDivisible);
  BiPoly d = gcd(f * g * g, g * (kX - kT));
  EXPECT_EQ(divexact(d, g).is_constant(), true);
}

TEST(BiPolyTest, RandomGcdIsCommonDivisor) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    BiPoly g = random_bipoly(rng, 2, 3);
    BiPoly a = g * random_bipoly(rng, 2, 3);
    BiPoly b = g * random_bipoly(rng, 2, 3);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    BiPoly d = gcd(a, b);
    EXPECT_NO_THROW(divexact(a, d));
    EXPECT_NO_THROW(divexact(b, d));
    EXPECT_NO_THROW(divexact(d, g));
  }
}

TEST(RatFuncTest, Normalize) {
  RatFuncXT half = ratfunc_normalize(2 * kX + 2, 4 * kX + 4);
  EXPECT_TRUE(half.same_representation(RatFuncXT(make_rational(1, 2))));
  RatFuncXT poly = ratfunc_normalize(kX * kX - 1, kX - 1);
  EXPECT_TRUE(poly.is_polynomial());
  EXPECT_EQ(poly.num(), kX + 1);
  RatFuncXT sign = ratfunc_normalize(-kX, kX - 1);
  EXPECT_EQ(sign.num(), kX);
  EXPECT_EQ(sign.den(), 1 - kX);
  EXPECT_THROW(ratfunc_normalize(kX, BiPoly{}), ZeroDenominator);

  RatFuncX uni = ratfunc_normalize(Poly{-1, 0, 1}, Poly{-1, 1});
  EXPECT_EQ(uni.num(), (Poly{1, 1}));
  EXPECT_EQ(uni.den(), Poly{1});
}

TEST(RatFuncTest, EqualityIsEquivalenceOnRandomTriples) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    BiPoly n = random_bipoly(rng, 2, 3), d = random_bipoly(rng, 2, 3) + 1;
    BiPoly s = random_bipoly(rng, 1, 2) + 2;
    if (d.is_zero() || s.is_zero()) continue;
    RatFuncXT a(n, d);
    RatFuncXT b(n * s, d * s);
    RatFuncXT c(n * s * s, d * s * s);
    EXPECT_EQ(a, a);
    EXPECT_EQ(a == b, b == a);
    EXPECT_TRUE(a == b && b == c && a == c);
    EXPECT_TRUE(a.same_representation(b));
    EXPECT_EQ(a + b - b, a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), RatFuncXT(1));
    }
  }
}

TEST(SeriesTest, Examples) {
  Series geo = series_expand(RatFuncX(Poly{1}, Poly{1, -2}), 4);
  EXPECT_EQ(geo, (Series{1, 2, 4, 8, 16}));
  Series table = series_expand(RatFuncX(Poly{1, 0, 1}, Poly{1, 0, -1}), 5);
  EXPECT_EQ(table, (Series{1, 0, 2, 0, 2, 0}));
  BiSeries tx = series_expand(RatFuncXT(1, 1 - kT * kX), 2);
  EXPECT_EQ(tx[0], Poly::constant(1, 't'));
  EXPECT_EQ(tx[1], Poly::identity('t'));
  EXPECT_EQ(tx[2], (Poly{{0, 0, 1}, 't'}));
  EXPECT_EQ(diagonal_extract(tx, 0), (Series{1, 1, 1}));
  EXPECT_THROW(series_expand(RatFuncXT(1, kX), 3), PoleAtOrigin);
  EXPECT_THROW(series_expand(RatFuncX(Poly{1}, Poly{0, 1}), 3), PoleAtOrigin);
}

TEST(SeriesTest, RoundTripOnRandomRatFuncs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    BiPoly num = random_bipoly(rng, 3, 4);
    BiPoly den = random_bipoly(rng, 3, 4) * kX + BiPoly(random_rational(rng) + 21);
    RatFuncXT f(num, den);
    int order = static_cast<int>(rng() % 17);
    BiSeries s = series_expand(f, order);
    std::vector<Poly> back = truncated_product(s, f.den());
    std::vector<Poly> expect = f.num().coefficients_in_first();
    for (int n = 0; n <= order; ++n) {
      Poly want = static_cast<std::size_t>(n) < expect.size() ? expect[static_cast<std::size_t>(n)] : Poly{};
      EXPECT_EQ(back[static_cast<std::size_t>(n)], want) << "order " << n;
    }
  }
}

}  // namespace
}  // namespace staircase
