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

#include <sstream>

#include "gtest/gtest.h"
#include "staircase/wordstats.hpp"

namespace staircase {
namespace {

Poly tpoly(std::initializer_list<Rational> c) { return Poly(c, 't'); }

TEST(StatTest, Examples) {
  Word w = Word::from_digits("423353", 5);
  EXPECT_EQ(stat(w, StatKind::linear), 2);
  EXPECT_EQ(stat(w, StatKind::cyclic), 3);
  Word same = Word::from_digits("11", 2);
  EXPECT_EQ(stat(same, StatKind::linear), 1);
  EXPECT_EQ(stat(same, StatKind::cyclic), 2);
  EXPECT_EQ(stat(Word({}, 3), StatKind::linear), 0);
  EXPECT_EQ(stat(Word({2}, 3), StatKind::cyclic), 1);
  EXPECT_THROW(Word({0, 1}, 3), InvalidArgument);
  EXPECT_THROW(Word({4}, 3), InvalidArgument);
}

TEST(DistributionTest, BruteForceExamples) {
  EXPECT_EQ(brute_distribution(2, 3, StatKind::linear).to_poly(), tpoly({2, 7}));
  EXPECT_EQ(brute_distribution(2, 3, StatKind::cyclic).to_poly(), tpoly({2, 0, 7}));
  EXPECT_EQ(brute_distribution(3, 2, StatKind::linear).to_poly(), tpoly({0, 0, 8}));
  EXPECT_EQ(brute_distribution(0, 4, StatKind::linear).to_poly(), tpoly({1}));
  EXPECT_EQ(brute_distribution(0, 4, StatKind::cyclic).to_poly(), tpoly({1}));
  EXPECT_EQ(brute_distribution(1, 4, StatKind::cyclic).to_poly(), tpoly({0, 4}));
}

TEST(DistributionTest, BudgetGuard) {
  EXPECT_THROW(brute_distribution(12, 6, StatKind::linear), BudgetExceeded);
  EXPECT_THROW(brute_distribution(4, 3, StatKind::linear, 100), BudgetExceeded);
  EXPECT_NO_THROW(brute_distribution(4, 3, StatKind::linear, 81 * 4));
}

TEST(DistributionTest, TransferMatrixExamples) {
  EXPECT_EQ(dp_distribution(2, 3, StatKind::linear).to_poly(), tpoly({2, 7}));
  EXPECT_EQ(dp_distribution(8, 5, StatKind::linear).total(), 390625);
  EXPECT_EQ(dp_distribution(3, 3, StatKind::cyclic).at(3), 15);
}

TEST(DistributionTest, TransferMatrixMatchesBruteForce) {
  for (int k = 2; k <= 6; ++k) {
    for (int n = 0; n <= 8; ++n) {
      for (StatKind kind : {StatKind::linear, StatKind::cyclic}) {
        EXPECT_EQ(dp_distribution(n, k, kind), brute_distribution(n, k, kind)) << "n=" << n << " k=" << k << " " << to_string(kind);
      }
    }
  }
}

TEST(DistributionTest, MassAndLengths) {
  for (int k = 2; k <= 7; ++k) {
    for (int n = 0; n <= 10; ++n) {
      Integer total = 1;
      for (int i = 0; i < n; ++i) total *= k;
      TDist lin = dp_distribution(n, k, StatKind::linear);
      TDist cyc = dp_distribution(n, k, StatKind::cyclic);
      EXPECT_EQ(lin.total(), total);
      EXPECT_EQ(cyc.total(), total);
      EXPECT_EQ(lin.counts.size(), n == 0 ? 1U : static_cast<std::size_t>(n));
      EXPECT_EQ(cyc.counts.size(), static_cast<std::size_t>(n) + 1);
    }
  }
}

TEST(DistributionTest, TwoLetterDegeneracy) {
  for (int n = 1; n <= 12; ++n) {
    Integer total = Integer(1) << n;
    TDist lin = dp_distribution(n, 2, StatKind::linear);
    TDist cyc = dp_distribution(n, 2, StatKind::cyclic);
    EXPECT_EQ(lin.at(n - 1), total);
    EXPECT_EQ(lin.total(), total);
    EXPECT_EQ(cyc.at(n), total);
    EXPECT_EQ(cyc.total(), total);
  }
}

TEST(DistributionTest, ReflectionInvariance) {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<int> letters(static_cast<std::size_t>(n), 1);
      while (true) {
        std::vector<int> reflected;
        for (int c : letters) reflected.push_back(k + 1 - c);
        for (StatKind kind : {StatKind::linear, StatKind::cyclic}) {
          EXPECT_EQ(stat(Word(letters, k), kind), stat(Word(reflected, k), kind));
        }
        int pos = n - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == k) letters[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
      }
    }
  }
}

TEST(DistributionTest, LinearSupportIsFull) {
  for (int k = 4; k <= 6; ++k) {
    for (int n = 2; n <= 9; ++n) {
      TDist d = dp_distribution(n, k, StatKind::linear);
      ASSERT_EQ(d.counts.size(), static_cast<std::size_t>(n));
      EXPECT_GT(d.counts.front(), 0);
      EXPECT_GT(d.counts.back(), 0);
    }
  }
}

TEST(SpecialCountTest, Examples) {
  EXPECT_EQ(special_count(3, 3, SpecialKind::staircase), 17);
  EXPECT_EQ(special_count(2, 4, SpecialKind::hertzsprung), 6);
  EXPECT_EQ(special_count(3, 3, SpecialKind::cyclic_hertzsprung), 0);
  EXPECT_EQ(special_count(0, 3, SpecialKind::staircase), 1);
  EXPECT_EQ(special_count(1, 5, SpecialKind::cyclic_staircase), 5);
  EXPECT_EQ(special_count(1, 5, SpecialKind::cyclic_hertzsprung), 0);
}

TEST(DistributionTest, CsvRowsSkipEmptyValues) {
  std::ostringstream out;
  write_distribution_csv(out, brute_distribution(2, 3, StatKind::cyclic));
  EXPECT_EQ(out.str(), "n,k,kind,m,count\n2,3,cyclic,0,2\n2,3,cyclic,2,7\n");
}

}  // namespace
}  // namespace staircase
