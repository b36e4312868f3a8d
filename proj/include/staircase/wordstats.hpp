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
#include <string>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/poly.hpp"
#include "staircase/rational.hpp"

namespace staircase {

/// A word over the alphabet {1, ..., alphabet}.
struct Word {
  std::vector<int> letters;
  int alphabet = 2;

  Word(std::vector<int> letters_in, int alphabet_in) : letters(std::move(letters_in)), alphabet(alphabet_in) {
    if (alphabet < 1) throw InvalidArgument("alphabet size must be positive");
    for (int c : letters) {
      if (c < 1 || c > alphabet) throw InvalidArgument("letter " + std::to_string(c) + " outside [1, " + std::to_string(alphabet) + "]");
    }
  }

  /// Parses a digit string such as "423353" (alphabets up to 9).
  static Word from_digits(const std::string& digits, int alphabet) {
    std::vector<int> letters;
    for (char c : digits) {
      if (c < '0' || c > '9') throw InvalidArgument("non-digit letter in '" + digits + "'");
      letters.push_back(c - '0');
    }
    return Word(std::move(letters), alphabet);
  }

  std::size_t size() const { return letters.size(); }
};

enum class StatKind { linear, cyclic };

inline std::string to_string(StatKind kind) { return kind == StatKind::linear ? "linear" : "cyclic"; }

inline StatKind parse_stat_kind(const std::string& text) {
  if (text == "linear") return StatKind::linear;
  if (text == "cyclic") return StatKind::cyclic;
  throw InvalidArgument("kind must be linear or cyclic, got '" + text + "'");
}

inline bool close_letters(int a, int b) { return std::abs(a - b) <= 1; }

/// Number of adjacent positions whose letters differ by at most one; the
/// cyclic variant also compares the last letter with the first.
inline int stat(const Word& w, StatKind kind) {
  const auto& l = w.letters;
  int count = 0;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) count += close_letters(l[i], l[i + 1]) ? 1 : 0;
  if (kind == StatKind::cyclic && !l.empty()) count += close_letters(l.back(), l.front()) ? 1 : 0;
  return count;
}

/// Histogram of a statistic over all k^n words: counts[m] words have value m.
struct TDist {
  std::vector<Integer> counts;
  int n = 0;
  int k = 0;
  StatKind kind = StatKind::linear;

  /// Number of possible statistic values: n for linear words (1 when n = 0),
  /// n + 1 for cyclic words.
  static std::size_t length_for(int n, StatKind kind) {
    if (kind == StatKind::cyclic) return static_cast<std::size_t>(n) + 1;
    return n == 0 ? 1 : static_cast<std::size_t>(n);
  }

  TDist(int n_in, int k_in, StatKind kind_in) : counts(length_for(n_in, kind_in)), n(n_in), k(k_in), kind(kind_in) {}

  Integer total() const {
    Integer sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
  }

  Integer at(int m) const {
    if (m < 0 || static_cast<std::size_t>(m) >= counts.size()) return 0;
    return counts[static_cast<std::size_t>(m)];
  }

  /// The distribution polynomial sum_m counts[m] t^m.
  Poly to_poly(char var = 't') const {
    std::vector<Rational> coeffs(counts.begin(), counts.end());
    return Poly(std::move(coeffs), var);
  }

  friend bool operator==(const TDist& a, const TDist& b) {
    return a.n == b.n && a.k == b.k && a.kind == b.kind && a.counts == b.counts;
  }
};

inline constexpr std::uint64_t kDefaultWordBudget = 100'000'000;

namespace detail {

inline void check_shape(int n, int k) {
  if (n < 0) throw InvalidArgument("word length must be nonnegative");
  if (k < 1) throw InvalidArgument("alphabet size must be positive");
}

}  // namespace detail

/// Exhaustive enumeration of [k]^n. Cost is k^n * max(n, 1) word-steps and must
/// stay within the budget. The word space is split by first letter and the
/// partial histograms summed.
inline TDist brute_distribution(int n, int k, StatKind kind, std::uint64_t budget = kDefaultWordBudget) {
  detail::check_shape(n, k);
  std::uint64_t cost = static_cast<std::uint64_t>(n == 0 ? 1 : n);
  for (int i = 0; i < n; ++i) {
    cost *= static_cast<std::uint64_t>(k);
    if (cost > budget) {
      throw BudgetExceeded(std::to_string(k) + "^" + std::to_string(n) + " words exceed " + std::to_string(budget) + " word-steps");
    }
  }
  TDist dist(n, k, kind);
  if (n == 0) {
    dist.counts[0] = 1;
    return dist;
  }
  std::vector<std::uint64_t> hist(dist.counts.size());
  for (int first = 1; first <= k; ++first) {
    std::vector<std::uint64_t> partial(dist.counts.size());
    Word w(std::vector<int>(static_cast<std::size_t>(n), 1), k);
    w.letters[0] = first;
    while (true) {
      ++partial[static_cast<std::size_t>(stat(w, kind))];
      // Odometer over positions 1..n-1.
      int pos = n - 1;
      while (pos >= 1 && w.letters[static_cast<std::size_t>(pos)] == k) {
        w.letters[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 1) break;
      ++w.letters[static_cast<std::size_t>(pos)];
    }
    for (std::size_t m = 0; m < hist.size(); ++m) hist[m] += partial[m];
  }
  for (std::size_t m = 0; m < hist.size(); ++m) dist.counts[m] = Integer(static_cast<unsigned long>(hist[m]));
  return dist;
}

namespace detail {

// counts[letter][m]: words of the current length ending in `letter` with statistic m.
using LetterHist = std::vector<std::vector<Integer>>;

inline LetterHist extend(const LetterHist& cur, int k) {
  const std::size_t len = cur[0].size() + 1;
  LetterHist next(static_cast<std::size_t>(k), std::vector<Integer>(len));
  for (int from = 0; from < k; ++from) {
    const auto& row = cur[static_cast<std::size_t>(from)];
    for (int to = 0; to < k; ++to) {
      const std::size_t bump = close_letters(from, to) ? 1 : 0;
      auto& out = next[static_cast<std::size_t>(to)];
      for (std::size_t m = 0; m < row.size(); ++m) {
        if (row[m] != 0) out[m + bump] += row[m];
      }
    }
  }
  return next;
}

}  // namespace detail

/// Transfer-matrix computation of the same histogram in O(n^2 k^2) big-integer
/// additions (O(n^2 k^3) for the cyclic kind, which also tracks the first letter).
inline TDist dp_distribution(int n, int k, StatKind kind) {
  detail::check_shape(n, k);
  TDist dist(n, k, kind);
  if (n == 0) {
    dist.counts[0] = 1;
    return dist;
  }
  if (kind == StatKind::linear) {
    detail::LetterHist cur(static_cast<std::size_t>(k), std::vector<Integer>(1, Integer(1)));
    for (int len = 1; len < n; ++len) cur = detail::extend(cur, k);
    for (const auto& row : cur) {
      for (std::size_t m = 0; m < row.size(); ++m) dist.counts[m] += row[m];
    }
    return dist;
  }
  for (int first = 0; first < k; ++first) {
    detail::LetterHist cur(static_cast<std::size_t>(k), std::vector<Integer>(1));
    cur[static_cast<std::size_t>(first)][0] = 1;
    for (int len = 1; len < n; ++len) cur = detail::extend(cur, k);
    for (int last = 0; last < k; ++last) {
      const std::size_t bump = close_letters(first, last) ? 1 : 0;
      const auto& row = cur[static_cast<std::size_t>(last)];
      for (std::size_t m = 0; m < row.size(); ++m) dist.counts[m + bump] += row[m];
    }
  }
  return dist;
}

enum class SpecialKind { staircase, cyclic_staircase, hertzsprung, cyclic_hertzsprung };

/// Counts staircase (s = n-1), cyclic staircase (cs = n), Hertzsprung (s = 0)
/// and cyclic Hertzsprung (cs = 0) words of length n. The empty word counts
/// once in every family.
inline Integer special_count(int n, int k, SpecialKind which) {
  switch (which) {
    case SpecialKind::staircase:
      return n == 0 ? Integer(1) : dp_distribution(n, k, StatKind::linear).at(n - 1);
    case SpecialKind::cyclic_staircase:
      return dp_distribution(n, k, StatKind::cyclic).at(n);
    case SpecialKind::hertzsprung:
      return dp_distribution(n, k, StatKind::linear).at(0);
    case SpecialKind::cyclic_hertzsprung:
      return dp_distribution(n, k, StatKind::cyclic).at(0);
  }
  throw InvalidArgument("unknown special kind");
}

/// CSV rows "n,k,kind,m,count", one per statistic value with a nonzero count.
inline void write_distribution_csv(std::ostream& out, const TDist& d, bool header = true) {
  if (header) out << "n,k,kind,m,count\n";
  for (std::size_t m = 0; m < d.counts.size(); ++m) {
    if (d.counts[m] == 0) continue;
    out << d.n << "," << d.k << "," << to_string(d.kind) << "," << m << "," << d.counts[m].get_str() << "\n";
  }
}

}  // namespace staircase
