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

#include <stdexcept>
#include <string>

namespace staircase {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error("not divisible: " + what) {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

/// The x-constant part of a denominator vanishes, so no Taylor expansion at x=0 exists.
class PoleAtOrigin : public Error {
 public:
  explicit PoleAtOrigin(const std::string& what) : Error("pole at origin: " + what) {}
};

class Singular : public Error {
 public:
  Singular() : Error("matrix is singular") {}
};

/// A closed-form matrix formula hit a vanishing Chebyshev factor.
class SingularParameter : public Error {
 public:
  explicit SingularParameter(const std::string& what) : Error("singular parameter: " + what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

/// The identity's printed summand is not well defined without extra input.
class AmbiguousDefinition : public Error {
 public:
  explicit AmbiguousDefinition(const std::string& what) : Error("ambiguous definition: " + what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid argument: " + what) {}
};

}  // namespace staircase
