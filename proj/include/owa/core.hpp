// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "owa/rational.hpp"

namespace owa {

// Invalid input: bad file contents, violated preconditions, domain errors.
// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because it would exceed its configured budget.
// The CLI maps this to exit code 2.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// n x m matrix of nonnegative intrinsic utilities, row per agent.
struct UtilityMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rational>> u;

  const Rational& at(int agent, int item) const { return u[agent][item]; }

  friend bool operator==(const UtilityMatrix& a, const UtilityMatrix& b) {
    return a.n == b.n && a.m == b.m && a.u == b.u;
  }
};

inline void validate_utilities(const UtilityMatrix& mat) {
  if (mat.n < 1 || mat.m < 1) throw InputError("need at least one agent and one item");
  if (static_cast<int>(mat.u.size()) != mat.n) throw InputError("row count mismatch");
  for (const auto& row : mat.u) {
    if (static_cast<int>(row.size()) != mat.m) throw InputError("column count mismatch");
    for (const auto& v : row) {
      if (v < Rational(0)) throw InputError("negative utility");
    }
  }
}

// K nonnegative OWA coefficients; all-zero vectors are rejected.
struct OwaVector {
  std::vector<Rational> alpha;

  int k() const { return static_cast<int>(alpha.size()); }

  friend bool operator==(const OwaVector& a, const OwaVector& b) {
    return a.alpha == b.alpha;
  }
};

inline void validate_owa(const OwaVector& owa) {
  if (owa.alpha.empty()) throw InputError("empty OWA vector");
  bool any_positive = false;
  for (const auto& a : owa.alpha) {
    if (a < Rational(0)) throw InputError("negative OWA entry");
    if (a > Rational(0)) any_positive = true;
  }
  if (!any_positive) throw InputError("all-zero OWA vector");
}

struct Instance {
  UtilityMatrix utilities;
  OwaVector owa;
  int K = 0;

  int n() const { return utilities.n; }
  int m() const { return utilities.m; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.K == b.K && a.owa == b.owa && a.utilities == b.utilities;
  }
};

inline Instance make_instance(UtilityMatrix utilities, OwaVector owa, int K) {
  validate_utilities(utilities);
  validate_owa(owa);
  if (K < 1) throw InputError("K must be positive");
  if (K > utilities.m) throw InputError("K exceeds item count");
  if (owa.k() != K) throw InputError("OWA length " + std::to_string(owa.k()) +
                                    " does not match K=" + std::to_string(K));
  return Instance{std::move(utilities), std::move(owa), K};
}

// Size-K committee with its Definition-1 score. Item indices are 0-based
// internally and sorted ascending; I/O layers render them 1-based.
struct WinnerSet {
  std::vector<int> items;
  Rational score;

  friend bool operator==(const WinnerSet& a, const WinnerSet& b) {
    return a.items == b.items && a.score == b.score;
  }
};

struct NonFinickyParams {
  Rational beta;
  Rational gamma;
};

}  // namespace owa
