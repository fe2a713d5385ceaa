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

#include <algorithm>
#include <functional>
#include <vector>

#include "owa/core.hpp"

namespace owa {

// 0/1 utilities: u[i][a] = 1 iff agent i approves item a.
inline UtilityMatrix approval_profile(const std::vector<std::vector<int>>& approvals,
                                      int m) {
  UtilityMatrix mat;
  mat.n = static_cast<int>(approvals.size());
  mat.m = m;
  mat.u.assign(mat.n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < mat.n; ++i) {
    for (int a : approvals[i]) {
      if (a < 0 || a >= m) throw InputError("approved item index out of range");
      mat.u[i][a] = Rational(1);
    }
  }
  validate_utilities(mat);
  return mat;
}

// Borda utilities: the item ranked k-th (1-based) gets m-k. rankings[i] lists
// agent i's items from most to least preferred.
inline UtilityMatrix borda_profile(const std::vector<std::vector<int>>& rankings) {
  if (rankings.empty()) throw InputError("need at least one ranking");
  const int m = static_cast<int>(rankings[0].size());
  UtilityMatrix mat;
  mat.n = static_cast<int>(rankings.size());
  mat.m = m;
  mat.u.assign(mat.n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < mat.n; ++i) {
    const auto& r = rankings[i];
    if (static_cast<int>(r.size()) != m) throw InputError("ranking length mismatch");
    std::vector<bool> seen(m, false);
    for (int pos = 0; pos < m; ++pos) {
      int a = r[pos];
      if (a < 0 || a >= m || seen[a]) throw InputError("ranking is not a permutation");
      seen[a] = true;
      mat.u[i][a] = Rational(m - 1 - pos);
    }
  }
  return mat;
}

// Largest beta such that every agent values at least floor(gamma*m) items at
// >= beta * u_max (u_max = global maximum entry): the minimum over agents of
// the t-th largest utility divided by u_max, t = floor(gamma*m). A vacuous
// requirement (t = 0) yields beta = 1.
//
// Floor, not ceiling: the ceiling reading breaks the Borda guarantee that a
// Borda profile is (x, 1-x)-non-finicky (already at m=6, x=1/4), and floor
// matches the x = floor(gamma*m) threshold the slots algorithm uses.
inline Rational nonfinicky_beta(const UtilityMatrix& mat, const Rational& gamma) {
  if (gamma <= Rational(0) || gamma > Rational(1))
    throw InputError("gamma must be in (0,1]");
  Rational u_max(0);
  for (const auto& row : mat.u) {
    for (const auto& v : row) u_max = std::max(u_max, v);
  }
  if (u_max.is_zero()) throw InputError("no positive utility");
  std::int64_t t = (gamma * Rational(mat.m)).floor();
  if (t <= 0) return Rational(1);
  Rational beta(1);
  std::vector<Rational> vals;
  for (const auto& row : mat.u) {
    vals = row;
    std::sort(vals.begin(), vals.end(), std::greater<Rational>());
    beta = std::min(beta, vals[t - 1] / u_max);
  }
  return beta;
}

}  // namespace owa
