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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/families.hpp"
#include "owa/scoring.hpp"

namespace owa {

inline constexpr std::int64_t kDefaultBruteBudget = 2'000'000;

namespace detail {

// C(m, k), saturating at cap+1 so callers can compare against cap
// without overflow.
inline std::int64_t binomial_capped(int m, int k, std::int64_t cap) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (m - k + i) / i;  // exact: product of i consecutive ints divisible by i!
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace detail

// Exhaustive search over all size-K subsets in lexicographic order.
// Keeping only strictly better scores makes the lexicographically
// smallest maximizer win ties for free.
inline WinnerSet brute_force(const Instance& inst,
                             std::int64_t budget = kDefaultBruteBudget) {
  const int m = inst.m();
  const int K = inst.K;
  // Count against a cap no smaller than the default budget so the error
  // can report the true C(m,K) for modest overruns instead of saturating
  // at budget+1.
  const std::int64_t report_cap = std::max(budget, kDefaultBruteBudget);
  std::int64_t count = detail::binomial_capped(m, K, report_cap);
  if (count > budget) {
    throw BudgetError("brute_force: C(" + std::to_string(m) + "," +
                      std::to_string(K) + ") = " +
                      (count == report_cap + 1 ? std::string("more than ") +
                                                     std::to_string(report_cap)
                                               : std::to_string(count)) +
                      " subsets exceeds budget " + std::to_string(budget));
  }

  std::vector<int> comb(K);
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<int> best;
  Rational best_score(0);
  bool have_best = false;
  while (true) {
    Rational s = committee_score(inst, comb).total;
    if (!have_best || s > best_score) {
      best = comb;
      best_score = s;
      have_best = true;
    }
    // advance to next combination, lex order
    int i = K - 1;
    while (i >= 0 && comb[i] == m - K + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < K; ++j) comb[j] = comb[j - 1] + 1;
  }
  return WinnerSet{best, best_score};
}

// Constant OWA only: the K items with the largest total utility across
// agents win; everything else is a scaling by the common weight.
inline WinnerSet kbest_solve(const Instance& inst) {
  OwaClass cls = classify(inst.owa);
  if (!cls.constant) {
    throw InputError(
        "kbest_solve requires a constant OWA vector; "
        "use brute_force or greedy_solve for general OWAs");
  }
  const int m = inst.m();
  std::vector<Rational> colsum(m, Rational(0));
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = 0; j < m; ++j) colsum[j] = colsum[j] + inst.utilities.at(i, j);
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (colsum[a] != colsum[b]) return colsum[b] < colsum[a];
    return a < b;
  });
  std::vector<int> items(order.begin(), order.begin() + inst.K);
  return make_winner_set(inst, items);
}

}  // namespace owa
