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
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "owa/core.hpp"

namespace owa {

struct ScoreBreakdown {
  Rational total;
  std::vector<Rational> per_agent;
  // Nonincreasing rearrangement of each agent's utilities restricted to W.
  std::vector<std::vector<Rational>> per_agent_sorted_utilities;
};

namespace detail {

inline void check_items(const Instance& inst, const std::vector<int>& items) {
  std::vector<bool> seen(inst.m(), false);
  for (int a : items) {
    if (a < 0 || a >= inst.m()) throw InputError("item index out of range");
    if (seen[a]) throw InputError("duplicate item in committee");
    seen[a] = true;
  }
}

// Score of `items` under explicit weights, weights.size() <= items.size():
// each agent's utilities are sorted nonincreasing and dotted with the weights.
inline Rational weighted_total(const Instance& inst, const std::vector<int>& items,
                               const std::vector<Rational>& weights) {
  Rational total(0);
  std::vector<Rational> vals;
  vals.reserve(items.size());
  for (int i = 0; i < inst.n(); ++i) {
    vals.clear();
    for (int a : items) vals.push_back(inst.utilities.at(i, a));
    std::sort(vals.begin(), vals.end(), std::greater<Rational>());
    for (std::size_t k = 0; k < weights.size(); ++k) total += weights[k] * vals[k];
  }
  return total;
}

}  // namespace detail

// Definition-1 evaluation. The effective OWA (owa_override when given, the
// instance's otherwise) must have exactly |W| entries; the greedy passes
// prefix vectors here.
inline ScoreBreakdown committee_score(const Instance& inst, const std::vector<int>& items,
                                      const std::optional<OwaVector>& owa_override = {}) {
  const OwaVector& w = owa_override ? *owa_override : inst.owa;
  detail::check_items(inst, items);
  if (static_cast<int>(items.size()) != w.k()) {
    throw InputError("committee size " + std::to_string(items.size()) +
                     " does not match OWA length " + std::to_string(w.k()));
  }
  ScoreBreakdown out;
  out.total = Rational(0);
  out.per_agent.reserve(inst.n());
  out.per_agent_sorted_utilities.reserve(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    std::vector<Rational> vals;
    vals.reserve(items.size());
    for (int a : items) vals.push_back(inst.utilities.at(i, a));
    std::sort(vals.begin(), vals.end(), std::greater<Rational>());
    Rational s(0);
    for (std::size_t k = 0; k < vals.size(); ++k) s += w.alpha[k] * vals[k];
    out.per_agent.push_back(s);
    out.total += s;
    out.per_agent_sorted_utilities.push_back(std::move(vals));
  }
  return out;
}

// Prefix-OWA convention for partial committees: score any set of distinct
// items with the first min(|W|, K) entries of the instance OWA.
inline Rational prefix_score(const Instance& inst, const std::vector<int>& items) {
  detail::check_items(inst, items);
  std::size_t len = std::min(items.size(), static_cast<std::size_t>(inst.K));
  std::vector<Rational> weights(inst.owa.alpha.begin(), inst.owa.alpha.begin() + len);
  return detail::weighted_total(inst, items, weights);
}

inline WinnerSet make_winner_set(const Instance& inst, std::vector<int> items) {
  if (static_cast<int>(items.size()) != inst.K)
    throw InputError("winner set must have exactly K items");
  std::sort(items.begin(), items.end());
  WinnerSet w;
  w.score = committee_score(inst, items).total;
  w.items = std::move(items);
  return w;
}

// gain[a] = u^{alpha_l}(W + a) - u^{alpha_{l-1}}(W), l = |W| + 1.
inline Rational marginal_gain(const Instance& inst, const std::vector<int>& current,
                              int candidate) {
  if (static_cast<int>(current.size()) >= inst.K)
    throw InputError("committee already has K items");
  for (int a : current) {
    if (a == candidate) throw InputError("candidate already in committee");
  }
  std::vector<int> next = current;
  next.push_back(candidate);
  return prefix_score(inst, next) - prefix_score(inst, current);
}

enum class CheckMode { exhaustive, sampled };

struct Witness {
  std::vector<int> w;       // smaller set W
  std::vector<int> w_prime; // superset W'
  int item = -1;            // added item a, not in W'
  Rational lhs;             // f(W+a) - f(W)
  Rational rhs;             // f(W'+a) - f(W')
};

struct SubmodularReport {
  bool ok = true;
  std::optional<Witness> witness;
  std::uint64_t triples_tested = 0;
};

// Submodularity check for the set function f(S) = prefix_score(S), probing
// committees of size >= K (the regime where the whole OWA applies).
// Exhaustive mode enumerates (W', W, a) in lexicographic order of the sorted
// index sequences, with a ascending, and reports the first violation.
inline SubmodularReport check_submodular(const Instance& inst,
                                         CheckMode mode = CheckMode::exhaustive,
                                         int sample_count = 10000,
                                         std::uint64_t seed = 0,
                                         std::uint64_t budget = 5'000'000) {
  const int m = inst.m();
  SubmodularReport report;
  auto f = [&](const std::vector<int>& s) { return prefix_score(inst, s); };

  auto test_triple = [&](const std::vector<int>& w, const std::vector<int>& wp,
                         int a) -> bool {
    std::vector<int> wa = w;
    wa.push_back(a);
    std::vector<int> wpa = wp;
    wpa.push_back(a);
    Rational lhs = f(wa) - f(w);
    Rational rhs = f(wpa) - f(wp);
    ++report.triples_tested;
    if (lhs < rhs) {
      report.ok = false;
      report.witness = Witness{w, wp, a, lhs, rhs};
      return true;
    }
    return false;
  };

  if (mode == CheckMode::exhaustive) {
    // Subsets in lexicographic order of their sorted index sequences.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
      if (!cur.empty()) subsets.push_back(cur);
      for (int i = start; i < m; ++i) {
        cur.push_back(i);
        gen(i + 1);
        cur.pop_back();
      }
    };
    gen(0);
    for (const auto& wp : subsets) {
      if (static_cast<int>(wp.size()) < inst.K) continue;
      for (const auto& w : subsets) {
        if (static_cast<int>(w.size()) < inst.K || w.size() >= wp.size()) continue;
        if (!std::includes(wp.begin(), wp.end(), w.begin(), w.end())) continue;
        for (int a = 0; a < m; ++a) {
          if (std::binary_search(wp.begin(), wp.end(), a)) continue;
          if (report.triples_tested >= budget)
            throw BudgetError("submodularity check budget exceeded after " +
                              std::to_string(report.triples_tested) + " triples");
          if (test_triple(w, wp, a)) return report;
        }
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  auto bounded = [&](std::uint64_t n) {
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= lim);
    return r % n;
  };
  for (int s = 0; s < sample_count; ++s) {
    std::vector<int> w, wp, out;
    for (int i = 0; i < m; ++i) {
      switch (bounded(3)) {
        case 0:
          w.push_back(i);
          wp.push_back(i);
          break;
        case 1:
          wp.push_back(i);
          break;
        default:
          out.push_back(i);
          break;
      }
    }
    if (static_cast<int>(w.size()) < inst.K || out.empty() || w.size() == wp.size())
      continue;
    int a = out[bounded(out.size())];
    if (test_triple(w, wp, a)) return report;
  }
  return report;
}

}  // namespace owa
