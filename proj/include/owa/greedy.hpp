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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "owa/core.hpp"
#include "owa/exact.hpp"
#include "owa/families.hpp"
#include "owa/scoring.hpp"
#include "owa/slots.hpp"

namespace owa {

struct GreedyIteration {
  int chosen;
  std::vector<std::pair<int, Rational>> gains;  // (candidate, gain), index order
  Rational running_score;                       // prefix score after the pick
};

struct GreedyTrace {
  std::vector<GreedyIteration> iterations;
  bool guarantee_void = false;  // OWA was not nonincreasing
};

struct GreedyResult {
  WinnerSet winner;
  GreedyTrace trace;
};

// Plain marginal-gain greedy under the prefix OWA. Works for any OWA;
// the (1 - 1/e) guarantee only holds for nonincreasing ones, which the
// trace flags rather than refusing service.
inline GreedyResult greedy_solve(const Instance& inst) {
  GreedyResult result;
  result.trace.guarantee_void = !classify(inst.owa).nonincreasing;

  std::vector<int> current;
  std::vector<bool> used(inst.m(), false);
  Rational running(0);
  for (int step = 0; step < inst.K; ++step) {
    GreedyIteration rec;
    int best_item = -1;
    Rational best_gain(0);
    for (int a = 0; a < inst.m(); ++a) {
      if (used[a]) continue;
      Rational g = marginal_gain(inst, current, a);
      rec.gains.emplace_back(a, g);
      if (best_item == -1 || g > best_gain) {
        best_item = a;
        best_gain = g;
      }
    }
    used[best_item] = true;
    current.push_back(best_item);
    running = running + best_gain;
    rec.chosen = best_item;
    rec.running_score = running;
    result.trace.iterations.push_back(std::move(rec));
  }
  result.winner = make_winner_set(inst, current);
  return result;
}

enum class InnerSolver { greedy, brute, slots };

inline InnerSolver inner_solver_from_name(const std::string& name) {
  if (name == "greedy") return InnerSolver::greedy;
  if (name == "brute") return InnerSolver::brute;
  if (name == "slots") return InnerSolver::slots;
  throw InputError("unknown inner solver '" + name +
                   "' (expected greedy, brute or slots)");
}

// Hurwicz reduction: solve the companion instance whose OWA keeps only
// the top weight (1-best), then score the winner under the true
// hurwicz[lambda] vector. gamma is only consulted by the slots inner
// solver (with ell = 1).
inline WinnerSet hurwicz_solve(const Instance& inst,
                               InnerSolver inner = InnerSolver::greedy,
                               std::optional<Rational> gamma = std::nullopt,
                               std::int64_t budget = kDefaultBruteBudget) {
  OwaClass cls = classify(inst.owa);
  if (!cls.hurwicz_lambda.has_value()) {
    throw InputError("hurwicz_solve requires an OWA of shape "
                     "(lambda, 0, ..., 0, 1-lambda)");
  }
  Instance companion = inst;
  companion.owa = make_kbest(inst.K, 1);

  std::vector<int> items;
  switch (inner) {
    case InnerSolver::greedy:
      items = greedy_solve(companion).winner.items;
      break;
    case InnerSolver::brute:
      items = brute_force(companion, budget).items;
      break;
    case InnerSolver::slots: {
      if (!gamma.has_value()) {
        throw InputError("hurwicz_solve with inner=slots needs gamma");
      }
      items = slots_greedy(companion, *gamma, 1).winner.items;
      break;
    }
  }
  return make_winner_set(inst, items);
}

struct ProxyResult {
  WinnerSet winner;
  Rational guaranteed_ratio;  // sum(alpha) / (K * alpha_1)
};

// Solves the constant-OWA companion exactly and reports how much of the
// true objective that is guaranteed to capture.
inline ProxyResult kbest_proxy_solve(const Instance& inst) {
  OwaClass cls = classify(inst.owa);
  if (!cls.nonincreasing) {
    throw InputError("kbest_proxy_solve requires a nonincreasing OWA vector");
  }
  const Rational& a1 = inst.owa.alpha.front();
  if (!(a1 > Rational(0))) {
    throw InputError("kbest_proxy_solve requires alpha_1 > 0");
  }
  Rational total(0);
  for (const auto& a : inst.owa.alpha) total = total + a;

  Instance companion = inst;
  companion.owa = make_kbest(inst.K, inst.K);
  std::vector<int> items = kbest_solve(companion).items;

  ProxyResult result;
  result.winner = make_winner_set(inst, items);
  result.guaranteed_ratio = total / (Rational(inst.K) * a1);
  return result;
}

struct PtasResult {
  WinnerSet winner;
  bool used_kbest;  // false: brute-force branch (exact)
};

// (K-f)-best OWAs: when the kept prefix is within eps of K, the
// constant-OWA optimum is already a (1 - eps)-approximation; otherwise
// K is small enough to enumerate.
inline PtasResult ptas_solve(const Instance& inst, const Rational& epsilon,
                             std::int64_t budget = kDefaultBruteBudget) {
  OwaClass cls = classify(inst.owa);
  if (!cls.kbest_k.has_value()) {
    throw InputError("ptas_solve requires a k-best OWA vector");
  }
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
    throw InputError("ptas_solve: epsilon must be in (0, 1)");
  }
  const Rational ratio = Rational(*cls.kbest_k) / Rational(inst.K);
  PtasResult result;
  if (ratio >= Rational(1) - epsilon) {
    Instance companion = inst;
    companion.owa = make_kbest(inst.K, inst.K);
    result.winner = make_winner_set(inst, kbest_solve(companion).items);
    result.used_kbest = true;
  } else {
    result.winner = brute_force(inst, budget);
    result.used_kbest = false;
  }
  return result;
}

}  // namespace owa
