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
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/exact.hpp"
#include "owa/families.hpp"
#include "owa/scoring.hpp"

namespace owa {

// rank(j, a) = number of items agent j strictly prefers to a.
// Equal-utility items share a rank, so more than x items can sit
// below threshold x; that matches the counting definition on purpose.
struct RankFunction {
  std::vector<std::vector<int>> rank;  // n rows, m columns

  static RankFunction of(const UtilityMatrix& mat) {
    RankFunction rf;
    rf.rank.assign(mat.n, std::vector<int>(mat.m, 0));
    for (int j = 0; j < mat.n; ++j) {
      for (int a = 0; a < mat.m; ++a) {
        int r = 0;
        for (int b = 0; b < mat.m; ++b) {
          if (mat.u[j][b] > mat.u[j][a]) ++r;
        }
        rf.rank[j][a] = r;
      }
    }
    return rf;
  }
};

struct SlotAssignment {
  int item;
  int slot;  // 0-based: ell - free count at the moment of assignment
};

struct SlotsIteration {
  int chosen;
  int coverage;                 // agents served by the pick (0 on fallback)
  bool fallback;                // no candidate covered anyone
  std::vector<int> free_after;  // per-agent free slots after the pick
  int free_total_after;
};

struct SlotsState {
  int x;    // rank threshold
  int ell;  // slots per agent
  std::vector<std::vector<SlotAssignment>> occupied;  // per agent
  std::vector<SlotsIteration> iterations;
};

struct SlotsResult {
  WinnerSet winner;
  SlotsState state;
};

// Free-slots greedy. Each agent starts with ell slots; every pick fills
// one slot of every agent that still has one free and ranks the item
// strictly inside the top x = floor(gamma*m).
inline SlotsResult slots_greedy(const Instance& inst, const Rational& gamma,
                                int ell) {
  const int n = inst.n();
  const int m = inst.m();
  const int K = inst.K;
  if (gamma <= Rational(0) || gamma > Rational(1)) {
    throw InputError("slots_greedy: gamma must be in (0, 1]");
  }
  if (ell < 1 || ell > K) {
    throw InputError("slots_greedy: ell must be in [1, K]");
  }
  OwaClass cls = classify(inst.owa);
  if (!cls.nonincreasing) {
    throw InputError("slots_greedy requires a nonincreasing OWA vector");
  }
  if (cls.nonzero_prefix_len > ell) {
    throw InputError("slots_greedy: OWA has nonzero weights past position " +
                     std::to_string(ell));
  }
  const int x = static_cast<int>((gamma * Rational(m)).floor());
  if (x < ell) {
    throw InputError("slots_greedy: gamma too small for ell (floor(gamma*m) = " +
                     std::to_string(x) + " < " + std::to_string(ell) + ")");
  }

  RankFunction rf = RankFunction::of(inst.utilities);
  SlotsState state;
  state.x = x;
  state.ell = ell;
  state.occupied.resize(n);
  std::vector<int> phi(n, ell);
  std::vector<bool> used(m, false);
  std::vector<int> picked;

  for (int it = 0; it < K; ++it) {
    int best_cov = -1, best_item = -1;
    for (int a = 0; a < m; ++a) {
      if (used[a]) continue;
      int cov = 0;
      for (int j = 0; j < n; ++j) {
        if (phi[j] > 0 && rf.rank[j][a] < x) ++cov;
      }
      if (cov > best_cov) {
        best_cov = cov;
        best_item = a;
      }
    }
    bool fallback = (best_cov == 0);
    if (fallback) {
      for (int a = 0; a < m; ++a) {
        if (!used[a]) {
          best_item = a;
          break;
        }
      }
    }
    used[best_item] = true;
    picked.push_back(best_item);
    if (!fallback) {
      for (int j = 0; j < n; ++j) {
        if (phi[j] > 0 && rf.rank[j][best_item] < x) {
          state.occupied[j].push_back({best_item, ell - phi[j]});
          --phi[j];
        }
      }
    }
    SlotsIteration rec;
    rec.chosen = best_item;
    rec.coverage = fallback ? 0 : best_cov;
    rec.fallback = fallback;
    rec.free_after = phi;
    rec.free_total_after = std::accumulate(phi.begin(), phi.end(), 0);
    state.iterations.push_back(std::move(rec));
  }
  return SlotsResult{make_winner_set(inst, picked), std::move(state)};
}

struct SegmentedIteration {
  int segment;             // 1-based iteration number
  std::vector<int> picks;  // items chosen in this segment
  int survivors_after;     // agents covered, carried into the next segment
};

struct SegmentedResult {
  WinnerSet winner;
  int x;
  std::vector<SegmentedIteration> iterations;
  std::vector<int> padding;  // items appended to reach size K
};

// Runs ell rounds of a 1-best coverage greedy, round i looking only at
// positions (i-1)x .. ix-1 of each surviving agent's preference order
// (utilities descending, ties by item index). Agents covered in round i
// survive into round i+1. The union is padded to K items if short.
inline SegmentedResult segmented_solve(const Instance& inst,
                                       const Rational& gamma, int ell) {
  const int n = inst.n();
  const int m = inst.m();
  const int K = inst.K;
  if (gamma <= Rational(0) || gamma > Rational(1)) {
    throw InputError("segmented_solve: gamma must be in (0, 1]");
  }
  if (ell < 1) throw InputError("segmented_solve: ell must be at least 1");
  if (K < ell) {
    throw InputError("segmented_solve: K must be at least ell");
  }
  for (std::size_t i = static_cast<std::size_t>(ell); i < inst.owa.alpha.size(); ++i) {
    if (inst.owa.alpha[i] != Rational(0)) {
      throw InputError("segmented_solve: OWA has nonzero weights past position " +
                       std::to_string(ell));
    }
  }
  const int x = static_cast<int>((gamma * Rational(m) / Rational(ell)).floor());
  if (x < 1) {
    throw InputError("segmented_solve: floor(gamma*m/ell) must be at least 1");
  }

  // position of each item in each agent's descending-utility order
  std::vector<std::vector<int>> pos(n, std::vector<int>(m));
  for (int j = 0; j < n; ++j) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const Rational& ua = inst.utilities.at(j, a);
      const Rational& ub = inst.utilities.at(j, b);
      if (ua != ub) return ub < ua;
      return a < b;
    });
    for (int p = 0; p < m; ++p) pos[j][order[p]] = p;
  }

  const int budget = K / ell;
  std::vector<bool> used(m, false);
  std::vector<int> picked;
  std::vector<bool> surviving(n, true);
  SegmentedResult result;
  result.x = x;

  for (int it = 1; it <= ell; ++it) {
    const int lo = (it - 1) * x;
    const int hi = it * x;
    std::vector<bool> covered(n, false);
    SegmentedIteration rec;
    rec.segment = it;
    for (int t = 0; t < budget; ++t) {
      int best_cov = -1, best_item = -1;
      for (int a = 0; a < m; ++a) {
        if (used[a]) continue;
        int cov = 0;
        for (int j = 0; j < n; ++j) {
          if (surviving[j] && !covered[j] && lo <= pos[j][a] && pos[j][a] < hi) {
            ++cov;
          }
        }
        if (cov > best_cov) {
          best_cov = cov;
          best_item = a;
        }
      }
      if (best_cov <= 0) break;  // nobody left to serve in this segment
      used[best_item] = true;
      picked.push_back(best_item);
      rec.picks.push_back(best_item);
      for (int j = 0; j < n; ++j) {
        if (surviving[j] && !covered[j] && lo <= pos[j][best_item] &&
            pos[j][best_item] < hi) {
          covered[j] = true;
        }
      }
    }
    surviving = covered;
    rec.survivors_after =
        static_cast<int>(std::count(covered.begin(), covered.end(), true));
    result.iterations.push_back(std::move(rec));
  }

  for (int a = 0; a < m && static_cast<int>(picked.size()) < K; ++a) {
    if (!used[a]) {
      used[a] = true;
      picked.push_back(a);
      result.padding.push_back(a);
    }
  }
  result.winner = make_winner_set(inst, picked);
  return result;
}

struct GprogPtasResult {
  WinnerSet winner;
  int ell;             // truncation length actually used
  Rational retained;   // truncated / full OWA weight
  bool used_segmented; // false: brute-force branch
};

// Geometric-progression PTAS: truncate the OWA to the shortest prefix
// retaining a 1 - eps/2 weight share, then either solve exactly (small
// K) or run the segmented greedy on the truncated instance. The answer
// is always scored under the full, untruncated weights.
inline GprogPtasResult gprog_ptas(const Instance& inst, const Rational& p,
                                  const Rational& epsilon, const Rational& gamma,
                                  std::int64_t budget = kDefaultBruteBudget) {
  OwaClass cls = classify(inst.owa);
  if (!cls.geometric_ratio.has_value()) {
    throw InputError("gprog_ptas requires a geometric-progression OWA");
  }
  if (*cls.geometric_ratio != p) {
    throw InputError("gprog_ptas: OWA ratio is " + cls.geometric_ratio->str() +
                     ", not the requested " + p.str());
  }
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
    throw InputError("gprog_ptas: epsilon must be in (0, 1)");
  }

  Truncation tr = truncate_geometric(p, epsilon, inst.K);
  GprogPtasResult result;
  result.ell = tr.ell;
  result.retained = tr.retained;

  const int K = inst.K;
  const double ell = static_cast<double>(tr.ell);
  const double tail =
      ell * std::exp(-gamma.to_double() * static_cast<double>(K) / (ell * ell));
  bool segmented_ok =
      tail < epsilon.to_double() && K >= tr.ell &&
      (gamma * Rational(inst.m()) / Rational(tr.ell)).floor() >= 1;

  if (segmented_ok) {
    Instance trunc = inst;
    trunc.owa = tr.owa;
    SegmentedResult seg = segmented_solve(trunc, gamma, tr.ell);
    result.winner = make_winner_set(inst, seg.winner.items);
    result.used_segmented = true;
  } else {
    result.winner = brute_force(inst, budget);
    result.used_segmented = false;
  }
  return result;
}

}  // namespace owa
