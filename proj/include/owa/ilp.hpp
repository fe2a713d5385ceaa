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

#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/families.hpp"
#include "owa/scoring.hpp"

namespace owa {

namespace detail {

// LP files take plain decimals, not fractions. Exact expansion when the
// denominator is 2^a 5^b, shortest round-trip double otherwise.
inline std::string lp_number(const Rational& r) {
  if (r.is_integer()) return r.str();
  std::int64_t den = r.den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den == 1) {
    // scale to 10^digits
    int digits = twos > fives ? twos : fives;
    Rational scaled = r;
    for (int i = 0; i < digits; ++i) scaled = scaled * Rational(10);
    std::string body = scaled.str();
    bool neg = body[0] == '-';
    if (neg) body.erase(0, 1);
    while (static_cast<int>(body.size()) <= digits) body.insert(0, "0");
    body.insert(body.size() - digits, ".");
    return (neg ? "-" : "") + body;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", r.to_double());
  return buf;
}

inline std::string item_var(int j) { return "x_" + std::to_string(j + 1); }

inline std::string slot_var(int i, int j, int k) {
  return "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
         std::to_string(k + 1);
}

}  // namespace detail

// Integer program over x_j (item j wins) and x_{i,j,k} (item j fills
// slot k of agent i):
//   maximize  sum alpha_k u_{i,j} x_{i,j,k}
//   (a) sum_j x_j = K
//   (b) x_{i,j,k} <= x_j
//   (c) sum_j x_{i,j,k} = 1            for each agent i and slot k
//   (d) sum_k x_{i,j,k} <= 1           for each agent i and item j
//   (e) slot utilities nonincreasing per agent, emitted only when the
//       OWA itself is not nonincreasing (otherwise the optimum sorts
//       itself)
// All variables binary. Output is byte-deterministic.
inline void emit_lp(const Instance& inst, std::ostream& out) {
  const int n = inst.n();
  const int m = inst.m();
  const int K = inst.K;

  out << "Maximize\n obj:";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < K; ++k) {
        Rational c = inst.owa.alpha[k] * inst.utilities.at(i, j);
        if (c == Rational(0)) continue;
        out << (first ? " " : " + ") << detail::lp_number(c) << ' '
            << detail::slot_var(i, j, k);
        first = false;
      }
    }
  }
  if (first) out << " 0 " << detail::item_var(0);
  out << "\n";

  out << "Subject To\n";
  out << " a:";
  for (int j = 0; j < m; ++j) out << (j ? " + " : " ") << detail::item_var(j);
  out << " = " << K << "\n";

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < K; ++k) {
        out << " b_" << i + 1 << '_' << j + 1 << '_' << k + 1 << ": "
            << detail::slot_var(i, j, k) << " - " << detail::item_var(j)
            << " <= 0\n";
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      out << " c_" << i + 1 << '_' << k + 1 << ":";
      for (int j = 0; j < m; ++j) {
        out << (j ? " + " : " ") << detail::slot_var(i, j, k);
      }
      out << " = 1\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      out << " d_" << i + 1 << '_' << j + 1 << ":";
      for (int k = 0; k < K; ++k) {
        out << (k ? " + " : " ") << detail::slot_var(i, j, k);
      }
      out << " <= 1\n";
    }
  }
  if (!classify(inst.owa).nonincreasing) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k + 1 < K; ++k) {
        out << " e_" << i + 1 << '_' << k + 1 << ":";
        bool any = false;
        for (int j = 0; j < m; ++j) {
          const Rational& u = inst.utilities.at(i, j);
          if (u == Rational(0)) continue;
          out << (any ? " + " : " ") << detail::lp_number(u) << ' '
              << detail::slot_var(i, j, k);
          any = true;
        }
        for (int j = 0; j < m; ++j) {
          const Rational& u = inst.utilities.at(i, j);
          if (u == Rational(0)) continue;
          out << " - " << detail::lp_number(u) << ' '
              << detail::slot_var(i, j, k + 1);
          any = true;
        }
        if (!any) out << " 0 " << detail::slot_var(i, 0, k);
        out << " >= 0\n";
      }
    }
  }

  out << "Binary\n";
  for (int j = 0; j < m; ++j) out << ' ' << detail::item_var(j) << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < K; ++k) {
        out << ' ' << detail::slot_var(i, j, k) << "\n";
      }
    }
  }
  out << "End\n";
}

inline std::string emit_lp(const Instance& inst) {
  std::ostringstream out;
  emit_lp(inst, out);
  return out.str();
}

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> violations;
  Rational objective;
  std::vector<int> winner_items;  // 0-based, ascending
  Rational winner_score;
};

// Checks an external solver's 0/1 assignment against every constraint
// and recomputes the objective. Variables absent from the map count as
// 0 (solvers routinely omit zeros). For nonincreasing OWAs a feasible
// objective may fall below the committee score (bad slot order) but can
// never exceed it; with constraint (e) active the two must be equal.
inline VerifyReport verify_solution(const Instance& inst,
                                    const std::map<std::string, Rational>& assignment) {
  const int n = inst.n();
  const int m = inst.m();
  const int K = inst.K;
  VerifyReport rep;

  auto value = [&](const std::string& name) -> int {
    auto it = assignment.find(name);
    if (it == assignment.end()) return 0;
    if (it->second == Rational(0)) return 0;
    if (it->second == Rational(1)) return 1;
    rep.violations.push_back("binary: variable " + name + " has value " +
                             it->second.str());
    return it->second > Rational(0) ? 1 : 0;
  };

  std::vector<int> xj(m);
  for (int j = 0; j < m; ++j) xj[j] = value(detail::item_var(j));
  std::vector<std::vector<std::vector<int>>> xijk(
      n, std::vector<std::vector<int>>(m, std::vector<int>(K)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < K; ++k) {
        xijk[i][j][k] = value(detail::slot_var(i, j, k));
      }
    }
  }

  int selected = 0;
  for (int j = 0; j < m; ++j) selected += xj[j];
  if (selected != K) {
    rep.violations.push_back("(a): " + std::to_string(selected) +
                             " items selected, K = " + std::to_string(K));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < K; ++k) {
        if (xijk[i][j][k] > xj[j]) {
          rep.violations.push_back("(b) i=" + std::to_string(i + 1) +
                                   " j=" + std::to_string(j + 1) +
                                   " k=" + std::to_string(k + 1) + ": " +
                                   detail::slot_var(i, j, k) +
                                   " = 1 but " + detail::item_var(j) + " = 0");
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      int filled = 0;
      for (int j = 0; j < m; ++j) filled += xijk[i][j][k];
      if (filled != 1) {
        rep.violations.push_back("(c) i=" + std::to_string(i + 1) +
                                 " k=" + std::to_string(k + 1) + ": slot holds " +
                                 std::to_string(filled) + " items, wants 1");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      int slots = 0;
      for (int k = 0; k < K; ++k) slots += xijk[i][j][k];
      if (slots > 1) {
        rep.violations.push_back("(d) i=" + std::to_string(i + 1) +
                                 " j=" + std::to_string(j + 1) + ": item in " +
                                 std::to_string(slots) + " slots");
      }
    }
  }
  const bool nonincreasing = classify(inst.owa).nonincreasing;
  if (!nonincreasing) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k + 1 < K; ++k) {
        Rational lhs(0), rhs(0);
        for (int j = 0; j < m; ++j) {
          if (xijk[i][j][k]) lhs = lhs + inst.utilities.at(i, j);
          if (xijk[i][j][k + 1]) rhs = rhs + inst.utilities.at(i, j);
        }
        if (lhs < rhs) {
          rep.violations.push_back("(e) i=" + std::to_string(i + 1) +
                                   " k=" + std::to_string(k + 1) +
                                   ": slot utilities increase (" + lhs.str() +
                                   " < " + rhs.str() + ")");
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < K; ++k) {
        if (xijk[i][j][k]) {
          rep.objective =
              rep.objective + inst.owa.alpha[k] * inst.utilities.at(i, j);
        }
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    if (xj[j]) rep.winner_items.push_back(j);
  }
  if (static_cast<int>(rep.winner_items.size()) == K) {
    rep.winner_score = committee_score(inst, rep.winner_items).total;
    if (nonincreasing && rep.objective > rep.winner_score) {
      rep.violations.push_back("objective " + rep.objective.str() +
                               " exceeds committee score " +
                               rep.winner_score.str());
    }
    if (!nonincreasing && rep.objective != rep.winner_score) {
      rep.violations.push_back("objective " + rep.objective.str() +
                               " differs from committee score " +
                               rep.winner_score.str());
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

// The canonical assignment for a winner set: agent i's slot k takes the
// item with the k-th largest utility among W (ties by item index). Its
// objective equals committee_score for any OWA.
inline std::map<std::string, Rational> canonical_assignment(
    const Instance& inst, const std::vector<int>& items) {
  detail::check_items(inst, items);
  if (static_cast<int>(items.size()) != inst.K) {
    throw InputError("canonical_assignment needs exactly K items");
  }
  std::map<std::string, Rational> asg;
  for (int j : items) asg[detail::item_var(j)] = Rational(1);
  for (int i = 0; i < inst.n(); ++i) {
    std::vector<int> order(items);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const Rational& ua = inst.utilities.at(i, a);
      const Rational& ub = inst.utilities.at(i, b);
      if (ua != ub) return ub < ua;
      return a < b;
    });
    for (int k = 0; k < inst.K; ++k) {
      asg[detail::slot_var(i, order[k], k)] = Rational(1);
    }
  }
  return asg;
}

}  // namespace owa
