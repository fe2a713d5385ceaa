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
#include <vector>

#include "owa/core.hpp"

namespace owa {

// Structural facts about an OWA vector, all decided with exact comparisons.
struct OwaClass {
  bool nonincreasing = false;
  bool constant = false;
  // Smallest p such that every entry after position p is zero; equivalently
  // the 1-based index of the last nonzero entry.
  int nonzero_prefix_len = 0;
  // Set when the vector is c,...,c,0,...,0 with c > 0 (k leading entries).
  std::optional<int> kbest_k;
  // Set when exactly one entry is nonzero (at 1-based position k).
  std::optional<int> kmed_k;
  // Set when the vector is (lambda, 0, ..., 0, 1-lambda) with K >= 2.
  std::optional<Rational> hurwicz_lambda;
  // Set when all entries are positive with a constant ratio p > 1 between
  // consecutive entries (geometric decay).
  std::optional<Rational> geometric_ratio;
};

inline OwaClass classify(const OwaVector& owa) {
  const auto& a = owa.alpha;
  const int K = owa.k();
  OwaClass c;

  c.nonincreasing = true;
  for (int i = 0; i + 1 < K; ++i) {
    if (a[i] < a[i + 1]) {
      c.nonincreasing = false;
      break;
    }
  }

  c.constant = true;
  for (int i = 1; i < K; ++i) {
    if (a[i] != a[0]) {
      c.constant = false;
      break;
    }
  }

  for (int i = K - 1; i >= 0; --i) {
    if (!a[i].is_zero()) {
      c.nonzero_prefix_len = i + 1;
      break;
    }
  }

  int nonzero_count = 0;
  int last_nonzero = -1;
  for (int i = 0; i < K; ++i) {
    if (!a[i].is_zero()) {
      ++nonzero_count;
      last_nonzero = i;
    }
  }
  if (nonzero_count == 1) c.kmed_k = last_nonzero + 1;

  // k-best: constant positive prefix, zero tail. A scaled vector counts;
  // scaling never affects ranking or ratio results.
  {
    int p = c.nonzero_prefix_len;
    bool kbest = p >= 1 && a[0] > Rational(0);
    for (int i = 1; i < p && kbest; ++i) {
      if (a[i] != a[0]) kbest = false;
    }
    for (int i = p; i < K && kbest; ++i) {
      if (!a[i].is_zero()) kbest = false;
    }
    if (kbest) c.kbest_k = p;
  }

  if (K >= 2 && a[0] + a[K - 1] == Rational(1) && a[0] >= Rational(0) &&
      a[K - 1] >= Rational(0)) {
    bool middle_zero = true;
    for (int i = 1; i < K - 1; ++i) {
      if (!a[i].is_zero()) {
        middle_zero = false;
        break;
      }
    }
    if (middle_zero) c.hurwicz_lambda = a[0];
  }

  if (K >= 2 && a[K - 1] > Rational(0) && a[1] > Rational(0)) {
    Rational p = a[0] / a[1];
    bool geometric = p > Rational(1);
    for (int i = 1; i + 1 < K && geometric; ++i) {
      if (a[i + 1].is_zero() || a[i] / a[i + 1] != p) geometric = false;
    }
    if (geometric) c.geometric_ratio = p;
  }

  return c;
}

inline OwaVector make_kmed(int K, int k) {
  if (k < 1 || k > K) throw InputError("k-med needs 1 <= k <= K");
  OwaVector v;
  v.alpha.assign(K, Rational(0));
  v.alpha[k - 1] = Rational(1);
  return v;
}

inline OwaVector make_kbest(int K, int k) {
  if (k < 1 || k > K) throw InputError("k-best needs 1 <= k <= K");
  OwaVector v;
  v.alpha.assign(K, Rational(0));
  for (int i = 0; i < k; ++i) v.alpha[i] = Rational(1);
  return v;
}

// <a+(K-1)b, a+(K-2)b, ..., a>
inline OwaVector make_aprog(int K, const Rational& a, const Rational& b = Rational(1)) {
  if (a < Rational(0)) throw InputError("aprog needs a >= 0");
  if (b <= Rational(0)) throw InputError("aprog needs b > 0");
  OwaVector v;
  v.alpha.reserve(K);
  for (int i = 0; i < K; ++i) v.alpha.push_back(a + Rational(K - 1 - i) * b);
  return v;
}

// <p^(K-1), p^(K-2), ..., 1>
inline OwaVector make_gprog(int K, const Rational& p) {
  if (p <= Rational(1)) throw InputError("gprog needs p > 1");
  OwaVector v;
  v.alpha.reserve(K);
  for (int i = 0; i < K; ++i) v.alpha.push_back(Rational::pow(p, K - 1 - i));
  return v;
}

// <1, 1/2, ..., 1/K>
inline OwaVector make_harmonic(int K) {
  OwaVector v;
  v.alpha.reserve(K);
  for (int i = 1; i <= K; ++i) v.alpha.push_back(Rational(1, i));
  return v;
}

// <lambda, 0, ..., 0, 1-lambda>
inline OwaVector make_hurwicz(int K, const Rational& lambda) {
  if (K < 2) throw InputError("hurwicz needs K >= 2");
  if (lambda < Rational(0) || lambda > Rational(1))
    throw InputError("hurwicz needs lambda in [0,1]");
  OwaVector v;
  v.alpha.assign(K, Rational(0));
  v.alpha[0] = lambda;
  v.alpha[K - 1] = Rational(1) - lambda;
  return v;
}

// Family dispatch by name, as spelled in instance files:
//   kmed <k> | kbest <k> | aprog <a> <b> | gprog <p> | harmonic | hurwicz <lambda>
inline OwaVector make_owa(const std::string& family,
                          const std::vector<Rational>& params, int K) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError("owa-family " + family + " expects " +
                       std::to_string(count) + " parameter(s)");
    }
  };
  auto as_int = [&](const Rational& r, const char* what) {
    if (!r.is_integer()) throw InputError(std::string(what) + " must be an integer");
    return static_cast<int>(r.num());
  };
  if (family == "kmed") {
    need(1);
    return make_kmed(K, as_int(params[0], "kmed k"));
  }
  if (family == "kbest") {
    need(1);
    return make_kbest(K, as_int(params[0], "kbest k"));
  }
  if (family == "aprog") {
    need(2);
    return make_aprog(K, params[0], params[1]);
  }
  if (family == "gprog") {
    need(1);
    return make_gprog(K, params[0]);
  }
  if (family == "harmonic") {
    need(0);
    return make_harmonic(K);
  }
  if (family == "hurwicz") {
    need(1);
    return make_hurwicz(K, params[0]);
  }
  throw InputError("unknown OWA family '" + family + "'");
}

struct Truncation {
  OwaVector owa;        // gprog[p] with entries beyond ell zeroed
  int ell = 0;          // retained prefix length (capped at K)
  Rational retained;    // kept weight / total weight
};

// Truncates gprog[p] of length K to its top ell = ceil(log_p(2/epsilon))
// entries. ell is found by exact rational comparison (smallest ell with
// p^ell >= 2/epsilon), so no floating-point log is involved.
inline Truncation truncate_geometric(const Rational& p, const Rational& epsilon, int K) {
  if (p <= Rational(1)) throw InputError("gprog needs p > 1");
  if (epsilon <= Rational(0) || epsilon >= Rational(1))
    throw InputError("epsilon must be in (0,1)");
  Rational target = Rational(2) / epsilon;
  int ell = 1;
  Rational power = p;
  while (power < target && ell < K) {
    power *= p;
    ++ell;
  }
  Truncation t;
  t.owa = make_gprog(K, p);
  t.ell = ell;
  Rational total(0), kept(0);
  for (int i = 0; i < K; ++i) {
    total += t.owa.alpha[i];
    if (i < ell) kept += t.owa.alpha[i];
  }
  for (int i = ell; i < K; ++i) t.owa.alpha[i] = Rational(0);
  t.retained = kept / total;
  return t;
}

}  // namespace owa
