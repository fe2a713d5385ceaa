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

#include <cstdint>
#include <random>
#include <vector>

#include "owa/core.hpp"
#include "owa/families.hpp"
#include "owa/profiles.hpp"

namespace owa {

// mt19937_64 plus hand-rolled rejection sampling. The engine's output
// sequence is pinned by the standard, and avoiding the distribution
// classes (which vary across standard libraries) keeps seeded runs
// byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, bound), bias-free
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

 private:
  std::mt19937_64 eng_;
};

inline UtilityMatrix gen_uniform_utilities(int n, int m, std::int64_t max_util,
                                           Rng& rng) {
  if (n < 1 || m < 1) throw InputError("need n >= 1 and m >= 1");
  if (max_util < 1) throw InputError("max utility must be at least 1");
  UtilityMatrix mat;
  mat.n = n;
  mat.m = m;
  mat.u.assign(n, std::vector<Rational>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      mat.u[i][j] = Rational(static_cast<std::int64_t>(
          rng.below(static_cast<std::uint64_t>(max_util) + 1)));
    }
  }
  validate_utilities(mat);
  return mat;
}

// Bernoulli(rate) approvals, rate given exactly as a fraction.
inline UtilityMatrix gen_approval_utilities(int n, int m, const Rational& rate,
                                            Rng& rng) {
  if (n < 1 || m < 1) throw InputError("need n >= 1 and m >= 1");
  if (rate < Rational(0) || rate > Rational(1)) {
    throw InputError("approval rate must be in [0, 1]");
  }
  std::vector<std::vector<int>> approvals(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (Rational(static_cast<std::int64_t>(
              rng.below(static_cast<std::uint64_t>(rate.den())))) <
          Rational(rate.num())) {
        approvals[i].push_back(j);
      }
    }
  }
  return approval_profile(approvals, m);
}

// Borda scores from one uniform random permutation per agent
// (Fisher-Yates on top of Rng::below).
inline UtilityMatrix gen_borda_utilities(int n, int m, Rng& rng) {
  if (n < 1 || m < 1) throw InputError("need n >= 1 and m >= 1");
  std::vector<std::vector<int>> rankings(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> perm(m);
    for (int j = 0; j < m; ++j) perm[j] = j;
    for (int j = m - 1; j > 0; --j) {
      int k = rng.below_int(j + 1);
      std::swap(perm[j], perm[k]);
    }
    rankings[i] = std::move(perm);
  }
  return borda_profile(rankings);
}

// Random nonincreasing OWA with integer weights in [0, max_weight],
// never all-zero. Handy for property suites.
inline OwaVector gen_nonincreasing_owa(int K, std::int64_t max_weight, Rng& rng) {
  if (K < 1) throw InputError("K must be at least 1");
  if (max_weight < 1) throw InputError("max weight must be at least 1");
  OwaVector v;
  v.alpha.resize(K);
  for (int k = 0; k < K; ++k) {
    v.alpha[k] = Rational(static_cast<std::int64_t>(
        rng.below(static_cast<std::uint64_t>(max_weight) + 1)));
  }
  std::sort(v.alpha.begin(), v.alpha.end(),
            [](const Rational& a, const Rational& b) { return b < a; });
  if (v.alpha[0] == Rational(0)) v.alpha[0] = Rational(1);
  validate_owa(v);
  return v;
}

}  // namespace owa
