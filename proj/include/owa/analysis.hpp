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

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/families.hpp"

namespace owa {

// Principal-branch Lambert W for x >= 0 via Halley iteration.
// Initial guess: x/(1+x) for x <= e (exact at 0, decent through e),
// log(x) - log(log(x)) beyond (asymptotic expansion's first two terms).
inline double lambert_w(double x) {
  if (x < 0) throw InputError("lambert_w is only defined for x >= 0 here");
  if (x == 0) return 0.0;
  const double e = 2.718281828459045;
  double w = (x <= e) ? x / (1.0 + x) : std::log(x) - std::log(std::log(x));
  for (int it = 0; it < 100; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    if (std::fabs(f) <= 1e-13 * std::max(1.0, std::fabs(x))) break;
    w = w - f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
  }
  return w;
}

enum class BoundFamily {
  slots,           // beta (1 - exp(-gamma K / ell))
  segmented,       // beta (1 - ell exp(-gamma K / ell^2))
  borda_lambert,   // 1 - 2 W(K/ell) / (K/ell)
  kbest_proxy,     // sum(alpha) / (K alpha_1)
  greedy_general,  // 1 - 1/e
};

inline BoundFamily bound_family_from_name(const std::string& name) {
  if (name == "slots") return BoundFamily::slots;
  if (name == "segmented") return BoundFamily::segmented;
  if (name == "borda-lambert") return BoundFamily::borda_lambert;
  if (name == "kbest-proxy") return BoundFamily::kbest_proxy;
  if (name == "greedy-general") return BoundFamily::greedy_general;
  throw InputError("unknown bound family '" + name + "'");
}

struct BoundQuery {
  BoundFamily which = BoundFamily::greedy_general;
  double beta = 1.0;
  double gamma = 0.0;
  int K = 1;
  int ell = 1;
  std::optional<OwaVector> alpha;  // kbest_proxy only
};

struct BoundResult {
  double value = 0.0;   // clamped to [0, 1]
  bool vacuous = false; // raw formula value was below zero
};

inline BoundResult bound_ex(const BoundQuery& q) {
  if (q.ell < 1) throw InputError("bound: ell must be at least 1");
  double raw = 0.0;
  switch (q.which) {
    case BoundFamily::slots: {
      if (q.K < q.ell) throw InputError("bound: K must be at least ell");
      double kl = static_cast<double>(q.K) / q.ell;
      raw = q.beta * (1.0 - std::exp(-q.gamma * kl));
      break;
    }
    case BoundFamily::segmented: {
      if (q.K < q.ell) throw InputError("bound: K must be at least ell");
      double kl = static_cast<double>(q.K) / q.ell;
      raw = q.beta * (1.0 - q.ell * std::exp(-q.gamma * kl / q.ell));
      break;
    }
    case BoundFamily::borda_lambert: {
      double kl = static_cast<double>(q.K) / q.ell;
      raw = 1.0 - 2.0 * lambert_w(kl) / kl;
      break;
    }
    case BoundFamily::kbest_proxy: {
      if (!q.alpha.has_value() || q.alpha->alpha.empty()) {
        throw InputError("kbest-proxy bound needs the OWA vector");
      }
      Rational total(0);
      for (const auto& a : q.alpha->alpha) total = total + a;
      const Rational& a1 = q.alpha->alpha.front();
      if (!(a1 > Rational(0))) throw InputError("kbest-proxy bound needs alpha_1 > 0");
      raw = (total / (Rational(q.alpha->k()) * a1)).to_double();
      break;
    }
    case BoundFamily::greedy_general:
      raw = 1.0 - std::exp(-1.0);
      break;
  }
  BoundResult r;
  r.vacuous = raw < 0.0;
  r.value = raw < 0.0 ? 0.0 : (raw > 1.0 ? 1.0 : raw);
  return r;
}

inline double bound(const BoundQuery& q) { return bound_ex(q).value; }

// gamma minimizing the Borda-path bound loss: W(K/ell) * ell / K.
inline double suggested_gamma(int K, int ell) {
  if (ell < 1 || K < ell) throw InputError("suggested_gamma needs K >= ell >= 1");
  double kl = static_cast<double>(K) / ell;
  return lambert_w(kl) / kl;
}

struct GridSpec {
  std::vector<double> betas;
  std::vector<double> gammas;
  int K = 1;
  int ell = 1;
  // When set, rows solve beta * denom(gamma) = iso_target for beta
  // instead of evaluating the forward formula; beta is emitted raw
  // (possibly > 1) so iso curves stay strictly monotone.
  std::optional<double> iso_target;
};

// "lo:hi:steps" inclusive; steps=1 collapses to lo.
inline std::vector<double> parse_linspace(const std::string& spec) {
  double lo, hi;
  int steps;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &steps) != 3 || steps < 0) {
    throw InputError("bad grid range '" + spec + "', expected lo:hi:steps");
  }
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  }
  return out;
}

namespace detail {
inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}
}  // namespace detail

// CSV stream of (beta, gamma, K/ell, bound) rows; beta-major order.
// Iso mode emits one row per gamma with the solved beta.
inline void bound_curves(BoundFamily family, const GridSpec& grid,
                         std::ostream& out) {
  out << "beta,gamma,kl,bound\n";
  const double kl = static_cast<double>(grid.K) / grid.ell;
  if (grid.iso_target.has_value()) {
    if (family != BoundFamily::slots && family != BoundFamily::segmented) {
      throw InputError("iso mode applies to the slots and segmented families");
    }
    for (double g : grid.gammas) {
      double denom = family == BoundFamily::slots
                         ? 1.0 - std::exp(-g * kl)
                         : 1.0 - grid.ell * std::exp(-g * kl / grid.ell);
      if (denom <= 0.0) continue;  // no beta attains the target here
      double beta = *grid.iso_target / denom;
      out << detail::csv_number(beta) << ',' << detail::csv_number(g) << ','
          << detail::csv_number(kl) << ','
          << detail::csv_number(*grid.iso_target) << "\n";
    }
    return;
  }
  for (double b : grid.betas) {
    for (double g : grid.gammas) {
      BoundQuery q;
      q.which = family;
      q.beta = b;
      q.gamma = g;
      q.K = grid.K;
      q.ell = grid.ell;
      out << detail::csv_number(b) << ',' << detail::csv_number(g) << ','
          << detail::csv_number(kl) << ','
          << detail::csv_number(bound(q)) << "\n";
    }
  }
}

}  // namespace owa
