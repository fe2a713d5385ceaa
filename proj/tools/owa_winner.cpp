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

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "owa/owa.hpp"

namespace {

using nlohmann::json;

owa::Instance load_instance(const std::string& path) {
  if (path == "-") return owa::parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw owa::InputError("cannot open '" + path + "'");
  return owa::parse_instance(in);
}

// stdout when path is "-"
class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw owa::InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string item_name(int j) { return "a" + std::to_string(j + 1); }

std::string items_plain(const std::vector<int>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ' ';
    s += item_name(items[i]);
  }
  return s;
}

json items_json(const std::vector<int>& items) {
  json arr = json::array();
  for (int j : items) arr.push_back(j + 1);
  return arr;
}

// "1,3,4" or "a1,a3,a4" -> 0-based indices
std::vector<int> parse_item_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw owa::InputError("empty item in list");
    std::string t = tok.substr(a, b - a + 1);
    if (!t.empty() && (t[0] == 'a' || t[0] == 'A')) t.erase(0, 1);
    try {
      int v = std::stoi(t);
      if (v < 1) throw std::invalid_argument("");
      out.push_back(v - 1);
    } catch (const std::exception&) {
      throw owa::InputError("bad item '" + tok + "' (expected 1-based index)");
    }
  }
  if (out.empty()) throw owa::InputError("empty item list");
  return out;
}

std::vector<owa::Rational> parse_rational_list(const std::string& csv) {
  std::vector<owa::Rational> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw owa::InputError("empty number in list");
    out.push_back(owa::Rational::parse(tok.substr(a, b - a + 1)));
  }
  return out;
}

struct Guarantee {
  std::string description = "exact";
  std::optional<double> value;
  std::optional<std::string> exact;  // rational string when representable
};

json guarantee_json(const Guarantee& g) {
  json j;
  j["description"] = g.description;
  if (g.value) j["value"] = *g.value;
  if (g.exact) j["exact"] = *g.exact;
  return j;
}

std::string guarantee_plain(const Guarantee& g) {
  std::string s = g.description;
  if (g.exact) {
    s += " = " + *g.exact;
  } else if (g.value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", *g.value);
    s += std::string(" = ") + buf;
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

void print_winner(const std::string& format, const owa::Instance& inst,
                  const owa::WinnerSet& ws, const std::string& algorithm,
                  const Guarantee& g) {
  // a solver bug can't reach the user: re-derive the score independently
  if (owa::committee_score(inst, ws.items).total != ws.score) {
    throw std::logic_error("internal: reported score failed re-verification");
  }
  if (format == "plain") {
    std::cout << items_plain(ws.items) << " / " << ws.score.str() << "\n";
    std::cout << "algorithm: " << algorithm << "\n";
    std::cout << "guarantee: " << guarantee_plain(g) << "\n";
  } else if (format == "json-lines") {
    json j;
    j["winner"] = json::array();
    for (int a : ws.items) j["winner"].push_back(item_name(a));
    j["items"] = items_json(ws.items);
    j["score"] = ws.score.str();
    j["score_decimal"] = ws.score.to_double();
    j["algorithm"] = algorithm;
    j["guarantee"] = guarantee_json(g);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "winner,score,score_decimal,algorithm,guarantee\n";
    std::cout << csv_quote(items_plain(ws.items)) << ',' << ws.score.str() << ','
              << ws.score.to_double() << ',' << algorithm << ','
              << csv_quote(guarantee_plain(g)) << "\n";
  }
}

std::string greedy_trace_csv(const owa::GreedyTrace& trace) {
  std::ostringstream out;
  out << "iteration,item,gain\n";
  for (std::size_t it = 0; it < trace.iterations.size(); ++it) {
    for (const auto& [cand, gain] : trace.iterations[it].gains) {
      out << it + 1 << ',' << item_name(cand) << ',' << gain.str() << "\n";
    }
  }
  return out.str();
}

std::string slots_trace_csv(const owa::SlotsState& state) {
  std::ostringstream out;
  out << "iteration,item,coverage,fallback,free_total,free_per_agent\n";
  for (std::size_t it = 0; it < state.iterations.size(); ++it) {
    const auto& rec = state.iterations[it];
    out << it + 1 << ',' << item_name(rec.chosen) << ',' << rec.coverage << ','
        << (rec.fallback ? 1 : 0) << ',' << rec.free_total_after << ',';
    for (std::size_t i = 0; i < rec.free_after.size(); ++i) {
      if (i) out << ';';
      out << rec.free_after[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string segmented_trace_csv(const owa::SegmentedResult& res) {
  std::ostringstream out;
  out << "segment,picks,survivors_after\n";
  for (const auto& rec : res.iterations) {
    out << rec.segment << ',';
    for (std::size_t i = 0; i < rec.picks.size(); ++i) {
      if (i) out << ';';
      out << item_name(rec.picks[i]);
    }
    out << ',' << rec.survivors_after << "\n";
  }
  return out.str();
}

double exp_bound(double beta, double gamma, int K, int ell, bool segmented) {
  owa::BoundQuery q;
  q.which = segmented ? owa::BoundFamily::segmented : owa::BoundFamily::slots;
  q.beta = beta;
  q.gamma = gamma;
  q.K = K;
  q.ell = ell;
  return owa::bound(q);
}

int run(int argc, char** argv) {
  CLI::App app{"OWA-Winner solver suite"};
  app.require_subcommand(1);

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "solve an instance");
  std::string solve_path = "-";
  std::string algorithm = "brute";
  std::string solve_format = "plain";
  std::string gamma_str, epsilon_str;
  std::string inner_name = "greedy";
  int ell = 0;  // 0: derive from the OWA
  std::int64_t budget = owa::kDefaultBruteBudget;
  bool want_trace = false;
  solve->add_option("instance", solve_path, "instance file (.owi), '-' for stdin");
  solve->add_option("-a,--algorithm", algorithm, "solver")
      ->check(CLI::IsMember({"brute", "kbest", "greedy", "hurwicz", "kbest-proxy",
                             "ptas", "slots", "segmented", "gprog-ptas"}));
  solve->add_option("--gamma", gamma_str, "rank-threshold fraction (decimal or a/b)");
  solve->add_option("--ell", ell, "OWA prefix length for slots/segmented");
  solve->add_option("--epsilon", epsilon_str, "PTAS accuracy target");
  solve->add_option("--budget", budget, "max subsets for brute force");
  solve->add_option("--inner", inner_name, "1-best solver inside hurwicz")
      ->check(CLI::IsMember({"greedy", "brute", "slots"}));
  solve->add_flag("--trace", want_trace, "append the per-iteration trace as CSV");
  solve->add_option("--format", solve_format)
      ->check(CLI::IsMember({"plain", "json-lines", "csv"}));

  solve->callback([&]() {
    owa::Instance inst = load_instance(solve_path);
    auto gamma = [&]() {
      if (gamma_str.empty()) throw owa::InputError("--gamma is required here");
      return owa::Rational::parse(gamma_str);
    };
    auto epsilon = [&]() {
      if (epsilon_str.empty()) throw owa::InputError("--epsilon is required here");
      return owa::Rational::parse(epsilon_str);
    };
    int ell_eff = ell > 0 ? ell : owa::classify(inst.owa).nonzero_prefix_len;
    owa::WinnerSet ws;
    Guarantee g;
    std::string trace_csv;

    if (algorithm == "brute") {
      ws = owa::brute_force(inst, budget);
    } else if (algorithm == "kbest") {
      ws = owa::kbest_solve(inst);
    } else if (algorithm == "greedy") {
      owa::GreedyResult res = owa::greedy_solve(inst);
      ws = res.winner;
      if (res.trace.guarantee_void) {
        g.description = "none (OWA not nonincreasing)";
      } else {
        g.description = "1 - 1/e";
        g.value = 1.0 - std::exp(-1.0);
      }
      if (want_trace) trace_csv = greedy_trace_csv(res.trace);
    } else if (algorithm == "hurwicz") {
      owa::InnerSolver inner = owa::inner_solver_from_name(inner_name);
      std::optional<owa::Rational> gm;
      if (!gamma_str.empty()) gm = owa::Rational::parse(gamma_str);
      ws = owa::hurwicz_solve(inst, inner, gm, budget);
      owa::Rational lambda = *owa::classify(inst.owa).hurwicz_lambda;
      if (inner == owa::InnerSolver::brute) {
        g.description = "lambda";
        g.exact = lambda.str();
        g.value = lambda.to_double();
      } else if (inner == owa::InnerSolver::greedy) {
        g.description = "lambda (1 - 1/e)";
        g.value = lambda.to_double() * (1.0 - std::exp(-1.0));
      } else {
        try {
          owa::Rational beta = owa::nonfinicky_beta(inst.utilities, *gm);
          g.description = "lambda beta (1 - exp(-gamma K))";
          g.value = lambda.to_double() *
                    exp_bound(beta.to_double(), gm->to_double(), inst.K, 1, false);
        } catch (const owa::InputError&) {
          g.description = "none (beta undefined for this profile)";
        }
      }
    } else if (algorithm == "kbest-proxy") {
      owa::ProxyResult res = owa::kbest_proxy_solve(inst);
      ws = res.winner;
      g.description = "sum(alpha) / (K alpha_1)";
      g.exact = res.guaranteed_ratio.str();
      g.value = res.guaranteed_ratio.to_double();
    } else if (algorithm == "ptas") {
      owa::PtasResult res = owa::ptas_solve(inst, epsilon(), budget);
      ws = res.winner;
      if (res.used_kbest) {
        g.description = "1 - epsilon";
        g.exact = (owa::Rational(1) - epsilon()).str();
        g.value = 1.0 - epsilon().to_double();
      }
    } else if (algorithm == "slots") {
      owa::SlotsResult res = owa::slots_greedy(inst, gamma(), ell_eff);
      ws = res.winner;
      try {
        owa::Rational beta = owa::nonfinicky_beta(inst.utilities, gamma());
        g.description = "beta (1 - exp(-gamma K / ell)), beta = " + beta.str();
        g.value = exp_bound(beta.to_double(), gamma().to_double(), inst.K,
                            ell_eff, false);
      } catch (const owa::InputError&) {
        g.description = "none (beta undefined for this profile)";
      }
      if (want_trace) trace_csv = slots_trace_csv(res.state);
    } else if (algorithm == "segmented") {
      owa::SegmentedResult res = owa::segmented_solve(inst, gamma(), ell_eff);
      ws = res.winner;
      try {
        owa::Rational beta = owa::nonfinicky_beta(inst.utilities, gamma());
        g.description = "beta (1 - ell exp(-gamma K / ell^2)), beta = " + beta.str();
        g.value = exp_bound(beta.to_double(), gamma().to_double(), inst.K,
                            ell_eff, true);
      } catch (const owa::InputError&) {
        g.description = "none (beta undefined for this profile)";
      }
      if (want_trace) trace_csv = segmented_trace_csv(res);
    } else {  // gprog-ptas
      owa::OwaClass cls = owa::classify(inst.owa);
      if (!cls.geometric_ratio) {
        throw owa::InputError("gprog-ptas requires a geometric-progression OWA");
      }
      owa::GprogPtasResult res =
          owa::gprog_ptas(inst, *cls.geometric_ratio, epsilon(), gamma(), budget);
      ws = res.winner;
      if (res.used_segmented) {
        g.description = "1 - epsilon (for (1,gamma)-non-finicky profiles)";
        g.value = 1.0 - epsilon().to_double();
      }
    }
    print_winner(solve_format, inst, ws, algorithm, g);
    if (want_trace && !trace_csv.empty()) std::cout << trace_csv;
  });

  // ---- score ----
  auto* score = app.add_subcommand("score", "score a committee");
  std::string score_path = "-";
  std::string score_items_str;
  std::string score_format = "plain";
  score->add_option("instance", score_path, "instance file, '-' for stdin");
  score->add_option("--items", score_items_str, "committee, e.g. 1,2,6 or a1,a2,a6")
      ->required();
  score->add_option("--format", score_format)
      ->check(CLI::IsMember({"plain", "json-lines", "csv"}));
  score->callback([&]() {
    owa::Instance inst = load_instance(score_path);
    std::vector<int> items = parse_item_list(score_items_str);
    std::sort(items.begin(), items.end());
    if (static_cast<int>(items.size()) > inst.K) {
      throw owa::InputError("committee larger than K");
    }
    owa::Rational s = owa::prefix_score(inst, items);
    if (score_format == "plain") {
      std::cout << items_plain(items) << " / " << s.str() << "\n";
    } else if (score_format == "json-lines") {
      json j;
      j["items"] = items_json(items);
      j["score"] = s.str();
      j["score_decimal"] = s.to_double();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "items,score,score_decimal\n"
                << csv_quote(items_plain(items)) << ',' << s.str() << ','
                << s.to_double() << "\n";
    }
  });

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind = "uniform";
  int gen_n = 0, gen_m = 0, gen_k = 0;
  std::uint64_t gen_seed = 0;
  std::int64_t gen_max_util = 10;
  std::string gen_rate = "1/2";
  std::string gen_owa_family = "harmonic";
  std::string gen_owa_params, gen_owa_list;
  std::string gen_out = "-";
  gen->add_option("--kind", gen_kind)
      ->check(CLI::IsMember({"uniform", "approval", "borda"}));
  gen->add_option("-n,--n", gen_n, "agents")->required();
  gen->add_option("-m,--m", gen_m, "items")->required();
  gen->add_option("-K,--K", gen_k, "committee size")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed (mt19937_64)");
  gen->add_option("--max-util", gen_max_util, "uniform kind: utilities in 0..max");
  gen->add_option("--rate", gen_rate, "approval kind: approval probability");
  gen->add_option("--owa-family", gen_owa_family,
                  "kmed|kbest|aprog|gprog|harmonic|hurwicz");
  gen->add_option("--owa-params", gen_owa_params, "family parameters, comma separated");
  gen->add_option("--owa", gen_owa_list, "explicit OWA weights, comma separated");
  gen->add_option("-o,--output", gen_out);
  gen->callback([&]() {
    owa::Rng rng(gen_seed);
    owa::UtilityMatrix mat;
    if (gen_kind == "uniform") {
      mat = owa::gen_uniform_utilities(gen_n, gen_m, gen_max_util, rng);
    } else if (gen_kind == "approval") {
      mat = owa::gen_approval_utilities(gen_n, gen_m,
                                        owa::Rational::parse(gen_rate), rng);
    } else {
      mat = owa::gen_borda_utilities(gen_n, gen_m, rng);
    }
    owa::OwaVector v;
    if (!gen_owa_list.empty()) {
      v.alpha = parse_rational_list(gen_owa_list);
    } else {
      v = owa::make_owa(gen_owa_family, parse_rational_list(gen_owa_params), gen_k);
    }
    owa::Instance inst = owa::make_instance(std::move(mat), std::move(v), gen_k);
    OutStream out(gen_out);
    owa::serialize_instance(inst, out.get());
  });

  // ---- import-preflib ----
  auto* imp = app.add_subcommand("import-preflib",
                                 "Borda utilities from a strict-order file");
  std::string imp_path;
  int imp_k = 0;
  std::string imp_owa_family = "harmonic";
  std::string imp_owa_params, imp_owa_list;
  std::string imp_out = "-";
  imp->add_option("input", imp_path, "rankings file (.soc), '-' for stdin")
      ->required();
  imp->add_option("-K,--K", imp_k, "committee size")->required();
  imp->add_option("--owa-family", imp_owa_family);
  imp->add_option("--owa-params", imp_owa_params);
  imp->add_option("--owa", imp_owa_list);
  imp->add_option("-o,--output", imp_out);
  imp->callback([&]() {
    std::vector<std::vector<int>> rankings;
    if (imp_path == "-") {
      rankings = owa::parse_preflib(std::cin);
    } else {
      std::ifstream in(imp_path);
      if (!in) throw owa::InputError("cannot open '" + imp_path + "'");
      rankings = owa::parse_preflib(in);
    }
    owa::UtilityMatrix mat = owa::borda_profile(rankings);
    owa::OwaVector v;
    if (!imp_owa_list.empty()) {
      v.alpha = parse_rational_list(imp_owa_list);
    } else {
      v = owa::make_owa(imp_owa_family, parse_rational_list(imp_owa_params), imp_k);
    }
    owa::Instance inst = owa::make_instance(std::move(mat), std::move(v), imp_k);
    OutStream out(imp_out);
    owa::serialize_instance(inst, out.get());
  });

  // ---- ilp-export ----
  auto* ilpx = app.add_subcommand("ilp-export", "emit the instance as an LP file");
  std::string ilpx_path = "-";
  std::string ilpx_out = "-";
  ilpx->add_option("instance", ilpx_path);
  ilpx->add_option("-o,--output", ilpx_out);
  ilpx->callback([&]() {
    owa::Instance inst = load_instance(ilpx_path);
    OutStream out(ilpx_out);
    owa::emit_lp(inst, out.get());
  });

  // ---- ilp-verify ----
  auto* ilpv = app.add_subcommand("ilp-verify", "check an external LP solution");
  std::string ilpv_path, ilpv_sol;
  std::string ilpv_format = "plain";
  ilpv->add_option("instance", ilpv_path)->required();
  ilpv->add_option("solution", ilpv_sol, "lines of: variable value")->required();
  ilpv->add_option("--format", ilpv_format)
      ->check(CLI::IsMember({"plain", "json-lines", "csv"}));
  ilpv->callback([&]() {
    owa::Instance inst = load_instance(ilpv_path);
    std::ifstream in(ilpv_sol);
    if (!in) throw owa::InputError("cannot open '" + ilpv_sol + "'");
    std::map<std::string, owa::Rational> assignment;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string name, value;
      if (!(ls >> name)) continue;
      if (!(ls >> value)) {
        throw owa::ParseError("missing value for variable " + name, lineno, 1);
      }
      assignment[name] = owa::Rational::parse(value);
    }
    owa::VerifyReport rep = owa::verify_solution(inst, assignment);
    if (ilpv_format == "plain") {
      if (rep.ok) {
        std::cout << "ok\n";
        std::cout << "objective: " << rep.objective.str() << "\n";
        std::cout << "winner: " << items_plain(rep.winner_items) << "\n";
        std::cout << "score: " << rep.winner_score.str() << "\n";
      } else {
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
      }
    } else if (ilpv_format == "json-lines") {
      json j;
      j["ok"] = rep.ok;
      j["violations"] = rep.violations;
      j["objective"] = rep.objective.str();
      j["winner"] = items_json(rep.winner_items);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "ok,objective,winner\n"
                << (rep.ok ? 1 : 0) << ',' << rep.objective.str() << ','
                << csv_quote(items_plain(rep.winner_items)) << "\n";
    }
    if (!rep.ok) throw owa::BudgetError("solution infeasible");
  });

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "approximation-bound calculators");
  std::string bounds_family = "slots";
  std::string bounds_grid, bounds_alpha;
  int bounds_k = 1, bounds_ell = 1;
  double bounds_beta = 1.0, bounds_gamma = 0.0;
  std::optional<double> bounds_iso;
  bool bounds_suggest = false;
  std::string bounds_out = "-";
  bounds->add_option("--family", bounds_family)
      ->check(CLI::IsMember({"slots", "segmented", "borda-lambert", "kbest-proxy",
                             "greedy-general"}));
  bounds->add_option("-K,--K", bounds_k);
  bounds->add_option("--ell", bounds_ell);
  bounds->add_option("--grid", bounds_grid,
                     "e.g. beta=0:1:11,gamma=0.1:0.9:9 -> CSV curves");
  bounds->add_option("--iso", bounds_iso,
                     "target bound; emit the beta attaining it per gamma");
  bounds->add_option("--beta", bounds_beta);
  bounds->add_option("--gamma", bounds_gamma);
  bounds->add_option("--alpha", bounds_alpha, "OWA weights for kbest-proxy");
  bounds->add_flag("--suggest", bounds_suggest,
                   "print the gamma = W(K/ell) ell / K recommendation");
  bounds->add_option("-o,--output", bounds_out);
  bounds->callback([&]() {
    OutStream out(bounds_out);
    if (bounds_suggest) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.12g",
                    owa::suggested_gamma(bounds_k, bounds_ell));
      out.get() << "suggested gamma: " << buf << "\n";
      return;
    }
    owa::BoundFamily family = owa::bound_family_from_name(bounds_family);
    if (!bounds_grid.empty() || bounds_iso.has_value()) {
      owa::GridSpec grid;
      grid.K = bounds_k;
      grid.ell = bounds_ell;
      grid.iso_target = bounds_iso;
      std::istringstream gs(bounds_grid);
      std::string part;
      while (std::getline(gs, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) {
          throw owa::InputError("bad grid part '" + part + "'");
        }
        std::string name = part.substr(0, eq);
        std::vector<double> vals = owa::parse_linspace(part.substr(eq + 1));
        if (name == "beta") {
          grid.betas = vals;
        } else if (name == "gamma") {
          grid.gammas = vals;
        } else {
          throw owa::InputError("grid axis must be beta or gamma");
        }
      }
      if (grid.betas.empty()) grid.betas = {bounds_beta};
      if (grid.gammas.empty()) grid.gammas = {bounds_gamma};
      owa::bound_curves(family, grid, out.get());
      return;
    }
    owa::BoundQuery q;
    q.which = family;
    q.beta = bounds_beta;
    q.gamma = bounds_gamma;
    q.K = bounds_k;
    q.ell = bounds_ell;
    if (!bounds_alpha.empty()) {
      owa::OwaVector v;
      v.alpha = parse_rational_list(bounds_alpha);
      q.alpha = v;
    }
    owa::BoundResult r = owa::bound_ex(q);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", r.value);
    out.get() << "bound: " << buf << (r.vacuous ? " (vacuous)" : "") << "\n";
  });

  // ---- check-submodular ----
  auto* chk = app.add_subcommand("check-submodular",
                                 "probe prefix-score submodularity");
  std::string chk_path = "-";
  std::string chk_mode = "exhaustive";
  std::string chk_format = "plain";
  int chk_samples = 10000;
  std::uint64_t chk_seed = 0;
  std::uint64_t chk_budget = 5'000'000;
  chk->add_option("instance", chk_path);
  chk->add_option("--mode", chk_mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  chk->add_option("--samples", chk_samples);
  chk->add_option("--seed", chk_seed);
  chk->add_option("--budget", chk_budget);
  chk->add_option("--format", chk_format)
      ->check(CLI::IsMember({"plain", "json-lines", "csv"}));
  chk->callback([&]() {
    owa::Instance inst = load_instance(chk_path);
    owa::CheckMode mode = chk_mode == "exhaustive" ? owa::CheckMode::exhaustive
                                                   : owa::CheckMode::sampled;
    owa::SubmodularReport rep =
        owa::check_submodular(inst, mode, chk_samples, chk_seed, chk_budget);
    if (chk_format == "plain") {
      if (rep.ok) {
        std::cout << "submodular: ok (" << rep.triples_tested
                  << " triples tested)\n";
      } else {
        const owa::Witness& w = *rep.witness;
        std::cout << "submodular: violated\n";
        std::cout << "W: " << items_plain(w.w) << "\n";
        std::cout << "W': " << items_plain(w.w_prime) << "\n";
        std::cout << "item: " << item_name(w.item) << "\n";
        std::cout << "gain at W: " << w.lhs.str() << "\n";
        std::cout << "gain at W': " << w.rhs.str() << "\n";
      }
    } else if (chk_format == "json-lines") {
      json j;
      j["ok"] = rep.ok;
      j["triples_tested"] = rep.triples_tested;
      if (rep.witness) {
        j["witness"] = {{"w", items_json(rep.witness->w)},
                        {"w_prime", items_json(rep.witness->w_prime)},
                        {"item", rep.witness->item + 1},
                        {"gain_at_w", rep.witness->lhs.str()},
                        {"gain_at_w_prime", rep.witness->rhs.str()}};
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "ok,triples_tested\n"
                << (rep.ok ? 1 : 0) << ',' << rep.triples_tested << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const owa::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const owa::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
