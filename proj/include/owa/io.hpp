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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/families.hpp"
#include "owa/profiles.hpp"

namespace owa {

namespace detail {

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits a stream into whitespace-separated tokens grouped by line,
// dropping '#' comments. Blank / comment-only lines disappear.
inline std::vector<std::vector<Token>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<Token>> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      toks.push_back({raw.substr(start, i - start), lineno,
                      static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

inline Rational parse_rational_token(const Token& t) {
  try {
    return Rational::parse(t.text);
  } catch (const std::overflow_error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + t.text + "'", t.line, t.column);
  }
}

inline int parse_int_token(const Token& t) {
  Rational r = parse_rational_token(t);
  if (!r.is_integer()) throw ParseError("expected an integer, got '" + t.text + "'",
                                        t.line, t.column);
  return static_cast<int>(r.num());
}

}  // namespace detail

// Instance text format (.owi):
//   line 1: owa-winner v1
//   line 2: <n> <m> <K>
//   line 3: owa <a1> ... <aK>   or   owa-family <name> <params...>
//   next n lines: m utility values each
// '#' starts a comment; numbers may be integers, decimals or fractions.
inline Instance parse_instance(std::istream& in) {
  using detail::Token;
  auto lines = detail::tokenize_lines(in);
  std::size_t row = 0;
  auto next_line = [&]() -> const std::vector<Token>& {
    if (row >= lines.size()) throw ParseError("unexpected end of input",
                                              lines.empty() ? 1 : lines.back()[0].line, 1);
    return lines[row++];
  };

  {
    const auto& header = next_line();
    if (header.size() != 2 || header[0].text != "owa-winner" || header[1].text != "v1") {
      throw ParseError("malformed header, expected 'owa-winner v1'",
                       header[0].line, header[0].column);
    }
  }

  int n, m, K;
  {
    const auto& dims = next_line();
    if (dims.size() != 3) throw ParseError("expected '<n> <m> <K>'",
                                           dims[0].line, dims[0].column);
    n = detail::parse_int_token(dims[0]);
    m = detail::parse_int_token(dims[1]);
    K = detail::parse_int_token(dims[2]);
    if (n < 1) throw ParseError("agent count must be positive", dims[0].line, dims[0].column);
    if (m < 1) throw ParseError("item count must be positive", dims[1].line, dims[1].column);
    if (K < 1) throw ParseError("K must be positive", dims[2].line, dims[2].column);
    if (K > m) throw ParseError("K exceeds item count", dims[2].line, dims[2].column);
  }

  OwaVector owa;
  {
    const auto& spec = next_line();
    if (spec[0].text == "owa") {
      if (static_cast<int>(spec.size()) - 1 != K) {
        throw ParseError("OWA length " + std::to_string(spec.size() - 1) +
                         " does not match K=" + std::to_string(K),
                         spec[0].line, spec[0].column);
      }
      for (std::size_t i = 1; i < spec.size(); ++i) {
        Rational v = detail::parse_rational_token(spec[i]);
        if (v < Rational(0)) throw ParseError("negative OWA entry",
                                              spec[i].line, spec[i].column);
        owa.alpha.push_back(v);
      }
    } else if (spec[0].text == "owa-family") {
      if (spec.size() < 2) throw ParseError("owa-family needs a family name",
                                            spec[0].line, spec[0].column);
      std::vector<Rational> params;
      for (std::size_t i = 2; i < spec.size(); ++i) {
        params.push_back(detail::parse_rational_token(spec[i]));
      }
      try {
        owa = make_owa(spec[1].text, params, K);
      } catch (const InputError& e) {
        throw ParseError(e.what(), spec[1].line, spec[1].column);
      }
    } else {
      throw ParseError("expected 'owa' or 'owa-family' line",
                       spec[0].line, spec[0].column);
    }
    bool any_positive = false;
    for (const auto& a : owa.alpha) {
      if (a > Rational(0)) any_positive = true;
    }
    if (!any_positive) throw ParseError("all-zero OWA vector",
                                        lines[row - 1][0].line, lines[row - 1][0].column);
  }

  UtilityMatrix mat;
  mat.n = n;
  mat.m = m;
  for (int i = 0; i < n; ++i) {
    const auto& vals = next_line();
    if (static_cast<int>(vals.size()) != m) {
      throw ParseError("expected " + std::to_string(m) + " utilities, got " +
                       std::to_string(vals.size()), vals[0].line, vals[0].column);
    }
    std::vector<Rational> rowvals;
    rowvals.reserve(m);
    for (const auto& t : vals) {
      Rational v = detail::parse_rational_token(t);
      if (v < Rational(0)) throw ParseError("negative utility", t.line, t.column);
      rowvals.push_back(v);
    }
    mat.u.push_back(std::move(rowvals));
  }
  if (row != lines.size()) {
    throw ParseError("unexpected trailing content", lines[row][0].line,
                     lines[row][0].column);
  }
  return make_instance(std::move(mat), std::move(owa), K);
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

// Canonical form: explicit 'owa' line, one utility row per agent.
// parse_instance(serialize_instance(I)) == I for every valid I.
inline void serialize_instance(const Instance& inst, std::ostream& out) {
  out << "owa-winner v1\n";
  out << inst.n() << ' ' << inst.m() << ' ' << inst.K << '\n';
  out << "owa";
  for (const auto& a : inst.owa.alpha) out << ' ' << a;
  out << '\n';
  for (const auto& row : inst.utilities.u) {
    for (int j = 0; j < inst.m(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  serialize_instance(inst, out);
  return out.str();
}

// PrefLib-style strict complete orders (".soc"): '#' lines are metadata,
// a data line is "<count>: c1,c2,...,cm" or just "c1,c2,...,cm" (count 1).
// Candidates are 1-based integers, optionally written a1, a2, ...
// Returns one ranking per agent with multiplicities expanded, as 0-based
// item indices.
inline std::vector<std::vector<int>> parse_preflib(std::istream& in) {
  std::vector<std::vector<int>> rankings;
  std::string raw;
  int lineno = 0;
  int m = -1;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    bool blank = true;
    for (char c : raw) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;

    int count = 1;
    std::string body = raw;
    std::size_t colon = raw.find(':');
    if (colon != std::string::npos) {
      try {
        count = std::stoi(raw.substr(0, colon));
      } catch (const std::exception&) {
        throw ParseError("bad multiplicity count", lineno, 1);
      }
      if (count < 1) throw ParseError("multiplicity must be positive", lineno, 1);
      body = raw.substr(colon + 1);
    }

    std::vector<int> order;
    std::string tok;
    std::istringstream bs(body);
    while (std::getline(bs, tok, ',')) {
      std::size_t a = tok.find_first_not_of(" \t");
      std::size_t b = tok.find_last_not_of(" \t");
      if (a == std::string::npos) throw ParseError("empty candidate token", lineno, 1);
      std::string t = tok.substr(a, b - a + 1);
      if (!t.empty() && (t[0] == 'a' || t[0] == 'A')) t.erase(0, 1);
      try {
        int cand = std::stoi(t);
        if (cand < 1) throw std::invalid_argument("");
        order.push_back(cand - 1);
      } catch (const std::exception&) {
        throw ParseError("bad candidate token '" + tok + "'", lineno, 1);
      }
    }
    if (m == -1) m = static_cast<int>(order.size());
    if (static_cast<int>(order.size()) != m) {
      throw ParseError("ranking length differs from previous lines", lineno, 1);
    }
    std::vector<bool> seen(m, false);
    for (int c : order) {
      if (c >= m || seen[c]) throw ParseError("ranking is not a permutation of 1.." +
                                              std::to_string(m), lineno, 1);
      seen[c] = true;
    }
    for (int r = 0; r < count; ++r) rankings.push_back(order);
  }
  if (rankings.empty()) throw InputError("no rankings found");
  return rankings;
}

}  // namespace owa
