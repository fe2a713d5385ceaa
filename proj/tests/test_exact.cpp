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

#include <string>

#include "catch_amalgamated.hpp"
#include "owa/owa.hpp"
#include "support/oracles.hpp"

using owa::Instance;
using owa::Rational;

TEST_CASE("brute force on the six-agent example") {
  Instance inst = testsupport::example1({Rational(2), Rational(1), Rational(0)});
  owa::WinnerSet w = owa::brute_force(inst);
  CHECK(w.items == std::vector<int>{0, 1, 5});
  CHECK(w.score == Rational(77));
  // the two second-place committees under the same weights
  CHECK(owa::committee_score(inst, {0, 1, 3}).total == Rational(75));
  CHECK(owa::committee_score(inst, {0, 4, 5}).total == Rational(75));
}

TEST_CASE("brute force under a 1-best vector") {
  Instance inst = testsupport::example1({Rational(1), Rational(0), Rational(0)});
  owa::WinnerSet w = owa::brute_force(inst);
  CHECK(w.items == std::vector<int>{0, 4, 5});
  CHECK(w.score == Rational(30));
}

TEST_CASE("brute force handles K = m and K = 1") {
  Instance full = testsupport::make_inst({{3, 1, 2}}, {1, 1, 1}, 3);
  CHECK(owa::brute_force(full).items == std::vector<int>{0, 1, 2});
  CHECK(owa::brute_force(full).score == Rational(6));
  Instance one = testsupport::make_inst({{3, 1, 5}}, {Rational(1)}, 1);
  CHECK(owa::brute_force(one).items == std::vector<int>{2});
}

TEST_CASE("brute force refuses oversized searches") {
  Instance inst = testsupport::example1({Rational(2), Rational(1), Rational(0)});
  try {
    owa::brute_force(inst, 10);  // C(6,3) = 20 > 10
    FAIL("expected BudgetError");
  } catch (const owa::BudgetError& e) {
    CHECK(std::string(e.what()).find("C(6,3) = 20") != std::string::npos);
    CHECK(std::string(e.what()).find("exceeds budget 10") != std::string::npos);
  }
}

TEST_CASE("budget error saturates the count for astronomical searches") {
  std::vector<Rational> row(70, Rational(1));
  Instance inst = testsupport::make_inst({row},
                                         std::vector<Rational>(35, Rational(1)), 35);
  try {
    owa::brute_force(inst);  // C(70,35) ~ 1.1e20
    FAIL("expected BudgetError");
  } catch (const owa::BudgetError& e) {
    CHECK(std::string(e.what()).find("C(70,35) = more than 2000000") !=
          std::string::npos);
  }
}

TEST_CASE("subset counting saturates instead of overflowing") {
  CHECK(owa::detail::binomial_capped(6, 3, 100) == 20);
  CHECK(owa::detail::binomial_capped(6, 3, 10) == 11);
  CHECK(owa::detail::binomial_capped(70, 35, 2'000'000) == 2'000'001);
  CHECK(owa::detail::binomial_capped(5, 0, 10) == 1);
  CHECK(owa::detail::binomial_capped(5, 9, 10) == 0);
}

TEST_CASE("kbest_solve picks the largest column sums") {
  Instance inst = testsupport::example1({Rational(1), Rational(1), Rational(1)});
  owa::WinnerSet w = owa::kbest_solve(inst);
  CHECK(w.items == std::vector<int>{0, 1, 2});
  CHECK(w.score == Rational(53));  // column sums 23, 15, 15
}

TEST_CASE("kbest_solve requires a constant vector") {
  Instance inst = testsupport::example1({Rational(2), Rational(1), Rational(0)});
  CHECK_THROWS_AS(owa::kbest_solve(inst), owa::InputError);
}

TEST_CASE("kbest_solve matches brute force on constant instances") {
  owa::Rng rng(2001);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testsupport::random_small_instance(rng).inst;
    inst.owa.alpha.assign(inst.K, Rational(2));
    owa::WinnerSet fast = owa::kbest_solve(inst);
    owa::WinnerSet slow = owa::brute_force(inst);
    CHECK(fast.items == slow.items);
    CHECK(fast.score == slow.score);
  }
}

TEST_CASE("the slope parameter of arithmetic weights changes winners") {
  // a pure common-difference rescale only scales scores, but changing the
  // offset-to-slope mix moves the optimum
  Instance gentle = testsupport::make_inst({{10, 0, 7}, {0, 10, 7}},
                                           owa::make_aprog(2, Rational(1)).alpha, 2);
  Instance steep = testsupport::make_inst(
      {{10, 0, 7}, {0, 10, 7}}, owa::make_aprog(2, Rational(1), Rational(5)).alpha, 2);
  owa::WinnerSet wg = owa::brute_force(gentle);
  owa::WinnerSet ws = owa::brute_force(steep);
  CHECK(wg.items == std::vector<int>{0, 2});
  CHECK(wg.score == Rational(41));
  CHECK(ws.items == std::vector<int>{0, 1});
  CHECK(ws.score == Rational(120));
}

TEST_CASE("scaling all weights scales the score, not the winner") {
  Instance base = testsupport::example1({Rational(2), Rational(1), Rational(0)});
  Instance scaled = testsupport::example1(
      {Rational(2) * Rational(5, 3), Rational(1) * Rational(5, 3), Rational(0)});
  owa::WinnerSet wb = owa::brute_force(base);
  owa::WinnerSet wsc = owa::brute_force(scaled);
  CHECK(wb.items == wsc.items);
  CHECK(wsc.score == Rational(5, 3) * wb.score);
}
