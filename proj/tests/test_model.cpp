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

#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "owa/owa.hpp"
#include "support/oracles.hpp"

using owa::Instance;
using owa::Rational;

TEST_CASE("make_instance validates shape") {
  owa::UtilityMatrix mat;
  mat.n = 2;
  mat.m = 3;
  mat.u = {{1, 2, 3}, {4, 5, 6}};
  owa::OwaVector v;
  v.alpha = {Rational(1), Rational(1)};
  CHECK_NOTHROW(owa::make_instance(mat, v, 2));
  CHECK_THROWS_AS(owa::make_instance(mat, v, 4), owa::InputError);  // K > m
  CHECK_THROWS_AS(owa::make_instance(mat, v, 3), owa::InputError);  // |alpha| != K
  v.alpha = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(owa::make_instance(mat, v, 2), owa::InputError);  // all-zero OWA
  v.alpha = {Rational(1), Rational(-1)};
  CHECK_THROWS_AS(owa::make_instance(mat, v, 2), owa::InputError);
  mat.u[0][1] = Rational(-2);
  v.alpha = {Rational(1), Rational(1)};
  CHECK_THROWS_AS(owa::make_instance(mat, v, 2), owa::InputError);
}

TEST_CASE("parse_instance reads the documented format") {
  std::string text =
      "# leading comment\n"
      "owa-winner v1\n"
      "2 3 2   # dims\n"
      "owa 1 1/2\n"
      "0.5 2 3\n"
      "4 5 6\n";
  Instance inst = owa::parse_instance(text);
  CHECK(inst.n() == 2);
  CHECK(inst.m() == 3);
  CHECK(inst.K == 2);
  CHECK(inst.owa.alpha == std::vector<Rational>{Rational(1), Rational(1, 2)});
  CHECK(inst.utilities.at(0, 0) == Rational(1, 2));
  CHECK(inst.utilities.at(1, 2) == Rational(6));
}

TEST_CASE("parse_instance accepts owa-family lines") {
  Instance inst = owa::parse_instance(
      "owa-winner v1\n1 4 3\nowa-family kbest 2\n1 2 3 4\n");
  CHECK(inst.owa.alpha ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
  Instance harm = owa::parse_instance(
      "owa-winner v1\n1 4 3\nowa-family harmonic\n1 2 3 4\n");
  CHECK(harm.owa.alpha ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3)});
}

TEST_CASE("parse_instance reports positions on errors") {
  auto expect_error_at = [](const std::string& text, int line) {
    try {
      owa::parse_instance(text);
      FAIL("expected a parse error");
    } catch (const owa::ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error_at("owa-winner v2\n1 1 1\nowa 1\n1\n", 1);
  expect_error_at("owa-winner v1\n1 x 1\nowa 1\n1\n", 2);
  expect_error_at("owa-winner v1\n1 2 3\nowa 1 1 1\n1 2\n", 2);   // K > m
  expect_error_at("owa-winner v1\n1 2 1\nowa 1 1\n1 2\n", 3);     // wrong length
  expect_error_at("owa-winner v1\n1 2 1\nowa 0\n1 2\n", 3);       // all-zero
  expect_error_at("owa-winner v1\n1 2 1\nowa 1\n1 2 3\n", 4);     // row too long
  expect_error_at("owa-winner v1\n1 2 1\nowa 1\n1 -2\n", 4);      // negative
  expect_error_at("owa-winner v1\n2 2 1\nowa 1\n1 2\n", 4);       // missing row
  expect_error_at("owa-winner v1\n1 2 1\nowa 1\n1 2\n9 9\n", 5);  // trailing
}

TEST_CASE("serialize then parse is the identity") {
  Instance a = testsupport::example1({Rational(2), Rational(1), Rational(0)});
  CHECK(owa::parse_instance(owa::serialize_instance(a)) == a);
  Instance b = testsupport::make_inst(
      {{Rational(1, 3), Rational(0)}, {Rational(7, 2), Rational(9)}},
      {Rational(1), Rational(1, 7)}, 2);
  CHECK(owa::parse_instance(owa::serialize_instance(b)) == b);
}

TEST_CASE("fixture files parse to the embedded instances") {
  std::ifstream f1(std::string(OWA_TEST_DATA_DIR) + "/example1.owi");
  REQUIRE(f1.good());
  CHECK(owa::parse_instance(f1) ==
        testsupport::example1({Rational(2), Rational(1), Rational(0)}));
  std::ifstream f2(std::string(OWA_TEST_DATA_DIR) + "/example2.owi");
  REQUIRE(f2.good());
  CHECK(owa::parse_instance(f2) ==
        testsupport::example2({Rational(2), Rational(1), Rational(0)}));
}

TEST_CASE("preflib rankings expand multiplicities") {
  std::ifstream f(std::string(OWA_TEST_DATA_DIR) + "/sample.soc");
  REQUIRE(f.good());
  auto rankings = owa::parse_preflib(f);
  REQUIRE(rankings.size() == 4);
  CHECK(rankings[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(rankings[1] == rankings[0]);
  CHECK(rankings[2] == std::vector<int>{3, 2, 1, 0});
  CHECK(rankings[3] == std::vector<int>{2, 0, 3, 1});

  std::istringstream bad("1,2,2,4\n");
  CHECK_THROWS_AS(owa::parse_preflib(bad), owa::ParseError);
  std::istringstream ragged("1,2,3\n1,2\n");
  CHECK_THROWS_AS(owa::parse_preflib(ragged), owa::ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(owa::parse_preflib(empty), owa::InputError);
}

TEST_CASE("approval and borda profiles") {
  owa::UtilityMatrix ap = owa::approval_profile({{0, 2}, {}, {1}}, 3);
  CHECK(ap.u == std::vector<std::vector<Rational>>{
                    {1, 0, 1}, {0, 0, 0}, {0, 1, 0}});
  CHECK_THROWS_AS(owa::approval_profile({{3}}, 3), owa::InputError);
  CHECK_THROWS_AS(owa::approval_profile({{-1}}, 3), owa::InputError);

  owa::UtilityMatrix bd = owa::borda_profile({{2, 0, 1}, {0, 1, 2}});
  CHECK(bd.u == std::vector<std::vector<Rational>>{{1, 0, 2}, {2, 1, 0}});
  CHECK_THROWS_AS(owa::borda_profile({{0, 0, 1}}), owa::InputError);
  CHECK_THROWS_AS(owa::borda_profile({{0, 1}, {0, 1, 2}}), owa::InputError);
}

TEST_CASE("borda utilities of the six-agent example match its rankings") {
  // the utility table and the preference orders are two views of one
  // profile
  owa::UtilityMatrix bd = owa::borda_profile({
      {0, 1, 2, 4, 5, 3},
      {0, 1, 2, 4, 5, 3},
      {0, 1, 2, 4, 5, 3},
      {5, 0, 3, 2, 4, 1},
      {5, 0, 3, 2, 4, 1},
      {4, 3, 1, 2, 5, 0},
  });
  Instance ref = testsupport::example1({Rational(2), Rational(1), Rational(0)});
  CHECK(bd == ref.utilities);
}

TEST_CASE("nonfinicky_beta golden values") {
  Instance inst = testsupport::example2({Rational(2), Rational(1), Rational(0)});
  CHECK(owa::nonfinicky_beta(inst.utilities, Rational(1, 2)) == Rational(4, 5));
  CHECK(owa::nonfinicky_beta(inst.utilities, Rational(2, 3)) == Rational(3, 5));
  CHECK(owa::nonfinicky_beta(inst.utilities, Rational(5, 6)) == Rational(1, 2));
  CHECK(owa::nonfinicky_beta(inst.utilities, Rational(1)) == Rational(0));
}

TEST_CASE("nonfinicky_beta domain") {
  Instance inst = testsupport::example2({Rational(2), Rational(1), Rational(0)});
  CHECK_THROWS_AS(owa::nonfinicky_beta(inst.utilities, Rational(0)), owa::InputError);
  CHECK_THROWS_AS(owa::nonfinicky_beta(inst.utilities, Rational(3, 2)), owa::InputError);
  owa::UtilityMatrix zeros;
  zeros.n = 1;
  zeros.m = 2;
  zeros.u = {{0, 0}};
  CHECK_THROWS_AS(owa::nonfinicky_beta(zeros, Rational(1, 2)), owa::InputError);
}

TEST_CASE("borda profiles are (x, 1-x)-non-finicky") {
  owa::Rng rng(424242);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + rng.below_int(5);
    int m = 2 + rng.below_int(7);
    owa::UtilityMatrix mat = owa::gen_borda_utilities(n, m, rng);
    for (const Rational& x : {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                              Rational(2, 3), Rational(9, 10)}) {
      Rational beta = owa::nonfinicky_beta(mat, Rational(1) - x);
      CHECK(beta >= x);
    }
  }
}

TEST_CASE("tiny gamma means the threshold rounds to zero items") {
  Instance inst = testsupport::example2({Rational(2), Rational(1), Rational(0)});
  // floor(gamma * m) = 0: every agent trivially qualifies at full strength
  CHECK(owa::nonfinicky_beta(inst.utilities, Rational(1, 100)) == Rational(1));
}
