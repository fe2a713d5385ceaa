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

#include "catch_amalgamated.hpp"
#include "owa/owa.hpp"

using owa::OwaVector;
using owa::Rational;

namespace {
OwaVector vec(std::vector<Rational> a) {
  OwaVector v;
  v.alpha = std::move(a);
  return v;
}
}  // namespace

TEST_CASE("family constructors produce the documented vectors") {
  CHECK(owa::make_kmed(4, 3).alpha == std::vector<Rational>{0, 0, 1, 0});
  CHECK(owa::make_kbest(4, 2).alpha == std::vector<Rational>{1, 1, 0, 0});
  CHECK(owa::make_aprog(3, Rational(2)).alpha == std::vector<Rational>{4, 3, 2});
  CHECK(owa::make_aprog(4, Rational(0), Rational(2)).alpha ==
        std::vector<Rational>{6, 4, 2, 0});
  CHECK(owa::make_gprog(4, Rational(2)).alpha == std::vector<Rational>{8, 4, 2, 1});
  CHECK(owa::make_harmonic(3).alpha ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3)});
  CHECK(owa::make_hurwicz(4, Rational(1, 3)).alpha ==
        std::vector<Rational>{Rational(1, 3), 0, 0, Rational(2, 3)});
}

TEST_CASE("family constructors reject out-of-range parameters") {
  CHECK_THROWS_AS(owa::make_kmed(3, 0), owa::InputError);
  CHECK_THROWS_AS(owa::make_kmed(3, 4), owa::InputError);
  CHECK_THROWS_AS(owa::make_kbest(3, 0), owa::InputError);
  CHECK_THROWS_AS(owa::make_aprog(3, Rational(-1)), owa::InputError);
  CHECK_THROWS_AS(owa::make_aprog(3, Rational(1), Rational(0)), owa::InputError);
  CHECK_THROWS_AS(owa::make_gprog(3, Rational(1)), owa::InputError);
  CHECK_THROWS_AS(owa::make_hurwicz(1, Rational(1, 2)), owa::InputError);
  CHECK_THROWS_AS(owa::make_hurwicz(3, Rational(2)), owa::InputError);
}

TEST_CASE("classify recognizes the named families") {
  auto h = owa::classify(owa::make_harmonic(4));
  CHECK(h.nonincreasing);
  CHECK_FALSE(h.constant);
  CHECK(h.nonzero_prefix_len == 4);
  CHECK_FALSE(h.kbest_k.has_value());
  CHECK_FALSE(h.kmed_k.has_value());
  CHECK_FALSE(h.geometric_ratio.has_value());

  auto kb = owa::classify(owa::make_kbest(5, 3));
  CHECK(kb.kbest_k == 3);
  CHECK(kb.nonzero_prefix_len == 3);
  CHECK(kb.nonincreasing);
  CHECK_FALSE(kb.kmed_k.has_value());

  auto km = owa::classify(owa::make_kmed(5, 3));
  CHECK(km.kmed_k == 3);
  CHECK_FALSE(km.kbest_k.has_value());
  CHECK_FALSE(km.nonincreasing);

  auto hw = owa::classify(owa::make_hurwicz(4, Rational(1, 4)));
  CHECK(hw.hurwicz_lambda == Rational(1, 4));
  CHECK_FALSE(hw.nonincreasing);

  auto gp = owa::classify(owa::make_gprog(4, Rational(3, 2)));
  CHECK(gp.geometric_ratio == Rational(3, 2));
  CHECK(gp.nonincreasing);
  CHECK(gp.nonzero_prefix_len == 4);

  auto ct = owa::classify(vec({2, 2, 2}));
  CHECK(ct.constant);
  CHECK(ct.kbest_k == 3);
}

TEST_CASE("classify corner cases") {
  // scaled k-best still counts; scaling never changes a ranking
  CHECK(owa::classify(vec({3, 3, 0, 0})).kbest_k == 2);
  // 1-best is simultaneously k-best, k-med and (with K=2) hurwicz(1)
  auto one = owa::classify(vec({1, 0}));
  CHECK(one.kbest_k == 1);
  CHECK(one.kmed_k == 1);
  CHECK(one.hurwicz_lambda == Rational(1));
  CHECK_FALSE(one.geometric_ratio.has_value());  // zero tail is not geometric
  // single-entry vector: no hurwicz reading
  CHECK_FALSE(owa::classify(vec({1})).hurwicz_lambda.has_value());
  // constant 2-vector is hurwicz(1/2) as well
  CHECK(owa::classify(vec({Rational(1, 2), Rational(1, 2)})).hurwicz_lambda ==
        Rational(1, 2));
  // ratio must be constant and > 1 throughout
  CHECK_FALSE(owa::classify(vec({9, 3, 2})).geometric_ratio.has_value());
  CHECK_FALSE(owa::classify(vec({1, 1, 1})).geometric_ratio.has_value());
  CHECK(owa::classify(vec({18, 6, 2})).geometric_ratio == Rational(3));
}

TEST_CASE("make_owa dispatches by family name") {
  CHECK(owa::make_owa("kbest", {Rational(2)}, 4) == owa::make_kbest(4, 2));
  CHECK(owa::make_owa("kmed", {Rational(3)}, 4) == owa::make_kmed(4, 3));
  CHECK(owa::make_owa("aprog", {Rational(1), Rational(2)}, 3) ==
        owa::make_aprog(3, Rational(1), Rational(2)));
  CHECK(owa::make_owa("gprog", {Rational(2)}, 3) == owa::make_gprog(3, Rational(2)));
  CHECK(owa::make_owa("harmonic", {}, 3) == owa::make_harmonic(3));
  CHECK(owa::make_owa("hurwicz", {Rational(1, 2)}, 3) ==
        owa::make_hurwicz(3, Rational(1, 2)));
  CHECK_THROWS_AS(owa::make_owa("harmonic", {Rational(1)}, 3), owa::InputError);
  CHECK_THROWS_AS(owa::make_owa("kbest", {}, 3), owa::InputError);
  CHECK_THROWS_AS(owa::make_owa("kbest", {Rational(1, 2)}, 3), owa::InputError);
  CHECK_THROWS_AS(owa::make_owa("zipf", {}, 3), owa::InputError);
}

TEST_CASE("truncate_geometric keeps the smallest adequate prefix") {
  auto t = owa::truncate_geometric(Rational(2), Rational(1, 2), 5);
  CHECK(t.ell == 2);  // 2^2 = 4 >= 2 / (1/2)
  CHECK(t.owa.alpha == std::vector<Rational>{16, 8, 0, 0, 0});
  CHECK(t.retained == Rational(24, 31));

  auto exact = owa::truncate_geometric(Rational(2), Rational(1, 2), 5);
  // p^(ell-1) < 2/eps <= p^ell, verified exactly
  CHECK(Rational::pow(Rational(2), exact.ell) >= Rational(4));
  CHECK(Rational::pow(Rational(2), exact.ell - 1) < Rational(4));
}

TEST_CASE("truncate_geometric caps at K") {
  auto t = owa::truncate_geometric(Rational(2), Rational(1, 1000000), 3);
  CHECK(t.ell == 3);
  CHECK(t.retained == Rational(1));
  CHECK(t.owa == owa::make_gprog(3, Rational(2)));
}

TEST_CASE("truncate_geometric domain") {
  CHECK_THROWS_AS(owa::truncate_geometric(Rational(1), Rational(1, 2), 3),
                  owa::InputError);
  CHECK_THROWS_AS(owa::truncate_geometric(Rational(2), Rational(0), 3),
                  owa::InputError);
  CHECK_THROWS_AS(owa::truncate_geometric(Rational(2), Rational(1), 3),
                  owa::InputError);
}
