// Copyright 2026 The Petrifold Authors
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

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "petrifold/diagram.hpp"
#include "petrifold/sampling.hpp"
#include "petrifold/symmetry.hpp"

using namespace petrifold;
using fixtures::w;
using Perm = std::vector<std::size_t>;

TEST_CASE("symmetry_of_term") {
  CHECK(symmetry_of_term(Term::identity(w("abc"))).perm() == Perm{0, 1, 2});
  CHECK(symmetry_of_term(Term::braid(w("a"), w("bc"))).perm() == Perm{2, 0, 1});
  const Presentation p = fold_net(fixtures::relay());
  try {
    symmetry_of_term(Term::generator(p, "t"));
    FAIL("expected NotASymmetry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASymmetry);
  }
}

TEST_CASE("symmetry_to_term") {
  CHECK(mor_eq(symmetry_to_term(Symmetry::identity(w("ab"))), Term::identity(w("ab"))));
  CHECK(mor_eq(symmetry_to_term(Symmetry(w("ab"), {1, 0})), Term::braid(w("a"), w("b"))));
  const Symmetry s(w("abc"), {2, 0, 1});
  CHECK(s.target() == w("bca"));
  CHECK(decompose(s).size() == 2);
  CHECK(symmetry_of_term(symmetry_to_term(s)) == s);
}

TEST_CASE("label_word") {
  const LabeledWord l = label_word(w("aababbccba"));
  const std::vector<std::pair<char, unsigned>> expected = {{'a', 1}, {'a', 2}, {'b', 1}, {'a', 3}, {'b', 2},
                                                           {'b', 3}, {'c', 1}, {'c', 2}, {'b', 4}, {'a', 4}};
  REQUIRE(l.size() == expected.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    CHECK(l[i].generator == GeneratorId(std::string(1, expected[i].first)));
    CHECK(l[i].occurrence == expected[i].second);
  }
  CHECK(label_word({}).empty());
  CHECK(label_word(w("zz")) == LabeledWord{{"z", 1}, {"z", 2}});
}

TEST_CASE("lift_decomposition threads labels") {
  const BasicBlock first{w("a"), "a", "a", w("bb")};
  const BasicBlock second{w("aaa"), "b", "b", {}};
  const auto lifted = lift_decomposition({first, second});
  REQUIRE(lifted.size() == 2);
  CHECK(lifted[0] == LabeledBlock{{{"a", 1}}, {"a", 2}, {"a", 3}, {{"b", 1}, {"b", 2}}});
  CHECK(lifted[1] == LabeledBlock{{{"a", 1}, {"a", 3}, {"a", 2}}, {"b", 1}, {"b", 2}, {}});
  CHECK(lift_decomposition({}).empty());
  const auto single = lift_decomposition({BasicBlock{{}, "a", "b", {}}});
  CHECK(single == std::vector<LabeledBlock>{{{}, {"a", 1}, {"b", 1}, {}}});
  try {
    lift_decomposition({first, BasicBlock{{}, "b", "a", fixtures::w("aab")}});
    FAIL("expected NonComposable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonComposable);
  }
}

TEST_CASE("is_swap_free") {
  CHECK(is_swap_free(Symmetry::identity(w("aa"))));
  CHECK_FALSE(is_swap_free(Symmetry::braiding(w("a"), w("a"))));
  CHECK(is_swap_free(Symmetry::braiding(w("a"), w("b"))));
}

TEST_CASE("swap_free_symmetry") {
  CHECK(swap_free_symmetry(w("yx"), w("xy")).perm() == Perm{1, 0});
  CHECK(swap_free_symmetry(w("zz"), w("zz")).is_identity());
  CHECK(swap_free_symmetry(w("aab"), w("aba")).perm() == Perm{0, 2, 1});
  try {
    swap_free_symmetry(w("ab"), w("aa"));
    FAIL("expected NotAnagrams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnagrams);
  }
}

TEST_CASE("enumerate_symmetries") {
  CHECK(enumerate_symmetries(w("ab"), w("ba")).size() == 1);
  CHECK(enumerate_symmetries(w("aa"), w("aa")).size() == 2);
  CHECK(enumerate_symmetries(w("aab"), w("aba")).size() == 2);
  CHECK(enumerate_symmetries(w("ab"), w("bb")).empty());
  try {
    enumerate_symmetries(w("aaaaaaaaaaaa"), w("aaaaaaaaaaaa"));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("symmetries agree with the brute-force oracle") {
  sampling::Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const Word u = sampling::word(rng, sampling::letters(2), sampling::uniform(rng, 0, 5));
    const Word v = sampling::symmetry(rng, u).target();
    std::set<Perm> found;
    for (const auto& s : enumerate_symmetries(u, v)) found.insert(s.perm());
    CHECK(found == oracle::brute_symmetries(u, v));
  }
}

TEST_CASE("symmetry group laws") {
  sampling::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word u = sampling::word(rng, sampling::letters(3), sampling::uniform(rng, 0, 7));
    const Symmetry s = sampling::symmetry(rng, u);
    const Symmetry t = sampling::symmetry(rng, s.target());
    CHECK(s.then(s.inverse()).is_identity());
    CHECK(s.inverse().then(s).is_identity());
    CHECK(mor_eq(symmetry_to_term(s.then(t)), seq(symmetry_to_term(s), symmetry_to_term(t))));
    CHECK(compose_blocks(u, decompose(s)) == s);
    for (std::size_t k = 0; k < u.size(); ++k) CHECK(s.target()[s.perm()[k]] == u[k]);
  }
}
