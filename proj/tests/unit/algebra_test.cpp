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

#include <limits>

#include "doctest.h"
#include "fixtures.hpp"
#include "petrifold/algebra.hpp"

using namespace petrifold;
using fixtures::w;

TEST_CASE("multiplicity counts occurrences") {
  const Multiset m = multiplicity(w("aababbccba"));
  CHECK(m == Multiset{{"a", 4}, {"b", 4}, {"c", 2}});
  CHECK(multiplicity(Word{}).empty());
  CHECK(multiplicity(Word::parse("p3 p3")) == Multiset{{"p3", 2}});
  CHECK(multiplicity(w("ab") + w("ba")) == multiplicity(w("ab")) + multiplicity(w("ba")));
}

TEST_CASE("linearize and sort_word follow the order") {
  const PlaceOrder ord = PlaceOrder::natural({"a", "b", "c", "z"});
  CHECK(linearize({{"b", 2}, {"a", 1}}, ord) == w("abb"));
  CHECK(linearize({}, ord).empty());
  CHECK(linearize({{"z", 2}}, ord) == w("zz"));
  CHECK(sort_word(w("ba"), ord) == w("ab"));
  CHECK(sort_word(w("abb"), ord) == w("abb"));
  CHECK(sort_word(w("aababbccba"), ord) == w("aaaabbbbcc"));
  CHECK_THROWS_AS(linearize({{"q", 1}}, ord), Error);
  CHECK_THROWS_AS(sort_word(w("q"), ord), Error);
}

TEST_CASE("explicit orders override the default") {
  const PlaceOrder ord = PlaceOrder::explicit_order({"c", "a", "b"});
  CHECK_FALSE(ord.is_natural());
  CHECK(linearize({{"a", 1}, {"b", 1}, {"c", 1}}, ord) == w("cab"));
}

TEST_CASE("numeric names sort numerically") {
  const PlaceOrder ord = PlaceOrder::natural({GeneratorId::number(10), GeneratorId::number(9),
                                              GeneratorId::number(1)});
  CHECK(ord.elements().front() == GeneratorId::number(1));
  CHECK(ord.elements().back() == GeneratorId::number(10));
}

TEST_CASE("apply_hom extends additively") {
  MultisetHom h;
  h.set("x", {{"z", 1}});
  h.set("y", {{"z", 1}});
  CHECK(apply_hom(h, {{"x", 1}, {"y", 1}}) == Multiset{{"z", 2}});
  CHECK(apply_hom(h, {}).empty());
  const MultisetHom id = MultisetHom::identity({"a"});
  CHECK(apply_hom(id, {{"a", 3}}) == Multiset{{"a", 3}});
  CHECK_THROWS_AS(apply_hom(h, {{"w", 1}}), Error);
}

TEST_CASE("grounded homs send generators to single generators") {
  MultisetHom one, two, split;
  one.set("x", {{"z", 1}});
  two.set("x", {{"z", 2}});
  split.set("x", {{"y", 1}, {"z", 1}});
  CHECK(hom_is_grounded(one));
  CHECK_FALSE(hom_is_grounded(two));
  CHECK_FALSE(hom_is_grounded(split));
}

TEST_CASE("multiset arithmetic") {
  const Multiset m{{"a", 2}, {"b", 1}};
  CHECK(m.size() == 3);
  CHECK(Multiset{{"a", 1}}.contained_in(m));
  CHECK_FALSE(Multiset{{"c", 1}}.contained_in(m));
  CHECK(m.minus({{"a", 2}}) == Multiset{{"b", 1}});
  CHECK(Multiset{{"a", 0}}.empty());
}

TEST_CASE("counts overflow instead of wrapping") {
  Multiset m{{"a", std::numeric_limits<Count>::max()}};
  CHECK_THROWS_AS(m.add("a"), Error);
}
