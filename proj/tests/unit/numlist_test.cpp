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

#include <functional>

#include "doctest.h"
#include "petrifold/numlist.hpp"

using namespace petrifold;

namespace {

PetriNet numbered(std::vector<std::uint64_t> places, std::vector<Transition> transitions) {
  std::vector<GeneratorId> ids;
  for (const auto p : places) ids.push_back(GeneratorId::number(p));
  return PetriNet(PlaceOrder::natural(ids), std::move(transitions));
}

Multiset ms(std::initializer_list<std::pair<std::uint64_t, Count>> entries) {
  Multiset m;
  for (const auto& [p, c] : entries) m.add(GeneratorId::number(p), c);
  return m;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse_numlist") {
  const PetriNet relay = numbered({1, 2, 3, 4}, {{"t1", ms({{1, 1}}), ms({{2, 1}})},
                                                 {"t2", ms({{2, 1}}), ms({{3, 1}, {4, 1}})},
                                                 {"t3", ms({{3, 1}}), ms({{4, 1}})}});
  CHECK(parse_numlist({1, 0, 2, 0, 2, 0, 3, 4, 0, 3, 0, 4}) == relay);
  CHECK(parse_numlist({}).empty());
  CHECK(code_of([] { parse_numlist({1}); }) == ErrorCode::OddSublistCount);
  CHECK(parse_numlist({1, 0}) == numbered({1}, {{"t1", ms({{1, 1}}), {}}}));
  CHECK(parse_numlist({1, 1, 0}) == numbered({1}, {{"t1", ms({{1, 2}}), {}}}));
  // Zeros separate: 1 1 | | is three sublists.
  CHECK(code_of([] { parse_numlist({1, 1, 0, 0}); }) == ErrorCode::OddSublistCount);
}

TEST_CASE("emit_numlist") {
  const PetriNet relay = parse_numlist({1, 0, 2, 0, 2, 0, 3, 4, 0, 3, 0, 4});
  CHECK(emit_numlist(relay) == NumList{1, 0, 2, 0, 2, 0, 3, 4, 0, 3, 0, 4});
  CHECK(emit_numlist(PetriNet({}, {})).empty());
  const PetriNet lonely = numbered({1, 7}, {{"t1", ms({{1, 1}}), {}}});
  CHECK(code_of([&] { emit_numlist(lonely); }) == ErrorCode::IsolatedPlace);
  const PetriNet named(PlaceOrder::natural({"p"}), {{"t", {{"p", 1}}, {}}});
  CHECK(code_of([&] { emit_numlist(named); }) == ErrorCode::NonNumericPlace);
}

TEST_CASE("text form") {
  CHECK(read_numlist("1 0 2\n0, 3 0") == NumList{1, 0, 2, 0, 3, 0});
  CHECK(read_numlist("[1, 0, 2, 0]") == NumList{1, 0, 2, 0});
  CHECK(write_numlist({1, 0, 2, 0}) == "1 0 2 0");
  CHECK(code_of([] { read_numlist("1 x 0"); }) == ErrorCode::Parse);
  CHECK(code_of([] { read_numlist("-1 0"); }) == ErrorCode::Parse);
}
