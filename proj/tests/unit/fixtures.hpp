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

// Nets and morphisms shared by the unit tests.

#pragma once

#include "petrifold/correspondence.hpp"
#include "petrifold/petri_net.hpp"

namespace fixtures {

using namespace petrifold;

/// Four places in a row: t moves p1 to p2, v splits p2 into p3 and p4,
/// u moves p3 to p4.
inline PetriNet relay() {
  return PetriNet(PlaceOrder::natural({"p1", "p2", "p3", "p4"}),
                  {{"t", {{"p1", 1}}, {{"p2", 1}}},
                   {"v", {{"p2", 1}}, {{"p3", 1}, {"p4", 1}}},
                   {"u", {{"p3", 1}}, {{"p4", 1}}}});
}

inline Marking relay_start() { return {{"p1", 1}, {"p2", 1}, {"p3", 2}}; }

// The three-net chain N -> M -> L on which lifting fails to be functorial.
inline PetriNet chain_n() {
  return PetriNet(PlaceOrder::natural({"a", "b"}), {{"tN", {{"a", 1}, {"b", 1}}, {}}});
}
inline PetriNet chain_m() {
  return PetriNet(PlaceOrder::natural({"x", "y"}), {{"tM", {{"x", 1}, {"y", 1}}, {}}});
}
inline PetriNet chain_l() {
  return PetriNet(PlaceOrder::natural({"z"}), {{"tL", {{"z", 2}}, {}}});
}

inline NetMorphism chain_f() {
  NetMorphism f{chain_n(), chain_m(), {}, {{"tN", "tM"}}};
  f.places.set("a", {{"y", 1}});
  f.places.set("b", {{"x", 1}});
  return f;
}

inline NetMorphism chain_g() {
  NetMorphism g{chain_m(), chain_l(), {}, {{"tM", "tL"}}};
  g.places.set("x", {{"z", 1}});
  g.places.set("y", {{"z", 1}});
  return g;
}

/// Two transitions with the same inputs collapsed onto one.
inline NetMorphism collapse() {
  const PetriNet from(PlaceOrder::natural({"q1", "q2"}),
                      {{"t1", {{"q1", 1}, {"q2", 1}}, {}}, {"t2", {{"q1", 1}, {"q2", 1}}, {}}});
  const PetriNet to(PlaceOrder::natural({"q1", "q2"}), {{"s", {{"q1", 1}, {"q2", 1}}, {}}});
  NetMorphism f{from, to, MultisetHom::identity({"q1", "q2"}), {{"t1", "s"}, {"t2", "s"}}};
  return f;
}

inline Word w(std::string_view chars) { return Word::from_chars(chars); }

}  // namespace fixtures
