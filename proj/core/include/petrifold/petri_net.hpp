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

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "petrifold/algebra.hpp"
#include "petrifold/error.hpp"

namespace petrifold {

using TransitionId = GeneratorId;

struct Transition {
  TransitionId name;
  Multiset pre;
  Multiset post;

  bool operator==(const Transition&) const = default;
};

/// Place/transition net with ordered places. Transitions keep their
/// declaration order, which is what the number-list format and the folded
/// presentation use; equality ignores that order.
class PetriNet {
 public:
  PetriNet() = default;
  PetriNet(PlaceOrder places, std::vector<Transition> transitions)
      : places_(std::move(places)), transitions_(std::move(transitions)) {}

  const PlaceOrder& places() const noexcept { return places_; }
  const std::vector<Transition>& transitions() const noexcept {
    return transitions_;
  }
  bool empty() const noexcept {
    return places_.size() == 0 && transitions_.empty();
  }

  const Transition* find(const TransitionId& name) const;
  /// Throws UnknownTransition.
  const Transition& transition(const TransitionId& name) const;

  friend bool operator==(const PetriNet& a, const PetriNet& b);

 private:
  PlaceOrder places_;
  std::vector<Transition> transitions_;
};

using Marking = Multiset;

/// Every broken net invariant, each naming the offending place or transition.
Violations validate_net(const PetriNet& net);

/// Throws InvalidNet with all violations attached.
void require_valid(const PetriNet& net);

/// Throws UnknownPlace if the marking mentions a place outside the net.
void check_marking(const PetriNet& net, const Marking& marking);

/// Transitions whose preset fits in the marking, in declaration order.
std::vector<TransitionId> enabled(const PetriNet& net, const Marking& marking);

/// marking - pre(t) + post(t). Throws NotEnabled.
Marking fire(const PetriNet& net, const Marking& marking, const TransitionId& t);

/// Net morphism: a multiset homomorphism on places and a function on
/// transitions making the pre/post squares commute.
struct NetMorphism {
  PetriNet source;
  PetriNet target;
  MultisetHom places;
  std::map<TransitionId, TransitionId> transitions;

  bool operator==(const NetMorphism&) const = default;
};

Violations validate_morphism(const NetMorphism& f);

NetMorphism identity_morphism(const PetriNet& net);

/// First f, then g. Throws SourceTargetMismatch.
NetMorphism compose_net_morphisms(const NetMorphism& f, const NetMorphism& g);

/// True iff the place map sends each place to a single place.
bool is_grounded(const NetMorphism& f);

}  // namespace petrifold
