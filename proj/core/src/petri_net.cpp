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

#include "petrifold/petri_net.hpp"

#include <set>
#include <sstream>

namespace petrifold {

namespace {

std::string show(const Multiset& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

void check_support(const PetriNet& net, const Multiset& m,
                   const TransitionId& t, const char* side, Violations& out) {
  for (const auto& [place, n] : m.entries()) {
    if (!net.places().contains(place)) {
      out.push_back({ErrorCode::UnknownPlace, place.name(),
                     std::string(side) + " of " + t.name() +
                         " mentions unknown place " + place.name()});
    }
  }
}

}  // namespace

const Transition* PetriNet::find(const TransitionId& name) const {
  for (const auto& t : transitions_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const Transition& PetriNet::transition(const TransitionId& name) const {
  if (const auto* t = find(name)) return *t;
  throw Error(ErrorCode::UnknownTransition, "unknown transition " + name.name());
}

bool operator==(const PetriNet& a, const PetriNet& b) {
  if (!(a.places_ == b.places_)) return false;
  if (a.transitions_.size() != b.transitions_.size()) return false;
  for (const auto& t : a.transitions_) {
    const auto* other = b.find(t.name);
    if (other == nullptr || !(*other == t)) return false;
  }
  return true;
}

Violations validate_net(const PetriNet& net) {
  Violations out;
  std::set<TransitionId> seen;
  for (const auto& t : net.transitions()) {
    if (!seen.insert(t.name).second) {
      out.push_back({ErrorCode::DuplicateName, t.name.name(),
                     "transition declared twice"});
    }
    if (net.places().contains(t.name)) {
      out.push_back({ErrorCode::DuplicateName, t.name.name(),
                     "name used both as place and transition"});
    }
    check_support(net, t.pre, t.name, "pre", out);
    check_support(net, t.post, t.name, "post", out);
  }
  return out;
}

void require_valid(const PetriNet& net) {
  if (auto v = validate_net(net); !v.empty()) {
    throw Error(ErrorCode::InvalidNet, describe(v));
  }
}

void check_marking(const PetriNet& net, const Marking& marking) {
  for (const auto& [place, n] : marking.entries()) {
    if (!net.places().contains(place)) {
      throw Error(ErrorCode::UnknownPlace,
                  "marking mentions unknown place " + place.name());
    }
  }
}

std::vector<TransitionId> enabled(const PetriNet& net, const Marking& marking) {
  check_marking(net, marking);
  std::vector<TransitionId> out;
  for (const auto& t : net.transitions()) {
    if (t.pre.contained_in(marking)) out.push_back(t.name);
  }
  return out;
}

Marking fire(const PetriNet& net, const Marking& marking, const TransitionId& t) {
  check_marking(net, marking);
  const Transition& tr = net.transition(t);
  if (!tr.pre.contained_in(marking)) {
    throw Error(ErrorCode::NotEnabled,
                "transition " + t.name() + " needs " + show(tr.pre) +
                    " but the marking is " + show(marking));
  }
  return marking.minus(tr.pre) + tr.post;
}

Violations validate_morphism(const NetMorphism& f) {
  Violations out;
  for (const auto& place : f.source.places().elements()) {
    if (!f.places.defined_on(place)) {
      out.push_back({ErrorCode::UnknownPlace, place.name(),
                     "place map is not defined on source place"});
      continue;
    }
    for (const auto& [target, n] : f.places.image(place).entries()) {
      if (!f.target.places().contains(target)) {
        out.push_back({ErrorCode::UnknownPlace, place.name(),
                       "image mentions " + target.name() +
                           ", which is not a target place"});
      }
    }
  }
  for (const auto& [place, image] : f.places.images()) {
    if (!f.source.places().contains(place)) {
      out.push_back({ErrorCode::UnknownPlace, place.name(),
                     "place map is defined outside the source net"});
    }
  }
  for (const auto& [from, to] : f.transitions) {
    if (f.source.find(from) == nullptr) {
      out.push_back({ErrorCode::UnknownTransition, from.name(),
                     "transition map is defined outside the source net"});
    }
  }
  if (!out.empty()) return out;

  for (const auto& t : f.source.transitions()) {
    auto it = f.transitions.find(t.name);
    if (it == f.transitions.end()) {
      out.push_back({ErrorCode::UnknownTransition, t.name.name(),
                     "transition map is not total"});
      continue;
    }
    const auto* image = f.target.find(it->second);
    if (image == nullptr) {
      out.push_back({ErrorCode::UnknownTransition, t.name.name(),
                     "image " + it->second.name() + " is not a target transition"});
      continue;
    }
    auto pre = apply_hom(f.places, t.pre);
    if (!(pre == image->pre)) {
      out.push_back({ErrorCode::InvalidMorphism, t.name.name(),
                     "pre square fails: f(pre) = " + show(pre) + " but pre(" +
                         image->name.name() + ") = " + show(image->pre)});
    }
    auto post = apply_hom(f.places, t.post);
    if (!(post == image->post)) {
      out.push_back({ErrorCode::InvalidMorphism, t.name.name(),
                     "post square fails: f(post) = " + show(post) +
                         " but post(" + image->name.name() +
                         ") = " + show(image->post)});
    }
  }
  return out;
}

NetMorphism identity_morphism(const PetriNet& net) {
  NetMorphism f{net, net, MultisetHom::identity(net.places().elements()), {}};
  for (const auto& t : net.transitions()) f.transitions.emplace(t.name, t.name);
  return f;
}

NetMorphism compose_net_morphisms(const NetMorphism& f, const NetMorphism& g) {
  if (!(f.target == g.source)) {
    throw Error(ErrorCode::SourceTargetMismatch,
                "target of the first morphism is not the source of the second");
  }
  NetMorphism out{f.source, g.target, f.places.then(g.places), {}};
  for (const auto& [from, mid] : f.transitions) {
    auto it = g.transitions.find(mid);
    if (it == g.transitions.end()) {
      throw Error(ErrorCode::UnknownTransition,
                  "second morphism is not defined on " + mid.name());
    }
    out.transitions.emplace(from, it->second);
  }
  return out;
}

bool is_grounded(const NetMorphism& f) { return hom_is_grounded(f.places); }

}  // namespace petrifold
