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

#include "petrifold/session.hpp"

#include <numeric>

#include "petrifold/correspondence.hpp"

namespace petrifold {

namespace {

Term empty_history() { return Term::identity({}); }

}  // namespace

Session::Session(PetriNet net, Marking initial)
    : net_(std::move(net)),
      presentation_(fold_net(net_)),
      initial_(std::move(initial)),
      initial_history_(empty_history()) {
  check_marking(net_, initial_);
  const Word start = linearize(initial_, net_.places());
  initial_tokens_.resize(start.size());
  std::iota(initial_tokens_.begin(), initial_tokens_.end(), TokenId{0});
  initial_history_ = Term::identity(start);
}

const Marking& Session::marking() const {
  return layers_.empty() ? initial_ : layers_.back().marking_after;
}

const Word& Session::boundary() const { return history().cod(); }

const std::vector<TokenId>& Session::tokens() const {
  return layers_.empty() ? initial_tokens_ : layers_.back().tokens_after;
}

const Term& Session::history() const {
  return histories_.empty() ? initial_history_ : histories_.back();
}

std::vector<TransitionId> Session::enabled() const {
  return petrifold::enabled(net_, marking());
}

const Session::Layer& Session::fire(const TransitionId& t,
                                    std::optional<std::vector<std::size_t>> chosen) {
  const Transition& tr = net_.transition(t);
  const Marking next = petrifold::fire(net_, marking(), t);
  const GeneratorSignature& sig = presentation_.generator(t);
  const Word& current = boundary();
  const std::size_t arity = sig.dom.size();

  std::vector<std::size_t> slots;
  if (chosen) {
    slots = std::move(*chosen);
    if (slots.size() != arity) {
      throw Error(ErrorCode::BadTokenChoice,
                  t.name() + " consumes " + std::to_string(arity) + " tokens but " +
                      std::to_string(slots.size()) + " were chosen");
    }
    std::vector<bool> taken(current.size(), false);
    for (std::size_t k = 0; k < arity; ++k) {
      const std::size_t pos = slots[k];
      if (pos >= current.size()) {
        throw Error(ErrorCode::BadTokenChoice,
                    "position " + std::to_string(pos) + " is past the boundary");
      }
      if (taken[pos]) {
        throw Error(ErrorCode::BadTokenChoice,
                    "position " + std::to_string(pos) + " chosen twice");
      }
      if (!(current[pos] == sig.dom[k])) {
        throw Error(ErrorCode::BadTokenChoice,
                    "slot " + std::to_string(k) + " needs a " + sig.dom[k].name() +
                        " token but position " + std::to_string(pos) + " holds " +
                        current[pos].name());
      }
      taken[pos] = true;
    }
  } else {
    // Earliest tokens first: the swap-free routing.
    std::vector<bool> taken(current.size(), false);
    for (std::size_t k = 0; k < arity; ++k) {
      std::size_t pos = 0;
      while (taken[pos] || !(current[pos] == sig.dom[k])) ++pos;
      taken[pos] = true;
      slots.push_back(pos);
    }
  }

  std::vector<std::size_t> perm(current.size());
  std::vector<bool> is_chosen(current.size(), false);
  for (std::size_t k = 0; k < arity; ++k) {
    perm[slots[k]] = k;
    is_chosen[slots[k]] = true;
  }
  std::size_t next_slot = arity;
  Word rest;
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (is_chosen[i]) continue;
    perm[i] = next_slot++;
    rest.push_back(current[i]);
  }
  Symmetry routing(current, std::move(perm));
  Symmetry normalize = swap_free_symmetry(sig.cod + rest, linearize(next, net_.places()));

  Term term = seq_all({symmetry_to_term(routing),
                       tensor(Term::generator(sig), Term::identity(rest)),
                       symmetry_to_term(normalize)});

  TokenId next_id = initial_tokens_.size();
  for (const auto& layer : layers_) next_id += layer.produced.size();

  const std::vector<TokenId> routed = routing.apply(tokens());
  std::vector<TokenId> consumed(routed.begin(), routed.begin() + static_cast<std::ptrdiff_t>(arity));
  std::vector<TokenId> produced(sig.cod.size());
  std::iota(produced.begin(), produced.end(), next_id);
  std::vector<TokenId> middle = produced;
  middle.insert(middle.end(), routed.begin() + static_cast<std::ptrdiff_t>(arity), routed.end());

  std::vector<TokenId> after = normalize.apply(middle);
  Layer layer{tr.name,  std::move(slots),    std::move(routing), std::move(normalize),
              term,     std::move(consumed), std::move(produced), std::move(after),
              next};

  histories_.push_back(seq(history(), term));
  layers_.push_back(std::move(layer));
  check_invariants();
  return layers_.back();
}

void Session::undo() {
  if (layers_.empty()) throw Error(ErrorCode::NothingToUndo, "no firing to undo");
  layers_.pop_back();
  histories_.pop_back();
}

void Session::check_invariants() const {
  const Term& h = history();
  if (!(h.dom() == linearize(initial_, net_.places()))) {
    throw Error(ErrorCode::Internal, "history does not start at the initial marking");
  }
  if (!(multiplicity(h.cod()) == marking())) {
    throw Error(ErrorCode::Internal, "history boundary disagrees with the marking");
  }
  if (tokens().size() != h.cod().size()) {
    throw Error(ErrorCode::Internal, "token bookkeeping disagrees with the boundary");
  }
}

}  // namespace petrifold
