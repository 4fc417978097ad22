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

#include <cstdint>
#include <optional>
#include <vector>

#include "petrifold/petri_net.hpp"
#include "petrifold/symmetry.hpp"
#include "petrifold/term.hpp"

namespace petrifold {

using TokenId = std::uint64_t;

/// An execution of a net recorded as a morphism of its folded category.
///
/// The boundary of the history is always the linearized current marking.
/// Each firing contributes one layer
///
///   routing ; (t ⊗ id_rest) ; normalize
///
/// where `routing` brings the chosen tokens in front of the rest (which
/// keeps its order), and `normalize` is the swap-free symmetry back to the
/// linearized marking. Tokens are identified by their wire position on the
/// boundary; each also carries a stable id for display.
class Session {
 public:
  struct Layer {
    TransitionId transition;
    /// Boundary position consumed by each input slot of the transition.
    std::vector<std::size_t> chosen;
    Symmetry routing;
    Symmetry normalize;
    Term term;
    std::vector<TokenId> consumed;
    std::vector<TokenId> produced;
    /// Token ids along the boundary after this layer.
    std::vector<TokenId> tokens_after;
    Marking marking_after;
  };

  /// Throws InvalidNet or UnknownPlace.
  Session(PetriNet net, Marking initial);

  const PetriNet& net() const noexcept { return net_; }
  const Presentation& presentation() const noexcept { return presentation_; }
  const Marking& initial_marking() const noexcept { return initial_; }
  const std::vector<TokenId>& initial_tokens() const noexcept { return initial_tokens_; }
  const Marking& marking() const;
  /// cod of the history: the linearized current marking.
  const Word& boundary() const;
  const std::vector<TokenId>& tokens() const;
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const Term& history() const;

  std::vector<TransitionId> enabled() const;

  /// Fires `t`. `chosen` gives, for each slot of t's input word, the
  /// boundary position of the token to consume; without it the earliest
  /// matching tokens are used. Throws UnknownTransition, NotEnabled or
  /// BadTokenChoice.
  const Layer& fire(const TransitionId& t,
                    std::optional<std::vector<std::size_t>> chosen = std::nullopt);

  /// Throws NothingToUndo.
  void undo();

  /// Throws Internal if the boundary or the token bookkeeping disagree with
  /// the marking.
  void check_invariants() const;

 private:
  PetriNet net_;
  Presentation presentation_;
  Marking initial_;
  std::vector<TokenId> initial_tokens_;
  Term initial_history_;
  std::vector<Layer> layers_;
  std::vector<Term> histories_;
};

}  // namespace petrifold
