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

// Moving between nets and free symmetric monoidal categories.
//
//   fold_net / unfold_cat          nets <-> presentations (names preserved)
//   lift_net_morphism              net morphism -> transition-preserving functor
//   unfold_functor                 functor -> net morphism (this one is functorial)
//
// Lifting picks swap-free symmetries around every generator image. That is
// the only choice stable under composition of symmetries, and it is still
// not stable under composition of functors once places get identified.

#pragma once

#include <map>
#include <optional>

#include "petrifold/petri_net.hpp"
#include "petrifold/symmetry.hpp"
#include "petrifold/term.hpp"

namespace petrifold {

/// Image of one morphism generator: pre ; generator ; post.
struct GeneratorImage {
  Symmetry pre;
  GeneratorId generator;
  Symmetry post;

  bool operator==(const GeneratorImage&) const = default;
};

/// Strict monoidal functor sending each generator to sigma ; t ; sigma'.
struct TPFunctor {
  Presentation source;
  Presentation target;
  std::map<GeneratorId, Word> objects;
  std::map<GeneratorId, GeneratorImage> generators;

  /// Monoid-hom extension of the object map. Throws UnknownGenerator.
  Word map_word(const Word& w) const;

  bool operator==(const TPFunctor&) const = default;
};

/// Object generators are the places (same order); one morphism generator per
/// transition, typed by the linearized pre/post. Throws InvalidNet.
Presentation fold_net(const PetriNet& net);

/// Places are the object generators; pre/post are multiplicities.
PetriNet unfold_cat(const Presentation& p);

/// The transition-preserving isomorphism p -> fold_net(unfold_cat(p)).
TPFunctor fold_unfold_iso(const Presentation& p);

Violations check_transition_preserving(const TPFunctor& f);

/// Throws InvalidFunctor with all violations attached.
void require_transition_preserving(const TPFunctor& f);

TPFunctor identity_functor(const Presentation& p);

/// Lifts `f` between the folded source and target, using swap-free
/// symmetries around every generator. Throws InvalidMorphism.
TPFunctor lift_net_morphism(const NetMorphism& f);

/// As above, but with the folded presentations supplied by the caller.
/// Throws InvalidMorphism if they are not the folds of f's nets.
TPFunctor lift_net_morphism(const NetMorphism& f, const Presentation& source,
                            const Presentation& target);

/// Replaces the symmetries around one generator image and revalidates.
/// Throws UnknownGenerator or InvalidFunctor.
TPFunctor tweak(const TPFunctor& f, const GeneratorId& generator,
                std::optional<Symmetry> pre, std::optional<Symmetry> post);

/// Image of a symmetry: every source wire becomes the block of wires of its
/// image, and blocks move as wholes.
Symmetry apply_functor_to_symmetry(const TPFunctor& f, const Symmetry& s);

/// First f, then g. Throws SourceTargetMismatch.
TPFunctor compose_functors(const TPFunctor& f, const TPFunctor& g);

/// Structure-preserving action on terms. Throws UnknownGenerator, or
/// IllTyped when a generator occurrence disagrees with the source.
Term apply_functor(const TPFunctor& f, const Term& t);

/// Net morphism between the unfolded presentations: places go to the
/// multiplicity of their image, generators to their image generator.
NetMorphism unfold_functor(const TPFunctor& f);

}  // namespace petrifold
