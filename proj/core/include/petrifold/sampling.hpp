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

// Random instances for property checks and benchmarks. Everything is driven
// by a caller-owned std::mt19937_64, so runs are reproducible from a seed.

#pragma once

#include <random>
#include <vector>

#include "petrifold/correspondence.hpp"
#include "petrifold/petri_net.hpp"
#include "petrifold/symmetry.hpp"
#include "petrifold/term.hpp"

namespace petrifold::sampling {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng);

struct NetShape {
  std::size_t max_places = 6;
  std::size_t max_transitions = 5;
  /// Upper bound on |pre| and |post| (with multiplicity).
  std::size_t max_arc = 4;
  /// Places named 1..n instead of p1..pn.
  bool numeric_places = false;
  /// Drop places that no transition uses.
  bool connected_places_only = false;
};

PetriNet net(Rng& rng, const NetShape& shape = {});

/// Random multiset over `support` with total size at most `max_size`.
Multiset multiset(Rng& rng, const std::vector<GeneratorId>& support, std::size_t max_size);

Word word(Rng& rng, const std::vector<GeneratorId>& alphabet, std::size_t length);

/// The alphabet {a, b, c, ...} of the given size.
std::vector<GeneratorId> letters(std::size_t n);

/// Uniform random permutation of `source`.
Symmetry symmetry(Rng& rng, const Word& source);

/// Random swap-free symmetry out of `source`: a random anagram target with
/// the unique swap-free symmetry onto it.
Symmetry swap_free(Rng& rng, const Word& source);

/// Object generators a, b, c, ...; morphism generators g1, g2, ... with
/// dom/cod words of length at most `max_arity`.
Presentation presentation(Rng& rng, std::size_t objects = 3, std::size_t generators = 4,
                          std::size_t max_arity = 2);

struct TermShape {
  std::size_t max_wires = 10;
  std::size_t max_events = 6;
  std::size_t max_stages = 5;
};

/// Well-typed random term over `p` with domain `dom`: generator layers
/// interleaved with braids, identities and nested tensors.
Term term(Rng& rng, const Presentation& p, const Word& dom, const TermShape& shape = {});

/// Random term with a random domain of length at most half the wire budget.
Term term(Rng& rng, const Presentation& p, const TermShape& shape = {});

/// How the place map of a sampled morphism is drawn.
enum class PlaceMap {
  /// Each place to an arbitrary multiset of size 1..2.
  Any,
  /// Each place to a single place.
  Grounded,
  /// Each place to a distinct single place.
  Injective,
  /// Injective and order preserving.
  Monotone,
};

/// Random valid net morphism out of `source`. The target has the images of
/// the source transitions (equal images may be merged) plus extra random
/// transitions and places.
NetMorphism morphism(Rng& rng, const PetriNet& source, PlaceMap kind,
                     const NetShape& extra = {2, 2, 3});

}  // namespace petrifold::sampling
