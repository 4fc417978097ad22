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

#include "petrifold/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace petrifold::sampling {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

Multiset multiset(Rng& rng, const std::vector<GeneratorId>& support, std::size_t max_size) {
  Multiset m;
  if (support.empty()) return m;
  const std::size_t n = uniform(rng, 0, max_size);
  for (std::size_t i = 0; i < n; ++i) m.add(support[uniform(rng, 0, support.size() - 1)]);
  return m;
}

PetriNet net(Rng& rng, const NetShape& shape) {
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(shape.max_places, 1));
  std::vector<GeneratorId> places;
  for (std::size_t i = 1; i <= n; ++i) {
    places.push_back(shape.numeric_places ? GeneratorId::number(i)
                                          : GeneratorId("p" + std::to_string(i)));
  }
  std::vector<Transition> transitions;
  const std::size_t k = uniform(rng, 0, shape.max_transitions);
  std::set<GeneratorId> used;
  for (std::size_t i = 1; i <= k; ++i) {
    Transition t{GeneratorId("t" + std::to_string(i)), multiset(rng, places, shape.max_arc),
                 multiset(rng, places, shape.max_arc)};
    for (const auto* m : {&t.pre, &t.post}) {
      for (const auto& [p, c] : m->entries()) used.insert(p);
    }
    transitions.push_back(std::move(t));
  }
  if (shape.connected_places_only) {
    places.assign(used.begin(), used.end());
  }
  return PetriNet(PlaceOrder::natural(std::move(places)), std::move(transitions));
}

Word word(Rng& rng, const std::vector<GeneratorId>& alphabet, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
  return w;
}

std::vector<GeneratorId> letters(std::size_t n) {
  std::vector<GeneratorId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

Symmetry symmetry(Rng& rng, const Word& source) {
  std::vector<std::size_t> perm(source.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return Symmetry(source, std::move(perm));
}

Symmetry swap_free(Rng& rng, const Word& source) {
  return swap_free_symmetry(source, symmetry(rng, source).target());
}

Presentation presentation(Rng& rng, std::size_t objects, std::size_t generators,
                          std::size_t max_arity) {
  const auto alphabet = letters(objects);
  std::vector<GeneratorSignature> sigs;
  for (std::size_t i = 1; i <= generators; ++i) {
    sigs.push_back({GeneratorId("g" + std::to_string(i)),
                    word(rng, alphabet, uniform(rng, 0, max_arity)),
                    word(rng, alphabet, uniform(rng, 0, max_arity))});
  }
  return Presentation(PlaceOrder::natural(alphabet), std::move(sigs));
}

namespace {

Term identity_or_empty(const Word& w) { return Term::identity(w); }

Term braid_stage(Rng& rng, const Word& w) {
  const std::size_t n = w.size();
  std::size_t i = uniform(rng, 0, n);
  std::size_t j = uniform(rng, 0, n);
  std::size_t k = uniform(rng, 0, n);
  std::size_t cut[3] = {i, j, k};
  std::sort(cut, cut + 3);
  return tensor_all({identity_or_empty(w.slice(0, cut[0])),
                     Term::braid(w.slice(cut[0], cut[1] - cut[0]), w.slice(cut[1], cut[2] - cut[1])),
                     identity_or_empty(w.slice(cut[2], n - cut[2]))});
}

// Routes randomly chosen tokens matching `sig.dom` into a block at a random
// offset, applies the generator there and leaves the other wires alone.
std::vector<Term> generator_stage(Rng& rng, const Word& w, const GeneratorSignature& sig) {
  std::vector<bool> taken(w.size(), false);
  std::vector<std::size_t> chosen;
  for (const auto& g : sig.dom) {
    std::vector<std::size_t> options;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!taken[i] && w[i] == g) options.push_back(i);
    }
    const std::size_t pick = options[uniform(rng, 0, options.size() - 1)];
    taken[pick] = true;
    chosen.push_back(pick);
  }
  const std::size_t rest_size = w.size() - chosen.size();
  const std::size_t offset = uniform(rng, 0, rest_size);
  std::vector<std::size_t> perm(w.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) perm[chosen[k]] = offset + k;
  Word rest;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (taken[i]) continue;
    perm[i] = slot < offset ? slot : slot + chosen.size();
    ++slot;
    rest.push_back(w[i]);
  }
  const Symmetry routing(w, std::move(perm));
  return {symmetry_to_term(routing),
          tensor_all({Term::identity(rest.slice(0, offset)), Term::generator(sig),
                      Term::identity(rest.slice(offset, rest_size - offset))})};
}

// `wires` bounds the width of every intermediate boundary; the two halves of
// a tensor split the headroom above their domains.
Term build(Rng& rng, const Presentation& p, const Word& dom, std::size_t& events,
           std::size_t wires, const TermShape& shape, int depth) {
  if (depth < 2 && dom.size() >= 2 && uniform(rng, 0, 3) == 0) {
    const std::size_t k = uniform(rng, 1, dom.size() - 1);
    std::size_t left_events = uniform(rng, 0, events);
    std::size_t right_events = events - left_events;
    const std::size_t headroom = wires > dom.size() ? wires - dom.size() : 0;
    const std::size_t left_room = uniform(rng, 0, headroom);
    Term left = build(rng, p, dom.slice(0, k), left_events, k + left_room, shape, depth + 1);
    Term right = build(rng, p, dom.slice(k, dom.size() - k), right_events,
                       dom.size() - k + headroom - left_room, shape, depth + 1);
    events = left_events + right_events;
    return tensor(left, right);
  }
  Term current = Term::identity(dom);
  const std::size_t stages = uniform(rng, 1, shape.max_stages);
  for (std::size_t s = 0; s < stages; ++s) {
    const Word& w = current.cod();
    const std::size_t choice = uniform(rng, 0, 5);
    if (choice <= 2 && events > 0) {
      std::vector<const GeneratorSignature*> fits;
      for (const auto& sig : p.generators()) {
        if (!multiplicity(sig.dom).contained_in(multiplicity(w))) continue;
        if (w.size() - sig.dom.size() + sig.cod.size() > wires) continue;
        fits.push_back(&sig);
      }
      if (!fits.empty()) {
        const auto* sig = fits[uniform(rng, 0, fits.size() - 1)];
        for (const auto& stage : generator_stage(rng, w, *sig)) current = seq(current, stage);
        --events;
        continue;
      }
    }
    if (choice <= 4 && w.size() >= 2) {
      current = seq(current, braid_stage(rng, w));
    } else if (choice == 5) {
      current = seq(current, Term::identity(w));
    }
  }
  return current;
}

}  // namespace

Term term(Rng& rng, const Presentation& p, const Word& dom, const TermShape& shape) {
  std::size_t events = uniform(rng, 0, shape.max_events);
  return build(rng, p, dom, events, shape.max_wires, shape, 0);
}

Term term(Rng& rng, const Presentation& p, const TermShape& shape) {
  const Word dom = word(rng, p.objects().elements(), uniform(rng, 0, shape.max_wires / 2));
  return term(rng, p, dom, shape);
}

NetMorphism morphism(Rng& rng, const PetriNet& source, PlaceMap kind, const NetShape& extra) {
  const auto& src_places = source.places().elements();
  std::size_t m = 0;
  if (kind == PlaceMap::Injective || kind == PlaceMap::Monotone) {
    m = src_places.size() + uniform(rng, 0, extra.max_places);
  } else {
    m = uniform(rng, 1, std::max<std::size_t>(src_places.size(), 1) + extra.max_places);
  }
  std::vector<GeneratorId> tgt_places;
  for (std::size_t i = 1; i <= m; ++i) tgt_places.emplace_back("q" + std::to_string(i));
  const PlaceOrder order = PlaceOrder::natural(tgt_places);
  const auto& ordered = order.elements();

  MultisetHom hom;
  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::shuffle(pick.begin(), pick.end(), rng);
  if (kind == PlaceMap::Monotone) {
    pick.resize(src_places.size());
    std::sort(pick.begin(), pick.end());
  }
  for (std::size_t i = 0; i < src_places.size(); ++i) {
    Multiset image;
    switch (kind) {
      case PlaceMap::Any: {
        const std::size_t size = uniform(rng, 1, 2);
        for (std::size_t j = 0; j < size; ++j) image.add(ordered[uniform(rng, 0, m - 1)]);
        break;
      }
      case PlaceMap::Grounded:
        image.add(ordered[uniform(rng, 0, m - 1)]);
        break;
      case PlaceMap::Injective:
      case PlaceMap::Monotone:
        image.add(ordered[pick[i]]);
        break;
    }
    hom.set(src_places[i], std::move(image));
  }

  std::vector<Transition> tgt_transitions;
  std::map<TransitionId, TransitionId> tr_map;
  for (const auto& t : source.transitions()) {
    const Multiset pre = apply_hom(hom, t.pre);
    const Multiset post = apply_hom(hom, t.post);
    const Transition* reuse = nullptr;
    for (const auto& u : tgt_transitions) {
      if (u.pre == pre && u.post == post && coin(rng)) {
        reuse = &u;
        break;
      }
    }
    if (reuse != nullptr) {
      tr_map.emplace(t.name, reuse->name);
      continue;
    }
    const GeneratorId name("u" + std::to_string(tgt_transitions.size() + 1));
    tgt_transitions.push_back({name, pre, post});
    tr_map.emplace(t.name, name);
  }
  const std::size_t extras = uniform(rng, 0, extra.max_transitions);
  for (std::size_t i = 0; i < extras; ++i) {
    const GeneratorId name("u" + std::to_string(tgt_transitions.size() + 1));
    tgt_transitions.push_back(
        {name, multiset(rng, ordered, extra.max_arc), multiset(rng, ordered, extra.max_arc)});
  }
  return NetMorphism{source, PetriNet(order, std::move(tgt_transitions)), std::move(hom),
                     std::move(tr_map)};
}

}  // namespace petrifold::sampling
