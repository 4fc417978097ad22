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

#include "petrifold/correspondence.hpp"

namespace petrifold {

Word TPFunctor::map_word(const Word& w) const {
  Word out;
  for (const auto& g : w) {
    auto it = objects.find(g);
    if (it == objects.end()) {
      throw Error(ErrorCode::UnknownGenerator,
                  "functor is not defined on object " + g.name());
    }
    out += it->second;
  }
  return out;
}

Presentation fold_net(const PetriNet& net) {
  require_valid(net);
  std::vector<GeneratorSignature> generators;
  generators.reserve(net.transitions().size());
  for (const auto& t : net.transitions()) {
    generators.push_back({t.name, linearize(t.pre, net.places()),
                          linearize(t.post, net.places())});
  }
  return Presentation(net.places(), std::move(generators));
}

PetriNet unfold_cat(const Presentation& p) {
  std::vector<Transition> transitions;
  transitions.reserve(p.generators().size());
  for (const auto& g : p.generators()) {
    transitions.push_back({g.name, multiplicity(g.dom), multiplicity(g.cod)});
  }
  return PetriNet(p.objects(), std::move(transitions));
}

TPFunctor fold_unfold_iso(const Presentation& p) {
  TPFunctor f{p, fold_net(unfold_cat(p)), {}, {}};
  for (const auto& g : p.objects().elements()) f.objects.emplace(g, Word{g});
  for (const auto& g : p.generators()) {
    const auto& image = f.target.generator(g.name);
    f.generators.emplace(g.name, GeneratorImage{swap_free_symmetry(g.dom, image.dom),
                                                 g.name,
                                                 swap_free_symmetry(image.cod, g.cod)});
  }
  return f;
}

Violations check_transition_preserving(const TPFunctor& f) {
  Violations out;
  for (const auto& g : f.source.objects().elements()) {
    auto it = f.objects.find(g);
    if (it == f.objects.end()) {
      out.push_back({ErrorCode::UnknownGenerator, g.name(),
                     "object map is not defined on this generator"});
      continue;
    }
    for (const auto& s : it->second) {
      if (!f.target.objects().contains(s)) {
        out.push_back({ErrorCode::UnknownGenerator, g.name(),
                       "image mentions " + s.name() +
                           ", which is not a target object"});
      }
    }
  }
  for (const auto& [g, image] : f.objects) {
    if (!f.source.objects().contains(g)) {
      out.push_back({ErrorCode::UnknownGenerator, g.name(),
                     "object map is defined outside the source"});
    }
  }
  for (const auto& [name, image] : f.generators) {
    if (f.source.find(name) == nullptr) {
      out.push_back({ErrorCode::UnknownGenerator, name.name(),
                     "generator map is defined outside the source"});
    }
  }
  if (!out.empty()) return out;

  for (const auto& g : f.source.generators()) {
    auto it = f.generators.find(g.name);
    if (it == f.generators.end()) {
      out.push_back({ErrorCode::UnknownGenerator, g.name.name(),
                     "generator map is not defined on this generator"});
      continue;
    }
    const GeneratorImage& image = it->second;
    const auto* target = f.target.find(image.generator);
    if (target == nullptr) {
      out.push_back({ErrorCode::UnknownGenerator, g.name.name(),
                     "image generator " + image.generator.name() +
                         " is not part of the target"});
      continue;
    }
    const Word dom = f.map_word(g.dom);
    const Word cod = f.map_word(g.cod);
    auto mismatch = [&](const char* what, const Word& expected, const Word& got) {
      out.push_back({ErrorCode::IllTyped, g.name.name(),
                     std::string(what) + " should be " + expected.to_string() +
                         " but is " + got.to_string()});
    };
    if (!(image.pre.source() == dom)) mismatch("pre-symmetry source", dom, image.pre.source());
    if (!(image.pre.target() == target->dom)) {
      mismatch("pre-symmetry target", target->dom, image.pre.target());
    }
    if (!(image.post.source() == target->cod)) {
      mismatch("post-symmetry source", target->cod, image.post.source());
    }
    if (!(image.post.target() == cod)) mismatch("post-symmetry target", cod, image.post.target());
  }
  return out;
}

void require_transition_preserving(const TPFunctor& f) {
  if (auto v = check_transition_preserving(f); !v.empty()) {
    throw Error(ErrorCode::InvalidFunctor, describe(v));
  }
}

TPFunctor identity_functor(const Presentation& p) {
  TPFunctor f{p, p, {}, {}};
  for (const auto& g : p.objects().elements()) f.objects.emplace(g, Word{g});
  for (const auto& g : p.generators()) {
    f.generators.emplace(g.name, GeneratorImage{Symmetry::identity(g.dom), g.name,
                                                 Symmetry::identity(g.cod)});
  }
  return f;
}

TPFunctor lift_net_morphism(const NetMorphism& f) {
  return lift_net_morphism(f, fold_net(f.source), fold_net(f.target));
}

TPFunctor lift_net_morphism(const NetMorphism& f, const Presentation& source,
                            const Presentation& target) {
  if (auto v = validate_morphism(f); !v.empty()) {
    throw Error(ErrorCode::InvalidMorphism, describe(v));
  }
  if (!(source == fold_net(f.source)) || !(target == fold_net(f.target))) {
    throw Error(ErrorCode::InvalidMorphism,
                "presentations are not the folds of the morphism's nets");
  }
  TPFunctor out{source, target, {}, {}};
  for (const auto& place : source.objects().elements()) {
    out.objects.emplace(place, linearize(f.places.image(place), target.objects()));
  }
  for (const auto& g : source.generators()) {
    const GeneratorId& image_name = f.transitions.at(g.name);
    const auto& image = target.generator(image_name);
    out.generators.emplace(
        g.name, GeneratorImage{swap_free_symmetry(out.map_word(g.dom), image.dom),
                               image_name,
                               swap_free_symmetry(image.cod, out.map_word(g.cod))});
  }
  return out;
}

TPFunctor tweak(const TPFunctor& f, const GeneratorId& generator,
                std::optional<Symmetry> pre, std::optional<Symmetry> post) {
  TPFunctor out = f;
  auto it = out.generators.find(generator);
  if (it == out.generators.end()) {
    throw Error(ErrorCode::UnknownGenerator,
                "functor has no image for generator " + generator.name());
  }
  if (pre) it->second.pre = std::move(*pre);
  if (post) it->second.post = std::move(*post);
  require_transition_preserving(out);
  return out;
}

Symmetry apply_functor_to_symmetry(const TPFunctor& f, const Symmetry& s) {
  const Word& src = s.source();
  const Word& tgt = s.target();
  const std::size_t n = src.size();

  std::vector<std::size_t> block_len(n);
  std::vector<std::size_t> src_offset(n + 1, 0);
  std::vector<std::size_t> tgt_offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    block_len[i] = f.map_word(Word{src[i]}).size();
    src_offset[i + 1] = src_offset[i] + block_len[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    tgt_offset[j + 1] = tgt_offset[j] + f.map_word(Word{tgt[j]}).size();
  }
  std::vector<std::size_t> perm(src_offset[n]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < block_len[i]; ++r) {
      perm[src_offset[i] + r] = tgt_offset[s.perm()[i]] + r;
    }
  }
  return Symmetry(f.map_word(src), std::move(perm));
}

TPFunctor compose_functors(const TPFunctor& f, const TPFunctor& g) {
  if (!(f.target == g.source)) {
    throw Error(ErrorCode::SourceTargetMismatch,
                "target of the first functor is not the source of the second");
  }
  TPFunctor out{f.source, g.target, {}, {}};
  for (const auto& [object, image] : f.objects) {
    out.objects.emplace(object, g.map_word(image));
  }
  for (const auto& [name, first] : f.generators) {
    auto it = g.generators.find(first.generator);
    if (it == g.generators.end()) {
      throw Error(ErrorCode::UnknownGenerator,
                  "second functor has no image for " + first.generator.name());
    }
    const GeneratorImage& second = it->second;
    out.generators.emplace(
        name, GeneratorImage{apply_functor_to_symmetry(g, first.pre).then(second.pre),
                             second.generator,
                             second.post.then(apply_functor_to_symmetry(g, first.post))});
  }
  return out;
}

Term apply_functor(const TPFunctor& f, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Identity:
      return Term::identity(f.map_word(t.word()));
    case Term::Kind::Braid:
      return Term::braid(f.map_word(t.word()), f.map_word(t.right_word()));
    case Term::Kind::Generator: {
      const auto& sig = t.signature();
      const auto& known = f.source.generator(sig.name);
      if (!(known == sig)) {
        throw Error(ErrorCode::IllTyped,
                    "generator " + sig.name.name() +
                        " does not match the functor's source presentation");
      }
      auto it = f.generators.find(sig.name);
      if (it == f.generators.end()) {
        throw Error(ErrorCode::UnknownGenerator,
                    "functor has no image for generator " + sig.name.name());
      }
      const GeneratorImage& image = it->second;
      return seq_all({symmetry_to_term(image.pre),
                      Term::generator(f.target, image.generator),
                      symmetry_to_term(image.post)});
    }
    case Term::Kind::Tensor:
      return tensor(apply_functor(f, t.left()), apply_functor(f, t.right()));
    case Term::Kind::Seq:
      return seq(apply_functor(f, t.left()), apply_functor(f, t.right()));
  }
  throw Error(ErrorCode::Internal, "unreachable term kind");
}

NetMorphism unfold_functor(const TPFunctor& f) {
  NetMorphism out{unfold_cat(f.source), unfold_cat(f.target), {}, {}};
  for (const auto& [object, image] : f.objects) {
    out.places.set(object, multiplicity(image));
  }
  for (const auto& [name, image] : f.generators) {
    out.transitions.emplace(name, image.generator);
  }
  return out;
}

}  // namespace petrifold
