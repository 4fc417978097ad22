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

// Presentations of free strict symmetric monoidal categories and the
// morphism terms they generate.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "petrifold/algebra.hpp"
#include "petrifold/error.hpp"

namespace petrifold {

/// A morphism generator `name : dom -> cod`.
struct GeneratorSignature {
  GeneratorId name;
  Word dom;
  Word cod;

  bool operator==(const GeneratorSignature&) const = default;
};

/// Object generators (ordered) plus morphism generators.
class Presentation {
 public:
  Presentation() = default;
  Presentation(PlaceOrder objects, std::vector<GeneratorSignature> generators)
      : objects_(std::move(objects)), generators_(std::move(generators)) {}

  const PlaceOrder& objects() const noexcept { return objects_; }
  const std::vector<GeneratorSignature>& generators() const noexcept {
    return generators_;
  }

  const GeneratorSignature* find(const GeneratorId& name) const;
  /// Throws UnknownGenerator.
  const GeneratorSignature& generator(const GeneratorId& name) const;

  /// Generator order is irrelevant for equality.
  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  PlaceOrder objects_;
  std::vector<GeneratorSignature> generators_;
};

Violations validate_presentation(const Presentation& p);

namespace detail {
struct TermNode;
}

/// Immutable morphism term. Terms are typed on construction: `seq` refuses
/// mismatched boundaries, so every Term value is well-typed. Subterms are
/// shared, so copies are cheap.
class Term {
 public:
  enum class Kind { Identity, Braid, Generator, Tensor, Seq };

  static Term identity(Word w);
  /// The braiding sigma_{u,v} : u v -> v u.
  static Term braid(Word u, Word v);
  static Term generator(GeneratorSignature signature);
  /// Throws UnknownGenerator.
  static Term generator(const Presentation& p, const GeneratorId& name);

  Kind kind() const;
  const Word& dom() const;
  const Word& cod() const;

  /// Identity: the word; Braid: the left block.
  const Word& word() const;
  /// Braid only: the right block.
  const Word& right_word() const;
  /// Generator only.
  const GeneratorSignature& signature() const;
  /// Tensor: left/right factors. Seq: first/second stages.
  const Term& left() const;
  const Term& right() const;

  /// Number of generator occurrences.
  std::size_t event_count() const;

  std::string to_string() const;

  /// Syntactic equality. Use mor_eq for equality of morphisms.
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node)
      : node_(std::move(node)) {}
  friend Term seq(const Term& first, const Term& second);
  friend Term tensor(const Term& left, const Term& right);

  std::shared_ptr<const detail::TermNode> node_;
};

/// Sequential composite. Throws TypeMismatch if cod(first) != dom(second).
Term seq(const Term& first, const Term& second);
Term tensor(const Term& left, const Term& right);

/// Left-nested composite of a nonempty list.
Term seq_all(const std::vector<Term>& stages);
Term tensor_all(const std::vector<Term>& factors);

/// Checks that every generator occurrence exists in `p` with the same
/// signature and that every object is a generator of `p`.
Violations check_term(const Term& t, const Presentation& p);

}  // namespace petrifold
