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

// Symmetries: morphisms built from identities and braidings only. In a free
// symmetric monoidal category such a morphism is determined by where each
// wire ends up, so we store it as a permutation of positions.

#pragma once

#include <cstddef>
#include <vector>

#include "petrifold/algebra.hpp"
#include "petrifold/term.hpp"

namespace petrifold {

/// Wire i of `source` ends at position perm[i] of the target, so
/// target[perm[i]] == source[i].
class Symmetry {
 public:
  Symmetry() = default;
  /// Throws InvalidSymmetry unless `perm` is a bijection on positions.
  Symmetry(Word source, std::vector<std::size_t> perm);

  static Symmetry identity(Word w);
  /// The block braiding u v -> v u.
  static Symmetry braiding(const Word& u, const Word& v);

  const Word& source() const noexcept { return source_; }
  const Word& target() const noexcept { return target_; }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }
  bool is_identity() const;

  /// First this, then `next`. Throws NonComposable.
  Symmetry then(const Symmetry& next) const;
  Symmetry inverse() const;

  /// Routes values sitting on source wires to their target positions.
  template <typename T>
  std::vector<T> apply(const std::vector<T>& values) const {
    std::vector<T> out(values.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) out[perm_[i]] = values[i];
    return out;
  }

  bool operator==(const Symmetry& other) const {
    return source_ == other.source_ && perm_ == other.perm_;
  }

 private:
  Word source_;
  Word target_;
  std::vector<std::size_t> perm_;
};

/// id_prefix ⊗ sigma_{left,right} ⊗ id_suffix: one adjacent transposition.
struct BasicBlock {
  Word prefix;
  GeneratorId left;
  GeneratorId right;
  Word suffix;

  std::size_t position() const noexcept { return prefix.size(); }
  Word source() const;
  Word target() const;
  Symmetry to_symmetry() const;
  Term to_term() const;

  bool operator==(const BasicBlock&) const = default;
};

/// Basic block acting at `position` of `word`.
BasicBlock block_at(const Word& word, std::size_t position);

/// Composes a block sequence starting at `source`. Throws NonComposable.
Symmetry compose_blocks(const Word& source, const std::vector<BasicBlock>& blocks);

/// Adjacent transpositions in bubble-sort order, leftmost inversion first.
std::vector<BasicBlock> decompose(const Symmetry& s);

/// Throws NotASymmetry if `t` mentions a generator.
Symmetry symmetry_of_term(const Term& t);

/// Sequence of basic blocks realizing `s`; Identity(source) when `s` is the
/// identity.
Term symmetry_to_term(const Symmetry& s);

/// A generator tagged with its occurrence number.
struct LabeledSymbol {
  GeneratorId generator;
  unsigned occurrence;

  bool operator==(const LabeledSymbol&) const = default;
};

using LabeledWord = std::vector<LabeledSymbol>;

/// The k-th occurrence (from the left, counting from 1) of each generator
/// becomes (g, k).
LabeledWord label_word(const Word& w);

struct LabeledBlock {
  LabeledWord prefix;
  LabeledSymbol left;
  LabeledSymbol right;
  LabeledWord suffix;

  bool operator==(const LabeledBlock&) const = default;
};

/// Labels the first block's source with label_word and threads the labels
/// through the remaining blocks. Throws NonComposable at the first block
/// whose source is not the previous target.
std::vector<LabeledBlock> lift_decomposition(const std::vector<BasicBlock>& blocks);

/// Equal-labeled wires never change their relative order. Crossings of a
/// fixed wire pair have the same parity in every decomposition, so this
/// agrees with counting labeled crossings over all decompositions.
bool is_swap_free(const Symmetry& s);

/// The unique swap-free symmetry u -> v: the k-th occurrence of each label
/// in u is wired to the k-th occurrence in v. Throws NotAnagrams.
Symmetry swap_free_symmetry(const Word& u, const Word& v);

inline constexpr std::size_t kMaxEnumerationLength = 8;

/// All symmetries u -> v, ordered lexicographically by permutation. Empty
/// when u and v are not anagrams. Throws TooLarge past kMaxEnumerationLength.
std::vector<Symmetry> enumerate_symmetries(const Word& u, const Word& v);

}  // namespace petrifold
