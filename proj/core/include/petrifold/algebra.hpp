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

// Free monoids (words) and free commutative monoids (multisets) over named
// generators, plus the maps between them.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "petrifold/error.hpp"

namespace petrifold {

/// Name of a generator (a place, an object generator). Names are nonempty
/// and contain no whitespace. All-digit names are numeric aliases: they sort
/// numerically and before every non-numeric name, which keeps the order total.
class GeneratorId {
 public:
  GeneratorId(std::string name);
  GeneratorId(const char* name) : GeneratorId(std::string(name)) {}
  static GeneratorId number(std::uint64_t value);

  const std::string& name() const noexcept { return name_; }
  bool is_numeric() const noexcept { return numeric_; }

  friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
    return a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const GeneratorId& a,
                                          const GeneratorId& b);

 private:
  std::string name_;
  bool numeric_ = false;
};

std::ostream& operator<<(std::ostream& os, const GeneratorId& g);

using Count = std::uint64_t;

/// Finite multiset. Zero counts are never stored, so structural equality is
/// multiset equality.
class Multiset {
 public:
  using Entries = std::map<GeneratorId, Count>;

  Multiset() = default;
  Multiset(std::initializer_list<std::pair<const GeneratorId, Count>> entries);

  /// Throws Overflow if the count would exceed the machine bound.
  void add(const GeneratorId& g, Count n = 1);

  Count count(const GeneratorId& g) const;
  /// Total number of elements, with repetitions.
  Count size() const;
  bool empty() const noexcept { return entries_.empty(); }
  const Entries& entries() const noexcept { return entries_; }
  std::vector<GeneratorId> support() const;

  /// Pointwise <=.
  bool contained_in(const Multiset& other) const;

  Multiset& operator+=(const Multiset& other);
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }

  /// Pointwise difference; requires `other` to be contained in `*this`.
  Multiset minus(const Multiset& other) const;

  bool operator==(const Multiset&) const = default;

 private:
  Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const Multiset& m);

/// Finite string of generators; the empty word is the monoidal unit.
class Word {
 public:
  using value_type = GeneratorId;
  using const_iterator = std::vector<GeneratorId>::const_iterator;

  Word() = default;
  Word(std::initializer_list<GeneratorId> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<GeneratorId> symbols)
      : symbols_(std::move(symbols)) {}

  /// One generator per character: from_chars("aab") == {a, a, b}.
  static Word from_chars(std::string_view chars);
  /// Whitespace-separated names: parse("p1 p2 p2").
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const GeneratorId& operator[](std::size_t i) const { return symbols_[i]; }
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  const std::vector<GeneratorId>& symbols() const noexcept { return symbols_; }

  void push_back(GeneratorId g) { symbols_.push_back(std::move(g)); }
  Word slice(std::size_t pos, std::size_t len) const;
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  std::string to_string() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<GeneratorId> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Multiset homomorphism given by its values on generators.
class MultisetHom {
 public:
  using Images = std::map<GeneratorId, Multiset>;

  MultisetHom() = default;
  explicit MultisetHom(Images images) : images_(std::move(images)) {}

  static MultisetHom identity(const std::vector<GeneratorId>& generators);

  void set(const GeneratorId& g, Multiset image) {
    images_[g] = std::move(image);
  }
  bool defined_on(const GeneratorId& g) const { return images_.count(g) != 0; }
  /// Throws UnknownGenerator.
  const Multiset& image(const GeneratorId& g) const;
  const Images& images() const noexcept { return images_; }

  /// First this, then `next`.
  MultisetHom then(const MultisetHom& next) const;

  bool operator==(const MultisetHom&) const = default;

 private:
  Images images_;
};

/// A total order on a finite set of generators. Defaults to the natural
/// GeneratorId order; an explicit sequence overrides it.
class PlaceOrder {
 public:
  PlaceOrder() = default;
  /// Sorted by the default order; duplicates are merged.
  static PlaceOrder natural(std::vector<GeneratorId> elements);
  /// Uses the given sequence as the order. Throws DuplicateName.
  static PlaceOrder explicit_order(std::vector<GeneratorId> sequence);

  bool contains(const GeneratorId& g) const { return rank_.count(g.name()) != 0; }
  /// Throws UnknownGenerator.
  std::size_t rank(const GeneratorId& g) const;
  bool less(const GeneratorId& a, const GeneratorId& b) const {
    return rank(a) < rank(b);
  }
  const std::vector<GeneratorId>& elements() const noexcept {
    return elements_;
  }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_natural() const;

  bool operator==(const PlaceOrder& other) const {
    return elements_ == other.elements_;
  }

 private:
  std::vector<GeneratorId> elements_;
  std::unordered_map<std::string, std::size_t> rank_;
};

Multiset multiplicity(const Word& w);

/// The monotone word whose multiplicity is `m`. Throws UnknownGenerator
/// if the support leaves the order's domain.
Word linearize(const Multiset& m, const PlaceOrder& order);

/// Stable sort of `w` under `order`.
Word sort_word(const Word& w, const PlaceOrder& order);

/// Additive extension of `h`. Throws UnknownGenerator.
Multiset apply_hom(const MultisetHom& h, const Multiset& m);

/// True iff every generator image is a singleton with count one.
bool hom_is_grounded(const MultisetHom& h);

}  // namespace petrifold

template <>
struct std::hash<petrifold::GeneratorId> {
  std::size_t operator()(const petrifold::GeneratorId& g) const noexcept {
    return std::hash<std::string>{}(g.name());
  }
};
