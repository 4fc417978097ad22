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

#include "petrifold/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace petrifold {

Symmetry::Symmetry(Word source, std::vector<std::size_t> perm)
    : source_(std::move(source)), perm_(std::move(perm)) {
  if (perm_.size() != source_.size()) {
    throw Error(ErrorCode::InvalidSymmetry,
                "permutation has " + std::to_string(perm_.size()) +
                    " entries for a word of length " +
                    std::to_string(source_.size()));
  }
  std::vector<GeneratorId> target(source_.size(), GeneratorId("_"));
  std::vector<bool> hit(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || hit[perm_[i]]) {
      throw Error(ErrorCode::InvalidSymmetry, "not a permutation of positions");
    }
    hit[perm_[i]] = true;
    target[perm_[i]] = source_[i];
  }
  target_ = Word(std::move(target));
}

Symmetry Symmetry::identity(Word w) {
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  return Symmetry(std::move(w), std::move(perm));
}

Symmetry Symmetry::braiding(const Word& u, const Word& v) {
  std::vector<std::size_t> perm(u.size() + v.size());
  for (std::size_t i = 0; i < u.size(); ++i) perm[i] = v.size() + i;
  for (std::size_t j = 0; j < v.size(); ++j) perm[u.size() + j] = j;
  return Symmetry(u + v, std::move(perm));
}

bool Symmetry::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

Symmetry Symmetry::then(const Symmetry& next) const {
  if (!(target_ == next.source_)) {
    throw Error(ErrorCode::NonComposable,
                "symmetry ending at " + target_.to_string() +
                    " cannot be followed by one starting at " +
                    next.source_.to_string());
  }
  std::vector<std::size_t> perm(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) perm[i] = next.perm_[perm_[i]];
  return Symmetry(source_, std::move(perm));
}

Symmetry Symmetry::inverse() const {
  std::vector<std::size_t> perm(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) perm[perm_[i]] = i;
  return Symmetry(target_, std::move(perm));
}

// ---------------------------------------------------------------------------

Word BasicBlock::source() const {
  Word w = prefix;
  w.push_back(left);
  w.push_back(right);
  return w + suffix;
}

Word BasicBlock::target() const {
  Word w = prefix;
  w.push_back(right);
  w.push_back(left);
  return w + suffix;
}

Symmetry BasicBlock::to_symmetry() const {
  std::vector<std::size_t> perm(prefix.size() + 2 + suffix.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[position()], perm[position() + 1]);
  return Symmetry(source(), std::move(perm));
}

Term BasicBlock::to_term() const {
  std::vector<Term> factors;
  if (!prefix.empty()) factors.push_back(Term::identity(prefix));
  factors.push_back(Term::braid(Word{left}, Word{right}));
  if (!suffix.empty()) factors.push_back(Term::identity(suffix));
  return tensor_all(factors);
}

BasicBlock block_at(const Word& word, std::size_t position) {
  if (position + 1 >= word.size()) {
    throw Error(ErrorCode::InvalidSymmetry, "basic block position out of range");
  }
  return BasicBlock{word.slice(0, position), word[position], word[position + 1],
                    word.slice(position + 2, word.size() - position - 2)};
}

Symmetry compose_blocks(const Word& source, const std::vector<BasicBlock>& blocks) {
  Symmetry out = Symmetry::identity(source);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!(blocks[i].source() == out.target())) {
      throw Error(ErrorCode::NonComposable,
                  "block " + std::to_string(i) + " does not start where block " +
                      std::to_string(i == 0 ? 0 : i - 1) + " ends");
    }
    out = out.then(blocks[i].to_symmetry());
  }
  return out;
}

std::vector<BasicBlock> decompose(const Symmetry& s) {
  std::vector<BasicBlock> out;
  Word current = s.source();
  std::vector<GeneratorId> symbols = current.symbols();
  std::vector<std::size_t> destination = s.perm();
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < destination.size() && destination[k] < destination[k + 1]) ++k;
    if (k + 1 >= destination.size()) break;
    out.push_back(block_at(Word(symbols), k));
    std::swap(symbols[k], symbols[k + 1]);
    std::swap(destination[k], destination[k + 1]);
  }
  return out;
}

namespace {

// Which source wire sits at each output position of `t`.
std::vector<std::size_t> route(const Term& t, std::vector<std::size_t> wires) {
  switch (t.kind()) {
    case Term::Kind::Identity:
      return wires;
    case Term::Kind::Braid: {
      auto split = wires.begin() + static_cast<std::ptrdiff_t>(t.word().size());
      std::rotate(wires.begin(), split, wires.end());
      return wires;
    }
    case Term::Kind::Generator:
      throw Error(ErrorCode::NotASymmetry,
                  "term mentions generator " + t.signature().name.name());
    case Term::Kind::Tensor: {
      auto split = wires.begin() + static_cast<std::ptrdiff_t>(t.left().dom().size());
      auto left = route(t.left(), std::vector<std::size_t>(wires.begin(), split));
      auto right = route(t.right(), std::vector<std::size_t>(split, wires.end()));
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    case Term::Kind::Seq:
      return route(t.right(), route(t.left(), std::move(wires)));
  }
  return wires;
}

}  // namespace

Symmetry symmetry_of_term(const Term& t) {
  std::vector<std::size_t> wires(t.dom().size());
  std::iota(wires.begin(), wires.end(), 0);
  auto at = route(t, std::move(wires));
  std::vector<std::size_t> perm(at.size());
  for (std::size_t j = 0; j < at.size(); ++j) perm[at[j]] = j;
  return Symmetry(t.dom(), std::move(perm));
}

Term symmetry_to_term(const Symmetry& s) {
  auto blocks = decompose(s);
  if (blocks.empty()) return Term::identity(s.source());
  std::vector<Term> stages;
  stages.reserve(blocks.size());
  for (const auto& b : blocks) stages.push_back(b.to_term());
  return seq_all(stages);
}

// ---------------------------------------------------------------------------

LabeledWord label_word(const Word& w) {
  std::map<GeneratorId, unsigned> seen;
  LabeledWord out;
  out.reserve(w.size());
  for (const auto& g : w) out.push_back({g, ++seen[g]});
  return out;
}

std::vector<LabeledBlock> lift_decomposition(const std::vector<BasicBlock>& blocks) {
  std::vector<LabeledBlock> out;
  if (blocks.empty()) return out;
  Word current = blocks.front().source();
  LabeledWord labels = label_word(current);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (!(b.source() == current)) {
      throw Error(ErrorCode::NonComposable,
                  "block " + std::to_string(i) + " starts at " +
                      b.source().to_string() + " but the previous block ends at " +
                      current.to_string());
    }
    const std::size_t k = b.position();
    out.push_back(LabeledBlock{
        LabeledWord(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(k)),
        labels[k], labels[k + 1],
        LabeledWord(labels.begin() + static_cast<std::ptrdiff_t>(k + 2), labels.end())});
    std::swap(labels[k], labels[k + 1]);
    current = b.target();
  }
  return out;
}

bool is_swap_free(const Symmetry& s) {
  const auto& src = s.source();
  const auto& perm = s.perm();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (src[i] == src[j] && perm[i] > perm[j]) return false;
    }
  }
  return true;
}

Symmetry swap_free_symmetry(const Word& u, const Word& v) {
  if (!(multiplicity(u) == multiplicity(v))) {
    std::ostringstream os;
    os << "no symmetry between " << u << " and " << v << ": multiplicities "
       << multiplicity(u) << " and " << multiplicity(v) << " differ";
    throw Error(ErrorCode::NotAnagrams, os.str());
  }
  std::map<GeneratorId, std::deque<std::size_t>> slots;
  for (std::size_t j = 0; j < v.size(); ++j) slots[v[j]].push_back(j);
  std::vector<std::size_t> perm(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto& queue = slots[u[i]];
    perm[i] = queue.front();
    queue.pop_front();
  }
  return Symmetry(u, std::move(perm));
}

namespace {

void enumerate_from(const Word& u, const Word& v, std::size_t i,
                    std::vector<std::size_t>& perm, std::vector<bool>& used,
                    std::vector<Symmetry>& out) {
  if (i == u.size()) {
    out.emplace_back(u, perm);
    return;
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (used[j] || !(v[j] == u[i])) continue;
    used[j] = true;
    perm[i] = j;
    enumerate_from(u, v, i + 1, perm, used, out);
    used[j] = false;
  }
}

}  // namespace

std::vector<Symmetry> enumerate_symmetries(const Word& u, const Word& v) {
  if (u.size() > kMaxEnumerationLength || v.size() > kMaxEnumerationLength) {
    throw Error(ErrorCode::TooLarge,
                "symmetry enumeration is limited to words of length " +
                    std::to_string(kMaxEnumerationLength));
  }
  std::vector<Symmetry> out;
  if (u.size() != v.size() || !(multiplicity(u) == multiplicity(v))) return out;
  std::vector<std::size_t> perm(u.size());
  std::vector<bool> used(v.size(), false);
  enumerate_from(u, v, 0, perm, used, out);
  return out;
}

}  // namespace petrifold
