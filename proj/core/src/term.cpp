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

#include "petrifold/term.hpp"

#include <optional>
#include <set>

namespace petrifold {

namespace detail {

struct TermNode {
  Term::Kind kind;
  Word dom;
  Word cod;
  Word a;  // identity word / braid left
  Word b;  // braid right
  std::optional<GeneratorSignature> signature;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t events = 0;
};

}  // namespace detail

using detail::TermNode;

const GeneratorSignature* Presentation::find(const GeneratorId& name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const GeneratorSignature& Presentation::generator(const GeneratorId& name) const {
  if (const auto* g = find(name)) return *g;
  throw Error(ErrorCode::UnknownGenerator, "unknown morphism generator " + name.name());
}

bool operator==(const Presentation& a, const Presentation& b) {
  if (!(a.objects_ == b.objects_)) return false;
  if (a.generators_.size() != b.generators_.size()) return false;
  for (const auto& g : a.generators_) {
    const auto* other = b.find(g.name);
    if (other == nullptr || !(*other == g)) return false;
  }
  return true;
}

Violations validate_presentation(const Presentation& p) {
  Violations out;
  std::set<GeneratorId> seen;
  for (const auto& g : p.generators()) {
    if (!seen.insert(g.name).second) {
      out.push_back({ErrorCode::DuplicateName, g.name.name(),
                     "morphism generator declared twice"});
    }
    for (const Word* w : {&g.dom, &g.cod}) {
      for (const auto& s : *w) {
        if (!p.objects().contains(s)) {
          out.push_back({ErrorCode::UnknownGenerator, g.name.name(),
                         "boundary mentions unknown object " + s.name()});
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Term Term::identity(Word w) {
  auto node = std::make_shared<TermNode>();
  node->kind = Kind::Identity;
  node->dom = w;
  node->cod = w;
  node->a = std::move(w);
  return Term(std::move(node));
}

Term Term::braid(Word u, Word v) {
  auto node = std::make_shared<TermNode>();
  node->kind = Kind::Braid;
  node->dom = u + v;
  node->cod = v + u;
  node->a = std::move(u);
  node->b = std::move(v);
  return Term(std::move(node));
}

Term Term::generator(GeneratorSignature signature) {
  auto node = std::make_shared<TermNode>();
  node->kind = Kind::Generator;
  node->dom = signature.dom;
  node->cod = signature.cod;
  node->signature = std::move(signature);
  node->events = 1;
  return Term(std::move(node));
}

Term Term::generator(const Presentation& p, const GeneratorId& name) {
  return generator(p.generator(name));
}

Term seq(const Term& first, const Term& second) {
  if (!(first.cod() == second.dom())) {
    throw Error(ErrorCode::TypeMismatch,
                "cannot compose: codomain " + first.cod().to_string() +
                    " differs from domain " + second.dom().to_string());
  }
  auto node = std::make_shared<TermNode>();
  node->kind = Term::Kind::Seq;
  node->dom = first.dom();
  node->cod = second.cod();
  node->events = first.event_count() + second.event_count();
  node->left = first;
  node->right = second;
  return Term(std::move(node));
}

Term tensor(const Term& left, const Term& right) {
  auto node = std::make_shared<TermNode>();
  node->kind = Term::Kind::Tensor;
  node->dom = left.dom() + right.dom();
  node->cod = left.cod() + right.cod();
  node->events = left.event_count() + right.event_count();
  node->left = left;
  node->right = right;
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }
const Word& Term::dom() const { return node_->dom; }
const Word& Term::cod() const { return node_->cod; }
const Word& Term::word() const { return node_->a; }
const Word& Term::right_word() const { return node_->b; }
std::size_t Term::event_count() const { return node_->events; }

const GeneratorSignature& Term::signature() const {
  if (!node_->signature) {
    throw Error(ErrorCode::Internal, "signature() on a non-generator term");
  }
  return *node_->signature;
}

const Term& Term::left() const {
  if (!node_->left) throw Error(ErrorCode::Internal, "left() on a leaf term");
  return *node_->left;
}

const Term& Term::right() const {
  if (!node_->right) throw Error(ErrorCode::Internal, "right() on a leaf term");
  return *node_->right;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::Identity:
      return "id(" + word().to_string() + ")";
    case Kind::Braid:
      return "σ(" + word().to_string() + ", " + right_word().to_string() + ")";
    case Kind::Generator:
      return signature().name.name();
    case Kind::Tensor:
      return "(" + left().to_string() + " ⊗ " + right().to_string() + ")";
    case Kind::Seq:
      return "(" + left().to_string() + " ; " + right().to_string() + ")";
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Identity:
      return a.word() == b.word();
    case Term::Kind::Braid:
      return a.word() == b.word() && a.right_word() == b.right_word();
    case Term::Kind::Generator:
      return a.signature() == b.signature();
    case Term::Kind::Tensor:
    case Term::Kind::Seq:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Term seq_all(const std::vector<Term>& stages) {
  if (stages.empty()) throw Error(ErrorCode::Internal, "seq_all of nothing");
  Term out = stages.front();
  for (std::size_t i = 1; i < stages.size(); ++i) out = seq(out, stages[i]);
  return out;
}

Term tensor_all(const std::vector<Term>& factors) {
  if (factors.empty()) return Term::identity({});
  Term out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

namespace {

void check_objects(const Word& w, const Presentation& p, Violations& out) {
  for (const auto& s : w) {
    if (!p.objects().contains(s)) {
      out.push_back({ErrorCode::UnknownGenerator, s.name(),
                     "object is not a generator of the presentation"});
    }
  }
}

void check_term_rec(const Term& t, const Presentation& p, Violations& out) {
  switch (t.kind()) {
    case Term::Kind::Identity:
      check_objects(t.word(), p, out);
      return;
    case Term::Kind::Braid:
      check_objects(t.word(), p, out);
      check_objects(t.right_word(), p, out);
      return;
    case Term::Kind::Generator: {
      const auto& sig = t.signature();
      const auto* known = p.find(sig.name);
      if (known == nullptr) {
        out.push_back({ErrorCode::UnknownGenerator, sig.name.name(),
                       "generator is not part of the presentation"});
      } else if (!(*known == sig)) {
        out.push_back({ErrorCode::IllTyped, sig.name.name(),
                       "generator used with type " + sig.dom.to_string() +
                           " -> " + sig.cod.to_string() +
                           " but declared " + known->dom.to_string() +
                           " -> " + known->cod.to_string()});
      }
      return;
    }
    case Term::Kind::Tensor:
    case Term::Kind::Seq:
      check_term_rec(t.left(), p, out);
      check_term_rec(t.right(), p, out);
      return;
  }
}

}  // namespace

Violations check_term(const Term& t, const Presentation& p) {
  Violations out;
  check_term_rec(t, p, out);
  return out;
}

}  // namespace petrifold
