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

#include "petrifold/checks.hpp"

#include <functional>
#include <optional>

#include "petrifold/correspondence.hpp"
#include "petrifold/diagram.hpp"
#include "petrifold/interp.hpp"
#include "petrifold/numlist.hpp"
#include "petrifold/session.hpp"

namespace petrifold {

namespace sp = sampling;

std::vector<EquationInstance> smc_equation_instances(sp::Rng& rng, const Presentation& p,
                                                     const sp::TermShape& shape) {
  // Pieces get a share of the wire and event budget so that every side of
  // every instance stays inside `shape`.
  sp::TermShape piece = shape;
  piece.max_wires = std::max<std::size_t>(shape.max_wires / 3, 1);
  piece.max_events = std::max<std::size_t>(shape.max_events / 3, 1);
  piece.max_stages = 3;
  const auto& alphabet = p.objects().elements();
  auto random_word = [&] { return sp::word(rng, alphabet, sp::uniform(rng, 0, piece.max_wires / 2 + 1)); };
  auto from = [&](const Word& dom) { return sp::term(rng, p, dom, piece); };

  const Term alpha = from(random_word());
  const Term beta = from(alpha.cod());
  const Term gamma = from(beta.cod());
  const Term alpha1 = from(random_word());
  const Term alpha2 = from(random_word());
  // The interchange law uses four pieces; its second column gets what the
  // first leaves of the event budget.
  sp::TermShape small = piece;
  small.max_events = (shape.max_events - std::min(shape.max_events, 2 * piece.max_events)) / 2;
  const Term gamma1 = sp::term(rng, p, random_word(), small);
  const Term delta1 = sp::term(rng, p, gamma1.cod(), small);
  const Word a = random_word(), a1 = random_word(), a2 = random_word();
  const Term unit = Term::identity({});

  std::vector<EquationInstance> out;
  out.push_back({"seq-right-unit", seq(alpha, Term::identity(alpha.cod())), alpha});
  out.push_back({"seq-left-unit", seq(Term::identity(alpha.dom()), alpha), alpha});
  out.push_back({"seq-assoc", seq(seq(alpha, beta), gamma), seq(alpha, seq(beta, gamma))});
  out.push_back({"tensor-left-unit", tensor(unit, alpha), alpha});
  out.push_back({"tensor-right-unit", tensor(alpha, unit), alpha});
  out.push_back({"tensor-assoc", tensor(tensor(alpha, alpha1), alpha2),
                 tensor(alpha, tensor(alpha1, alpha2))});
  out.push_back({"id-tensor", tensor(Term::identity(a), Term::identity(a1)), Term::identity(a + a1)});
  out.push_back({"interchange", seq(tensor(alpha, gamma1), tensor(beta, delta1)),
                 tensor(seq(alpha, beta), seq(gamma1, delta1))});
  out.push_back({"hexagon", Term::braid(a, a1 + a2),
                 seq(tensor(Term::braid(a, a1), Term::identity(a2)),
                     tensor(Term::identity(a1), Term::braid(a, a2)))});
  out.push_back({"braid-involution", seq(Term::braid(a, a1), Term::braid(a1, a)),
                 Term::identity(a + a1)});
  out.push_back({"braid-naturality", seq(Term::braid(alpha.dom(), alpha1.dom()), tensor(alpha1, alpha)),
                 seq(tensor(alpha, alpha1), Term::braid(alpha.cod(), alpha1.cod()))});
  return out;
}

namespace {

using Case = std::function<std::optional<std::string>(sp::Rng&)>;

CheckResult run(const std::string& name, std::size_t cases, sp::Rng& rng, const Case& body) {
  CheckResult r{name, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    try {
      if (auto failure = body(rng)) {
        r.failure = "case " + std::to_string(i) + ": " + *failure;
        break;
      }
    } catch (const Error& e) {
      r.failure = "case " + std::to_string(i) + ": " + std::string(to_string(e.code())) + ": " + e.what();
      break;
    }
  }
  return r;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, std::size_t scale) {
  sp::Rng rng(seed);
  std::vector<CheckResult> out;

  out.push_back(run("fold-unfold", 200 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const PetriNet n = sp::net(r);
    if (!(unfold_cat(fold_net(n)) == n)) return "unfold(fold(n)) differs from n";
    return std::nullopt;
  }));

  out.push_back(run("numlist-roundtrip", 200 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    sp::NetShape shape;
    shape.numeric_places = true;
    shape.connected_places_only = true;
    const PetriNet n = sp::net(r, shape);
    const NumList values = emit_numlist(n);
    if (!(parse_numlist(values) == n)) return "parse(emit(n)) differs from n: " + write_numlist(values);
    if (emit_numlist(parse_numlist(values)) != values) return "emit(parse(l)) differs from l";
    return std::nullopt;
  }));

  out.push_back(run("symmetry-uniqueness", 200 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const Word u = sp::word(r, sp::letters(3), sp::uniform(r, 0, 5));
    const Word v = sp::symmetry(r, u).target();
    const auto all = enumerate_symmetries(u, v);
    std::size_t expected = 1;
    const Multiset mu = multiplicity(u);
    for (const auto& [g, c] : mu.entries()) expected *= factorial(c);
    if (all.size() != expected) return "wrong count for " + u.to_string() + " -> " + v.to_string();
    std::size_t swap_free = 0;
    for (const auto& s : all) swap_free += is_swap_free(s) ? 1 : 0;
    if (swap_free != 1) return "not exactly one swap-free symmetry";
    const Symmetry unique = swap_free_symmetry(u, v);
    for (const auto& s : all) {
      if (is_swap_free(s) && !(s == unique)) return "swap_free_symmetry disagrees with enumeration";
    }
    return std::nullopt;
  }));

  out.push_back(run("swap-free-closure", 300 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const Word u = sp::word(r, sp::letters(3), sp::uniform(r, 0, 7));
    const Symmetry s = sp::swap_free(r, u);
    const Symmetry t = sp::swap_free(r, s.target());
    if (!is_swap_free(s.then(t))) return "composite of swap-free symmetries is not swap-free";
    return std::nullopt;
  }));

  out.push_back(run("lift", 200 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const PetriNet n = sp::net(r);
    const NetMorphism f = sp::morphism(r, n, sp::PlaceMap::Any);
    const TPFunctor lifted = lift_net_morphism(f);
    if (const auto v = check_transition_preserving(lifted); !v.empty()) return describe(v);
    if (!(unfold_functor(lifted) == f)) return "unfold(lift f) differs from f";
    return std::nullopt;
  }));

  out.push_back(run("functor-composition", 200 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const PetriNet n = sp::net(r);
    const NetMorphism f = sp::morphism(r, n, sp::PlaceMap::Any);
    const NetMorphism g = sp::morphism(r, f.target, sp::PlaceMap::Any);
    const TPFunctor fg = compose_functors(lift_net_morphism(f), lift_net_morphism(g));
    if (const auto v = check_transition_preserving(fg); !v.empty()) return describe(v);
    if (!(unfold_functor(fg) == compose_net_morphisms(f, g))) {
      return "unfold(F;G) differs from unfold(F);unfold(G)";
    }
    return std::nullopt;
  }));

  out.push_back(run("smc-equations", 100 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const Presentation p = sp::presentation(r);
    for (const auto& eq : smc_equation_instances(r, p, {})) {
      if (!mor_eq(eq.lhs, eq.rhs)) return eq.law + ": " + eq.lhs.to_string() + " vs " + eq.rhs.to_string();
    }
    return std::nullopt;
  }));

  out.push_back(run("symmetry-evaluation", 200 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const Word u = sp::word(r, sp::letters(2), sp::uniform(r, 0, 5));
    const Symmetry s = sp::symmetry(r, u);
    Tuple input(u.size());
    for (auto& x : input) x = static_cast<Value>(sp::uniform(r, 0, 100));
    const Tuple out = eval_morphism(SemAssignment{}, symmetry_to_term(s), input);
    if (out != s.apply(input)) return "symmetry does not evaluate to its permutation";
    return std::nullopt;
  }));

  out.push_back(run("session-bookkeeping", 100 * scale, rng, [](sp::Rng& r) -> std::optional<std::string> {
    const PetriNet n = sp::net(r);
    Marking m = sp::multiset(r, n.places().elements(), 6);
    Session s(n, m);
    for (int step = 0; step < 8; ++step) {
      const auto enabled = s.enabled();
      if (enabled.empty()) break;
      const auto& t = enabled[sp::uniform(r, 0, enabled.size() - 1)];
      s.fire(t);
      m = fire(n, m, t);
      if (!(multiplicity(s.history().cod()) == m)) return "history boundary drifted from the marking";
      if (sp::uniform(r, 0, 4) == 0) {
        s.undo();
        m = s.marking();
      }
    }
    s.check_invariants();
    return std::nullopt;
  }));

  return out;
}

}  // namespace petrifold
