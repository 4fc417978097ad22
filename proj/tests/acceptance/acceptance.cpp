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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "petrifold/checks.hpp"
#include "petrifold/correspondence.hpp"
#include "petrifold/diagram.hpp"
#include "petrifold/interp.hpp"
#include "petrifold/numlist.hpp"
#include "petrifold/sampling.hpp"
#include "petrifold/session.hpp"
#include "petrifold/symmetry.hpp"

using namespace petrifold;
namespace sp = petrifold::sampling;

namespace {

constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Tally {
 public:
  void fail(const std::string& why) {
    if (failures_++ == 0) first_ = why;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void count(std::size_t n = 1) { cases_ += n; }

  Outcome outcome(const std::string& what) const {
    std::ostringstream s;
    s << cases_ << " " << what << ", " << failures_ << " mismatches";
    if (failures_ != 0) s << "; first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

PetriNet relay_net() {
  const GeneratorId p1("p1"), p2("p2"), p3("p3"), p4("p4");
  return PetriNet(PlaceOrder::natural({p1, p2, p3, p4}),
                  {{GeneratorId("t"), {{p1, 1}}, {{p2, 1}}},
                   {GeneratorId("v"), {{p2, 1}}, {{p3, 1}, {p4, 1}}},
                   {GeneratorId("u"), {{p3, 1}}, {{p4, 1}}}});
}

std::vector<Count> counts(const PetriNet& n, const Marking& m) {
  std::vector<Count> out;
  for (const auto& p : n.places().elements()) out.push_back(m.count(p));
  return out;
}

// Frozen from the four marking columns of the example execution.
Outcome golden_execution() {
  const PetriNet n = relay_net();
  const auto& places = n.places().elements();
  Session s(n, {{places[0], 1}, {places[1], 1}, {places[2], 2}});
  const std::vector<std::vector<Count>> expected = {{0, 2, 2, 0}, {0, 1, 3, 1}, {0, 1, 2, 2}};
  Tally t;
  const char* steps[] = {"t", "v", "u"};
  for (std::size_t i = 0; i < 3; ++i) {
    s.fire(GeneratorId(steps[i]));
    t.count();
    t.check(counts(n, s.marking()) == expected[i], std::string("marking after ") + steps[i]);
  }
  // The history boundary, counted symbol by symbol.
  const auto boundary = oracle::counts(s.history().cod());
  const std::map<std::string, std::size_t> final_marking = {{"p2", 1}, {"p3", 2}, {"p4", 2}};
  t.count();
  t.check(boundary == final_marking, "multiplicity of the history codomain");
  t.check(oracle::counts(s.history().dom()) ==
              std::map<std::string, std::size_t>{{"p1", 1}, {"p2", 1}, {"p3", 2}},
          "history domain");
  return t.outcome("checks (3 markings + boundary)");
}

Outcome fold_unfold_roundtrip() {
  sp::Rng rng(kSeed + 1);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    sp::NetShape shape;
    shape.max_places = 6;
    shape.max_transitions = 5;
    shape.max_arc = 4;
    const PetriNet n = sp::net(rng, shape);
    std::string why;
    t.count();
    t.check(oracle::same_net(unfold_cat(fold_net(n)), n, &why), why);
  }
  return t.outcome("random nets");
}

Outcome symmetry_uniqueness() {
  const auto alphabet = sp::letters(3);
  Tally t;
  for (std::size_t len = 0; len <= 6; ++len) {
    std::vector<Word> words;
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<GeneratorId> symbols;
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i, c /= 3) symbols.push_back(alphabet[c % 3]);
      words.emplace_back(std::move(symbols));
    }
    for (const auto& u : words) {
      const auto cu = oracle::counts(u);
      for (const auto& v : words) {
        t.count();
        const auto all = enumerate_symmetries(u, v);
        if (cu != oracle::counts(v)) {
          t.check(all.empty(), "non-anagrams " + u.to_string() + " / " + v.to_string());
          continue;
        }
        if (all.size() != oracle::symmetry_count(u)) {
          t.fail("count for " + u.to_string() + " -> " + v.to_string());
          continue;
        }
        const Symmetry unique = swap_free_symmetry(u, v);
        std::size_t swap_free = 0;
        for (const auto& s : all) {
          if (!is_swap_free(s)) continue;
          ++swap_free;
          t.check(s == unique, "swap_free_symmetry for " + u.to_string() + " -> " + v.to_string());
        }
        t.check(swap_free == 1, "swap-free members for " + u.to_string() + " -> " + v.to_string());
        t.check(unique.perm() == oracle::occurrence_matching(u, v), "occurrence matching");
      }
    }
  }
  return t.outcome("word pairs");
}

Outcome swap_free_closure() {
  std::mt19937_64 rng(kSeed + 3);
  const auto alphabet = sp::letters(3);
  Tally t;
  for (int i = 0; i < 500; ++i) {
    const Word u = sp::word(rng, alphabet, sp::uniform(rng, 0, 7));
    std::vector<GeneratorId> shuffled = u.symbols();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Word v(shuffled);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Word w(shuffled);
    const Symmetry sigma(u, oracle::occurrence_matching(u, v));
    const Symmetry tau(v, oracle::occurrence_matching(v, w));
    t.count();
    t.check(is_swap_free(sigma) && is_swap_free(tau), "inputs are not swap-free");
    const Symmetry comp = sigma.then(tau);
    oracle::Perm expected(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) expected[k] = tau.perm()[sigma.perm()[k]];
    t.check(comp.perm() == expected, "composite permutation");
    t.check(is_swap_free(comp) && oracle::positional_swap_free(u, comp.perm()),
            "composite of " + u.to_string() + " -> " + v.to_string() + " -> " + w.to_string());
  }
  // sigma_{a,a} ; sigma_{a,a} = id, though sigma_{a,a} is not swap-free.
  const Word a{GeneratorId("a")};
  const Symmetry braid = Symmetry::braiding(a, a);
  const Symmetry twice = braid.then(braid);
  t.count();
  t.check(!is_swap_free(braid), "sigma_{a,a} reported swap-free");
  t.check(twice.is_identity() && is_swap_free(twice), "sigma_{a,a};sigma_{a,a} is not the identity");
  t.check(mor_eq(seq(Term::braid(a, a), Term::braid(a, a)), Term::identity(a + a)),
          "sigma_{a,a};sigma_{a,a} differs from id as a morphism");
  return t.outcome("pairs + witness");
}

Outcome swap_free_criterion() {
  std::mt19937_64 rng(kSeed + 4);
  const auto alphabet = sp::letters(3);
  Tally t;
  std::size_t decompositions = 0;
  std::size_t min_decompositions = SIZE_MAX;
  for (std::size_t len = 0; len <= 5; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<GeneratorId> symbols;
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i, c /= 3) symbols.push_back(alphabet[c % 3]);
      const Word w(symbols);
      oracle::Perm perm(len);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        t.count();
        const auto ds = oracle::decompositions(perm, rng, 10);
        decompositions += ds.size();
        if (len >= 2) min_decompositions = std::min(min_decompositions, ds.size());
        bool definitional = true;
        for (const auto& d : ds) {
          if (!oracle::realizes(perm, d)) t.fail("oracle decomposition does not realize the permutation");
          definitional = definitional && oracle::crossing_condition(w, d);
        }
        t.check(definitional == is_swap_free(Symmetry(w, perm)),
                "disagreement on " + w.to_string());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  t.check(min_decompositions >= 10, "fewer than 10 decompositions for some permutation");
  return t.outcome("symmetries (" + std::to_string(decompositions) +
                   " decompositions, at least " + std::to_string(min_decompositions) +
                   " each on two or more wires)");
}

Outcome transition_preserving_closure() {
  sp::Rng rng(kSeed + 5);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const PetriNet n = sp::net(rng);
    const NetMorphism f = sp::morphism(rng, n, sp::PlaceMap::Any);
    const NetMorphism g = sp::morphism(rng, f.target, sp::PlaceMap::Any);
    const TPFunctor fg = compose_functors(lift_net_morphism(f), lift_net_morphism(g));
    std::string why;
    t.count();
    t.check(check_transition_preserving(fg).empty(), "library validator rejects the composite");
    t.check(oracle::transition_preserving(fg, &why), why);
  }
  return t.outcome("composites");
}

NetMorphism chain_morphism(const PetriNet& from, const PetriNet& to,
                           std::map<std::string, std::string> places,
                           std::map<std::string, std::string> transitions) {
  NetMorphism f{from, to, {}, {}};
  for (const auto& [p, q] : places) f.places.set(GeneratorId(p), Multiset{{GeneratorId(q), 1}});
  for (const auto& [s, u] : transitions) f.transitions.emplace(GeneratorId(s), GeneratorId(u));
  return f;
}

bool agree_on_generators(const TPFunctor& a, const TPFunctor& b) {
  for (const auto& sig : a.source.generators()) {
    const Term g = Term::generator(sig);
    const Term x = apply_functor(a, g);
    const Term y = apply_functor(b, g);
    if (!(x.dom() == y.dom()) || !(x.cod() == y.cod()) || !mor_eq(x, y)) return false;
  }
  return true;
}

Outcome non_functoriality() {
  Tally t;
  const GeneratorId a("a"), b("b"), x("x"), y("y"), z("z");
  const PetriNet n(PlaceOrder::natural({a, b}), {{GeneratorId("tN"), {{a, 1}, {b, 1}}, {}}});
  const PetriNet m(PlaceOrder::natural({x, y}), {{GeneratorId("tM"), {{x, 1}, {y, 1}}, {}}});
  const PetriNet l(PlaceOrder::natural({z}), {{GeneratorId("tL"), {{z, 2}}, {}}});
  const NetMorphism f = chain_morphism(n, m, {{"a", "y"}, {"b", "x"}}, {{"tN", "tM"}});
  const NetMorphism g = chain_morphism(m, l, {{"x", "z"}, {"y", "z"}}, {{"tM", "tL"}});
  const TPFunctor composite = compose_functors(lift_net_morphism(f), lift_net_morphism(g));
  const TPFunctor direct = lift_net_morphism(compose_net_morphisms(f, g));
  const Term tn = Term::generator(fold_net(n), GeneratorId("tN"));
  const Term lhs = apply_functor(composite, tn);
  const Term rhs = apply_functor(direct, tn);
  t.count();
  t.check(lhs.dom() == rhs.dom() && lhs.cod() == rhs.cod(), "boundaries differ on the chain");
  t.check(!mor_eq(lhs, rhs), "the chain does not separate compose(lift f, lift g) from lift(f;g)");
  // The difference is exactly one sigma_{z,z} in front of tL.
  const Term tl = Term::generator(fold_net(l), GeneratorId("tL"));
  t.check(mor_eq(lhs, seq(Term::braid({z}, {z}), tl)), "composite is not sigma_{z,z};tL");
  t.check(mor_eq(rhs, tl), "direct lift is not tL");

  sp::Rng rng(kSeed + 6);
  for (int i = 0; i < 100; ++i) {
    const PetriNet src = sp::net(rng);
    // Either f is grounded and g injective, or g is injective and monotone.
    const bool grounded = i % 2 == 0;
    const NetMorphism f1 = sp::morphism(rng, src, grounded ? sp::PlaceMap::Grounded : sp::PlaceMap::Any);
    const NetMorphism g1 = sp::morphism(rng, f1.target, grounded ? sp::PlaceMap::Injective : sp::PlaceMap::Monotone);
    t.count();
    t.check(agree_on_generators(compose_functors(lift_net_morphism(f1), lift_net_morphism(g1)),
                                lift_net_morphism(compose_net_morphisms(f1, g1))),
            std::string("injective chain ") + std::to_string(i) + (grounded ? " (grounded f)" : " (monotone g)"));
  }
  return t.outcome("chains (1 concrete + 100 injective)");
}

// Replaces a few lifted symmetries by arbitrary ones, so the functors are
// transition preserving but not swap-free.
TPFunctor scramble(sp::Rng& rng, TPFunctor f) {
  for (auto& [name, image] : f.generators) {
    if (!sp::coin(rng)) continue;
    if (image.pre.size() <= 6) {
      const auto options = enumerate_symmetries(image.pre.source(), image.pre.target());
      image.pre = options[sp::uniform(rng, 0, options.size() - 1)];
    }
    if (image.post.size() <= 6) {
      const auto options = enumerate_symmetries(image.post.source(), image.post.target());
      image.post = options[sp::uniform(rng, 0, options.size() - 1)];
    }
  }
  require_transition_preserving(f);
  return f;
}

Outcome unfold_functoriality() {
  sp::Rng rng(kSeed + 7);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const PetriNet n = sp::net(rng);
    const NetMorphism f = sp::morphism(rng, n, sp::PlaceMap::Any);
    const NetMorphism g = sp::morphism(rng, f.target, sp::PlaceMap::Any);
    const TPFunctor ff = scramble(rng, lift_net_morphism(f));
    const TPFunctor gg = scramble(rng, lift_net_morphism(g));
    std::string why;
    t.count();
    t.check(oracle::same_morphism(unfold_functor(compose_functors(ff, gg)),
                                  compose_net_morphisms(unfold_functor(ff), unfold_functor(gg)), &why),
            why);
  }
  return t.outcome("composable pairs");
}

Tuple random_tuple(sp::Rng& rng, std::size_t n) {
  Tuple out(n);
  for (auto& x : out) x = static_cast<Value>(sp::uniform(rng, 0, 40)) - 20;
  return out;
}

Outcome smc_equations() {
  sp::Rng rng(kSeed + 8);
  Tally t;
  std::size_t widest = 0, most_events = 0;
  for (int i = 0; i < 1000; ++i) {
    const Presentation p = sp::presentation(rng, 3, 4, 2);
    const SemAssignment sem = oracle::random_assignment(rng, p);
    sp::TermShape shape;
    shape.max_wires = 10;
    shape.max_events = 6;
    for (const auto& eq : smc_equation_instances(rng, p, shape)) {
      t.count();
      for (const Term* side : {&eq.lhs, &eq.rhs}) {
        const std::size_t width = oracle::max_width(*side), events = oracle::event_count(*side);
        widest = std::max(widest, width);
        most_events = std::max(most_events, events);
        t.check(width <= 10 && events <= 6, eq.law + ": instance outside 10 wires / 6 events");
      }
      t.check(eq.lhs.dom() == eq.rhs.dom() && eq.lhs.cod() == eq.rhs.cod(), eq.law + ": boundaries");
      t.check(mor_eq(eq.lhs, eq.rhs), eq.law + ": " + eq.lhs.to_string() + " vs " + eq.rhs.to_string());
      const Tuple in = random_tuple(rng, eq.lhs.dom().size());
      t.check(eval_morphism(sem, eq.lhs, in) == eval_morphism(sem, eq.rhs, in), eq.law + ": evaluation");
    }
  }
  return t.outcome("instances over 11 laws (widest " + std::to_string(widest) + " wires, most " +
                   std::to_string(most_events) + " events)");
}

Outcome interp_functoriality() {
  sp::Rng rng(kSeed + 9);
  Tally t;
  // Absolute values: generators against direct affine arithmetic, and the
  // relay execution against its hand-piped output.
  for (int i = 0; i < 100; ++i) {
    const Presentation p = sp::presentation(rng, 3, 4, 2);
    const oracle::Affine affine = oracle::random_affine(rng, p);
    const SemAssignment sem = oracle::to_assignment(affine);
    for (const auto& sig : p.generators()) {
      const Tuple x = random_tuple(rng, sig.dom.size());
      t.count();
      t.check(eval_morphism(sem, Term::generator(sig), x) == oracle::eval_affine(affine.at(sig.name.name()), x),
              "generator " + sig.name.name());
    }
  }
  {
    Session s(relay_net(), {{GeneratorId("p1"), 1}, {GeneratorId("p2"), 1}, {GeneratorId("p3"), 2}});
    for (const char* name : {"t", "v", "u"}) s.fire(GeneratorId(name));
    SemAssignment relay;
    relay.ops.emplace(GeneratorId("t"), parse_sem_op("neg"));
    relay.ops.emplace(GeneratorId("v"), parse_sem_op("dup"));
    relay.ops.emplace(GeneratorId("u"), parse_sem_op("inc"));
    t.count();
    t.check(eval_morphism(relay, s.history(), {5, 1, 2, 3}) == Tuple{1, 2, 3, -4, -5}, "relay history");
  }
  for (int i = 0; i < 500; ++i) {
    const Presentation p = sp::presentation(rng, 3, 4, 2);
    const SemAssignment sem = oracle::random_assignment(rng, p);
    sp::TermShape shape{6, 3, 4};
    const Term a = sp::term(rng, p, shape);
    const Term b = sp::term(rng, p, a.cod(), shape);
    const Term c = sp::term(rng, p, shape);
    const Tuple x = random_tuple(rng, a.dom().size());
    const Tuple y = random_tuple(rng, c.dom().size());
    t.count();
    t.check(eval_morphism(sem, seq(a, b), x) == eval_morphism(sem, b, eval_morphism(sem, a, x)), "seq");
    Tuple xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    Tuple expected = eval_morphism(sem, a, x);
    const Tuple right = eval_morphism(sem, c, y);
    expected.insert(expected.end(), right.begin(), right.end());
    t.check(eval_morphism(sem, tensor(a, c), xy) == expected, "tensor");
    // A detour through a random symmetry and back is the same morphism.
    const Symmetry s = sp::symmetry(rng, a.dom());
    const Term detour = seq_all({symmetry_to_term(s), symmetry_to_term(s.inverse()), a});
    t.check(mor_eq(detour, a), "detour not equal to the term");
    t.check(eval_morphism(sem, detour, x) == eval_morphism(sem, a, x), "mor_eq-equal terms evaluate apart");
  }
  // Every symmetry of arity at most 5 evaluates to its tuple permutation.
  std::size_t symmetries = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const Word w = sp::word(rng, {GeneratorId("a")}, n);
    oracle::Perm perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Tuple in(n);
    std::iota(in.begin(), in.end(), Value{10});
    do {
      ++symmetries;
      t.count();
      t.check(eval_morphism(SemAssignment{}, symmetry_to_term(Symmetry(w, perm)), in) ==
                  oracle::permute(perm, in),
              "symmetry evaluation");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t.outcome("cases (generators, relay history, 500 terms, " + std::to_string(symmetries) + " symmetries)");
}

Outcome wire_format_roundtrip() {
  sp::Rng rng(kSeed + 10);
  Tally t;
  for (int i = 0; i < 500; ++i) {
    sp::NetShape shape;
    shape.numeric_places = true;
    shape.connected_places_only = true;
    const PetriNet n = sp::net(rng, shape);
    std::string why;
    t.count();
    t.check(oracle::same_net(parse_numlist(emit_numlist(n)), n, &why), "parse(emit(n)): " + why);
  }
  for (int i = 0; i < 500; ++i) {
    const NumList l = oracle::random_numlist(rng, 5, 4);
    t.count();
    t.check(emit_numlist(parse_numlist(l)) == oracle::normalize_numlist(l),
            "emit(parse(l)) for " + write_numlist(l));
  }
  const GeneratorId p1 = GeneratorId::number(1), p2 = GeneratorId::number(2),
                    p3 = GeneratorId::number(3), p4 = GeneratorId::number(4);
  const PetriNet expected(PlaceOrder::natural({p1, p2, p3, p4}),
                          {{GeneratorId("t1"), {{p1, 1}}, {{p2, 1}}},
                           {GeneratorId("t2"), {{p2, 1}}, {{p3, 1}, {p4, 1}}},
                           {GeneratorId("t3"), {{p3, 1}}, {{p4, 1}}}});
  std::string why;
  t.count();
  t.check(oracle::same_net(parse_numlist({1, 0, 2, 0, 2, 0, 3, 4, 0, 3, 0, 4}), expected, &why),
          "example list: " + why);
  return t.outcome("cases (500 nets + 500 lists + example)");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden-execution", golden_execution},
      {"fold-unfold-roundtrip", fold_unfold_roundtrip},
      {"symmetry-uniqueness", symmetry_uniqueness},
      {"swap-free-closure", swap_free_closure},
      {"swap-free-criterion", swap_free_criterion},
      {"transition-preserving-closure", transition_preserving_closure},
      {"non-functoriality", non_functoriality},
      {"unfold-functoriality", unfold_functoriality},
      {"smc-equations", smc_equations},
      {"interp-functoriality", interp_functoriality},
      {"wire-format-roundtrip", wire_format_roundtrip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.passed ? "PASS " : "FAIL ") << c.name << ": " << o.detail
              << " [exact, " << ms << " ms]" << std::endl;
    failed += o.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
