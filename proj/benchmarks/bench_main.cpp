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

#include <benchmark/benchmark.h>

#include "petrifold/correspondence.hpp"
#include "petrifold/diagram.hpp"
#include "petrifold/sampling.hpp"
#include "petrifold/session.hpp"
#include "petrifold/symmetry.hpp"

namespace {

using namespace petrifold;
namespace sp = petrifold::sampling;

void BM_Canonicalize(benchmark::State& state) {
  sp::Rng rng(1);
  const Presentation p = sp::presentation(rng);
  sp::TermShape shape;
  shape.max_wires = static_cast<std::size_t>(state.range(0));
  shape.max_events = static_cast<std::size_t>(state.range(0));
  std::vector<Term> terms;
  for (int i = 0; i < 64; ++i) terms.push_back(sp::term(rng, p, shape));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(terms[i++ % terms.size()]));
}
BENCHMARK(BM_Canonicalize)->Arg(4)->Arg(8)->Arg(16);

void BM_MorEqInterchange(benchmark::State& state) {
  sp::Rng rng(2);
  const Presentation p = sp::presentation(rng);
  const sp::TermShape shape{4, 3, 4};
  const Term a = sp::term(rng, p, shape), a1 = sp::term(rng, p, shape);
  const Term b = sp::term(rng, p, a.cod(), shape), b1 = sp::term(rng, p, a1.cod(), shape);
  const Term lhs = seq(tensor(a, a1), tensor(b, b1));
  const Term rhs = tensor(seq(a, b), seq(a1, b1));
  for (auto _ : state) benchmark::DoNotOptimize(mor_eq(lhs, rhs));
}
BENCHMARK(BM_MorEqInterchange);

void BM_EnumerateSymmetries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Word u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(i % 2 ? "a" : "b");
  sp::Rng rng(3);
  const Word v = sp::symmetry(rng, u).target();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_symmetries(u, v));
}
BENCHMARK(BM_EnumerateSymmetries)->DenseRange(2, 8, 2);

void BM_SwapFree(benchmark::State& state) {
  sp::Rng rng(4);
  const Word u = sp::word(rng, sp::letters(3), static_cast<std::size_t>(state.range(0)));
  std::vector<Symmetry> symmetries;
  for (int i = 0; i < 64; ++i) symmetries.push_back(sp::symmetry(rng, u));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_swap_free(symmetries[i++ % symmetries.size()]));
}
BENCHMARK(BM_SwapFree)->Arg(8)->Arg(32)->Arg(128);

void BM_LiftAndCompose(benchmark::State& state) {
  sp::Rng rng(5);
  const PetriNet n = sp::net(rng);
  const NetMorphism f = sp::morphism(rng, n, sp::PlaceMap::Any);
  const NetMorphism g = sp::morphism(rng, f.target, sp::PlaceMap::Any);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_functors(lift_net_morphism(f), lift_net_morphism(g)));
  }
}
BENCHMARK(BM_LiftAndCompose);

void BM_SessionFire(benchmark::State& state) {
  const PetriNet ring(PlaceOrder::natural({"a", "b"}),
                      {{"ab", {{"a", 1}}, {{"b", 1}}}, {"ba", {{"b", 1}}, {{"a", 1}}}});
  const auto tokens = static_cast<Count>(state.range(0));
  for (auto _ : state) {
    Session s(ring, {{"a", tokens}, {"b", tokens}});
    for (int i = 0; i < 16; ++i) s.fire(i % 2 ? "ab" : "ba");
    benchmark::DoNotOptimize(s.history());
  }
}
BENCHMARK(BM_SessionFire)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
