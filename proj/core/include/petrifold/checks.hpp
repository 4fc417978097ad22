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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petrifold/sampling.hpp"
#include "petrifold/term.hpp"

namespace petrifold {

/// One instance of a monoidal-category equation: both sides are well typed
/// with the same boundary and must be equal as morphisms.
struct EquationInstance {
  std::string law;
  Term lhs;
  Term rhs;
};

/// One random instance of each of the eleven equations of a free strict
/// symmetric monoidal category: the two unit laws and associativity of
/// composition, the two tensor unit laws and tensor associativity,
/// id ⊗ id = id, interchange, the braid hexagon
/// sigma_{A,A'A''} = (sigma_{A,A'} ⊗ id_{A''}) ; (id_{A'} ⊗ sigma_{A,A''}),
/// involutivity sigma ; sigma = id and naturality of sigma.
std::vector<EquationInstance> smc_equation_instances(sampling::Rng& rng, const Presentation& p,
                                                     const sampling::TermShape& shape);

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  /// Empty when the check passed; otherwise the first counterexample.
  std::string failure;

  bool passed() const noexcept { return failure.empty(); }
};

/// Randomized self-check of the library's laws: fold/unfold, wire format,
/// symmetry uniqueness and closure, lifting, functor composition, the
/// monoidal equations, evaluation and session bookkeeping. `scale`
/// multiplies the number of cases.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, std::size_t scale = 1);

}  // namespace petrifold
