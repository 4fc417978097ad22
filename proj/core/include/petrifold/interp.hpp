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

// Evaluation of morphisms as functions on integer tuples. Every object
// generator is one integer wire; tensor concatenates tuples, braidings
// permute them.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "petrifold/term.hpp"

namespace petrifold {

using Value = std::int64_t;
using Tuple = std::vector<Value>;

struct SemOp {
  /// The expression the op was parsed from; also its display name.
  std::string name;
  std::size_t in_arity = 0;
  std::size_t out_arity = 0;
  std::function<Tuple(std::span<const Value>)> eval;
};

/// Parses an operation. Built-ins:
///
///   id | id(n)        n -> n
///   neg, inc          1 -> 1
///   add               2 -> 1
///   dup               1 -> 2
///   const(k)          0 -> 1
///   proj(n, i)        n -> 1, keeps component i
///   discard(n)        n -> 0
///
/// Anything else must be a lambda over named parameters, e.g.
/// "(x, y) -> (x + y, 2 * x - 1)". Bodies use integer literals, the
/// parameters, parentheses and + - *. Arithmetic overflow is an error.
/// Throws Parse.
SemOp parse_sem_op(std::string_view text);

inline constexpr std::string_view kIntegerSort = "int";

struct SemAssignment {
  /// Sort of each object generator. Generators not listed default to
  /// kIntegerSort, the only sort there is.
  std::map<GeneratorId, std::string> sorts;
  std::map<GeneratorId, SemOp> ops;
};

Violations validate_assignment(const SemAssignment& a, const Presentation& p);

/// Throws ArityMismatch when `input` or an op result has the wrong length,
/// InvalidAssignment when a generator has no op, Overflow on arithmetic
/// overflow.
Tuple eval_morphism(const SemAssignment& a, const Term& t, const Tuple& input);

}  // namespace petrifold
