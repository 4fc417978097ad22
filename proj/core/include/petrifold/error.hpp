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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace petrifold {

enum class ErrorCode {
  UnknownGenerator,
  UnknownPlace,
  UnknownTransition,
  DuplicateName,
  Overflow,
  NotEnabled,
  InvalidMarking,
  InvalidNet,
  InvalidMorphism,
  InvalidFunctor,
  SourceTargetMismatch,
  TypeMismatch,
  IllTyped,
  NotASymmetry,
  InvalidSymmetry,
  NotAnagrams,
  NonComposable,
  TooLarge,
  ArityMismatch,
  InvalidAssignment,
  OddSublistCount,
  IsolatedPlace,
  NonNumericPlace,
  Parse,
  Schema,
  BadTokenChoice,
  NothingToUndo,
  UnknownSession,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Exception type used throughout the library. Every failure carries a
/// machine-readable code so the CLI and the service can report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One finding of a validation pass. Validators collect these instead of
/// throwing so that callers see every problem at once.
struct Violation {
  ErrorCode code;
  std::string subject;
  std::string message;

  bool operator==(const Violation&) const = default;
};

using Violations = std::vector<Violation>;

std::string describe(const Violations& violations);

}  // namespace petrifold
