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

#include "petrifold/error.hpp"

#include <sstream>

namespace petrifold {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::UnknownPlace: return "UnknownPlace";
    case ErrorCode::UnknownTransition: return "UnknownTransition";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotEnabled: return "NotEnabled";
    case ErrorCode::InvalidMarking: return "InvalidMarking";
    case ErrorCode::InvalidNet: return "InvalidNet";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::InvalidFunctor: return "InvalidFunctor";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::IllTyped: return "IllTyped";
    case ErrorCode::NotASymmetry: return "NotASymmetry";
    case ErrorCode::InvalidSymmetry: return "InvalidSymmetry";
    case ErrorCode::NotAnagrams: return "NotAnagrams";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidAssignment: return "InvalidAssignment";
    case ErrorCode::OddSublistCount: return "OddSublistCount";
    case ErrorCode::IsolatedPlace: return "IsolatedPlace";
    case ErrorCode::NonNumericPlace: return "NonNumericPlace";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::BadTokenChoice: return "BadTokenChoice";
    case ErrorCode::NothingToUndo: return "NothingToUndo";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string describe(const Violations& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i != 0) os << "; ";
    os << to_string(v.code) << '(' << v.subject << "): " << v.message;
  }
  return os.str();
}

}  // namespace petrifold
