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

// JSON interchange. Every top-level document carries a "schema" tag such as
// "petrifold/net/v1"; decoders accept a document without the tag but reject
// a different one. Decoding failures throw Error(Schema) whose message
// starts with the JSON path of the offending value, e.g.
// "$.generators[2].cod: missing field".

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "petrifold/correspondence.hpp"
#include "petrifold/interp.hpp"
#include "petrifold/petri_net.hpp"
#include "petrifold/session.hpp"
#include "petrifold/symmetry.hpp"
#include "petrifold/term.hpp"

namespace petrifold::json {

using nlohmann::json;

inline constexpr std::string_view kNetSchema = "petrifold/net/v1";
inline constexpr std::string_view kPresentationSchema = "petrifold/presentation/v1";
inline constexpr std::string_view kTermSchema = "petrifold/term/v1";
inline constexpr std::string_view kSymmetrySchema = "petrifold/symmetry/v1";
inline constexpr std::string_view kMorphismSchema = "petrifold/net-morphism/v1";
inline constexpr std::string_view kFunctorSchema = "petrifold/functor/v1";
inline constexpr std::string_view kAssignmentSchema = "petrifold/assignment/v1";
inline constexpr std::string_view kSnapshotSchema = "petrifold/session/v1";

json encode(const Word& w);
json encode(const Multiset& m);
json encode(const PetriNet& net);
json encode(const Presentation& p);
json encode(const Term& t);
json encode(const Symmetry& s);
json encode(const NetMorphism& f);
json encode(const TPFunctor& f);
json encode(const SemAssignment& a);
json encode(const Violations& v);
json encode_error(const Error& e);

Word decode_word(const json& j);
Multiset decode_multiset(const json& j);
PetriNet decode_net(const json& j);
Presentation decode_presentation(const json& j);
Term decode_term(const json& j);
Symmetry decode_symmetry(const json& j);
NetMorphism decode_morphism(const json& j);
TPFunctor decode_functor(const json& j);
SemAssignment decode_assignment(const json& j);

/// Net, initial marking and the firing log with the chosen positions.
/// Derived state (marking, boundary, tokens, history) is included for
/// readers but ignored on decode, which replays the log.
json encode_snapshot(const Session& s);
Session decode_snapshot(const json& j);

/// Marking, enabled transitions, history, boundary word and the token id
/// on each boundary position.
json encode_state(const Session& s);

/// Layered layout: one column per firing. Each boundary lists its wires
/// (token id and place); each layer names the consumed and produced tokens
/// and the wire positions it reads from and writes to.
json encode_diagram(const Session& s);

/// Parses text; throws Parse on malformed JSON.
json parse(std::string_view text);

}  // namespace petrifold::json
