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

// The number-list net format.
//
// A net is a list of naturals. Every nonzero number names a place; 0 splits
// the list into sublists. Consecutive zeros give empty sublists, a trailing
// zero gives a trailing empty sublist, and the last sublist needs no
// terminating zero. The empty list has no sublists at all. Sublists pair up
// from the left: sublist 2k is the preset of transition t(k+1), sublist 2k+1
// its postset, so the count must be even. Repeating a number inside a
// sublist adds multiplicity.
//
//   1 0 2 0 2 0 3 4 0 3 0 4   ->   t1: {1} -> {2}, t2: {2} -> {3,4}, t3: {3} -> {4}

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "petrifold/petri_net.hpp"

namespace petrifold {

using NumList = std::vector<std::uint64_t>;

/// Throws OddSublistCount, naming the list position where the unpaired
/// sublist starts.
PetriNet parse_numlist(const NumList& values);

/// Entries within each sublist are emitted in increasing order. Throws
/// NonNumericPlace or IsolatedPlace, since the format cannot express
/// either.
NumList emit_numlist(const PetriNet& net);

/// Naturals separated by whitespace and/or commas; surrounding brackets are
/// ignored. Throws Parse.
NumList read_numlist(std::string_view text);

/// Space-separated, no trailing newline.
std::string write_numlist(const NumList& values);

}  // namespace petrifold
