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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "petrifold/petri_net.hpp"

namespace petrifold::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`; failures are reported on `err` as {"error": {code, message}}.
/// Returns the process exit code: 0 on success, 1 on a library error or a
/// failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Marking syntax: "p1=1,p3=2" by name, "1,1,2,0" as counts in place
/// order, or a JSON object. Throws Parse or UnknownPlace.
Marking parse_marking(const PetriNet& net, std::string_view text);

}  // namespace petrifold::cli
