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

// Normal forms for morphisms of a free symmetric monoidal category.
//
// A term denotes a string diagram: generator occurrences (events) whose ports
// are joined by wires, with ordered input and output interfaces. Two terms
// are equal modulo the symmetric monoidal axioms exactly when their diagrams
// are isomorphic by a map that fixes both interfaces. Once the interfaces are
// fixed, every event reachable from them gets a forced position, so a
// breadth-first numbering from the interface is already canonical. Closed
// components (events not connected to any interface wire) are numbered from
// each possible start event and the least encoding wins.

#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "petrifold/term.hpp"

namespace petrifold {

/// A producer port: an input wire of the diagram (event == kBoundary) or an
/// output port of an event.
struct Endpoint {
  static constexpr std::size_t kBoundary = std::numeric_limits<std::size_t>::max();

  std::size_t event = kBoundary;
  std::size_t port = 0;

  bool from_boundary() const noexcept { return event == kBoundary; }
  auto operator<=>(const Endpoint&) const = default;
};

struct DiagramEvent {
  GeneratorSignature generator;
  /// Producer feeding each input port, in port order.
  std::vector<Endpoint> inputs;

  bool operator==(const DiagramEvent&) const = default;
};

class CanonicalDiagram {
 public:
  const Word& inputs() const noexcept { return inputs_; }
  const Word& outputs() const noexcept { return outputs_; }
  /// Events in canonical order. The first `anchored_count()` are connected
  /// to the interface; the rest form closed components.
  const std::vector<DiagramEvent>& events() const noexcept { return events_; }
  std::size_t anchored_count() const noexcept { return anchored_; }
  /// Producer of each output wire.
  const std::vector<Endpoint>& output_sources() const noexcept {
    return output_sources_;
  }

  /// Events feeding `event` directly, without duplicates.
  std::vector<std::size_t> predecessors(std::size_t event) const;
  /// Strict causal order: some wire path leads from `a` to `b`.
  bool precedes(std::size_t a, std::size_t b) const;

  std::string to_string() const;

  bool operator==(const CanonicalDiagram&) const = default;

 private:
  friend CanonicalDiagram canonicalize(const Term& t);

  Word inputs_;
  Word outputs_;
  std::vector<DiagramEvent> events_;
  std::vector<Endpoint> output_sources_;
  std::size_t anchored_ = 0;
};

CanonicalDiagram canonicalize(const Term& t);

/// Equality of morphisms: same boundary and isomorphic diagrams.
bool mor_eq(const Term& a, const Term& b);

}  // namespace petrifold
