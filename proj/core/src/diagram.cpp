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

#include "petrifold/diagram.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace petrifold {

namespace {

constexpr std::size_t kUnset = Endpoint::kBoundary;

// Interprets a term in the category of port graphs: given the producers
// sitting on its input wires, returns the producers on its output wires.
struct Builder {
  std::vector<DiagramEvent> events;

  std::vector<Endpoint> build(const Term& t, std::vector<Endpoint> wires) {
    switch (t.kind()) {
      case Term::Kind::Identity:
        return wires;
      case Term::Kind::Braid: {
        auto split = wires.begin() + static_cast<std::ptrdiff_t>(t.word().size());
        std::rotate(wires.begin(), split, wires.end());
        return wires;
      }
      case Term::Kind::Generator: {
        const std::size_t id = events.size();
        events.push_back(DiagramEvent{t.signature(), std::move(wires)});
        std::vector<Endpoint> out(t.cod().size());
        for (std::size_t q = 0; q < out.size(); ++q) out[q] = Endpoint{id, q};
        return out;
      }
      case Term::Kind::Tensor: {
        auto split =
            wires.begin() + static_cast<std::ptrdiff_t>(t.left().dom().size());
        auto left = build(t.left(), std::vector<Endpoint>(wires.begin(), split));
        auto right = build(t.right(), std::vector<Endpoint>(split, wires.end()));
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
      case Term::Kind::Seq:
        return build(t.right(), build(t.left(), std::move(wires)));
    }
    return wires;
  }
};

// Consumer of every producer port. A consumer with event == kBoundary is an
// output wire of the diagram.
struct Wiring {
  std::vector<Endpoint> input_consumer;
  std::vector<std::vector<Endpoint>> output_consumer;

  Wiring(const std::vector<DiagramEvent>& events,
         const std::vector<Endpoint>& output_sources, std::size_t input_count)
      : input_consumer(input_count), output_consumer(events.size()) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      output_consumer[e].resize(events[e].generator.cod.size());
    }
    auto record = [&](const Endpoint& producer, Endpoint consumer) {
      if (producer.from_boundary()) {
        input_consumer[producer.port] = consumer;
      } else {
        output_consumer[producer.event][producer.port] = consumer;
      }
    };
    for (std::size_t e = 0; e < events.size(); ++e) {
      for (std::size_t p = 0; p < events[e].inputs.size(); ++p) {
        record(events[e].inputs[p], Endpoint{e, p});
      }
    }
    for (std::size_t j = 0; j < output_sources.size(); ++j) {
      record(output_sources[j], Endpoint{Endpoint::kBoundary, j});
    }
  }
};

// Breadth-first numbering from `seeds`, following wires in both directions
// in port order. `order` receives raw event ids in discovery order.
void number_from(const std::vector<DiagramEvent>& events, const Wiring& wiring,
                 const std::vector<std::size_t>& seeds,
                 std::vector<std::size_t>& rank, std::vector<std::size_t>& order) {
  std::deque<std::size_t> queue;
  auto visit = [&](std::size_t e) {
    if (rank[e] != kUnset) return;
    rank[e] = order.size();
    order.push_back(e);
    queue.push_back(e);
  };
  for (auto s : seeds) visit(s);
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (const auto& producer : events[e].inputs) {
      if (!producer.from_boundary()) visit(producer.event);
    }
    for (const auto& consumer : wiring.output_consumer[e]) {
      if (!consumer.from_boundary()) visit(consumer.event);
    }
  }
}

std::vector<DiagramEvent> encode(const std::vector<DiagramEvent>& events,
                                 const std::vector<std::size_t>& order,
                                 const std::vector<std::size_t>& rank,
                                 std::size_t offset) {
  std::vector<DiagramEvent> out;
  out.reserve(order.size());
  for (auto e : order) {
    DiagramEvent copy = events[e];
    for (auto& producer : copy.inputs) {
      if (!producer.from_boundary()) producer.event = rank[producer.event] - offset;
    }
    out.push_back(std::move(copy));
  }
  return out;
}

int compare(const DiagramEvent& a, const DiagramEvent& b) {
  auto as_int = [](auto ordering) { return ordering < 0 ? -1 : (ordering > 0 ? 1 : 0); };
  if (int c = as_int(a.generator.name <=> b.generator.name)) return c;
  if (int c = as_int(a.generator.dom <=> b.generator.dom)) return c;
  if (int c = as_int(a.generator.cod <=> b.generator.cod)) return c;
  return as_int(a.inputs <=> b.inputs);
}

bool encoding_less(const std::vector<DiagramEvent>& a,
                   const std::vector<DiagramEvent>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const DiagramEvent& x, const DiagramEvent& y) { return compare(x, y) < 0; });
}

}  // namespace

CanonicalDiagram canonicalize(const Term& t) {
  const std::size_t n_inputs = t.dom().size();
  Builder builder;
  std::vector<Endpoint> wires(n_inputs);
  for (std::size_t k = 0; k < n_inputs; ++k) wires[k] = Endpoint{Endpoint::kBoundary, k};
  const std::vector<Endpoint> output_sources = builder.build(t, std::move(wires));
  const auto& raw = builder.events;
  const Wiring wiring(raw, output_sources, n_inputs);

  // Events reachable from the interface.
  std::vector<std::size_t> seeds;
  for (const auto& consumer : wiring.input_consumer) {
    if (!consumer.from_boundary()) seeds.push_back(consumer.event);
  }
  for (const auto& producer : output_sources) {
    if (!producer.from_boundary()) seeds.push_back(producer.event);
  }
  std::vector<std::size_t> rank(raw.size(), kUnset);
  std::vector<std::size_t> anchored_order;
  number_from(raw, wiring, seeds, rank, anchored_order);

  CanonicalDiagram out;
  out.inputs_ = t.dom();
  out.outputs_ = t.cod();
  out.anchored_ = anchored_order.size();
  out.events_ = encode(raw, anchored_order, rank, 0);
  out.output_sources_ = output_sources;
  for (auto& producer : out.output_sources_) {
    if (!producer.from_boundary()) producer.event = rank[producer.event];
  }

  // Closed components: each gets its least encoding over all start events,
  // then components are sorted.
  std::vector<std::vector<DiagramEvent>> components;
  std::vector<std::size_t> scratch(raw.size(), kUnset);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (rank[e] != kUnset) continue;
    std::vector<std::size_t> members;
    number_from(raw, wiring, {e}, rank, members);
    std::vector<DiagramEvent> best;
    for (std::size_t start : members) {
      for (auto m : members) scratch[m] = kUnset;
      std::vector<std::size_t> order;
      number_from(raw, wiring, {start}, scratch, order);
      auto encoding = encode(raw, order, scratch, 0);
      if (best.empty() || encoding_less(encoding, best)) best = std::move(encoding);
    }
    components.push_back(std::move(best));
  }
  std::sort(components.begin(), components.end(), encoding_less);
  for (auto& component : components) {
    const std::size_t offset = out.events_.size();
    for (auto& ev : component) {
      for (auto& producer : ev.inputs) producer.event += offset;
      out.events_.push_back(std::move(ev));
    }
  }
  return out;
}

bool mor_eq(const Term& a, const Term& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) return false;
  if (a.event_count() != b.event_count()) return false;
  return canonicalize(a) == canonicalize(b);
}

std::vector<std::size_t> CanonicalDiagram::predecessors(std::size_t event) const {
  std::vector<std::size_t> out;
  for (const auto& producer : events_.at(event).inputs) {
    if (!producer.from_boundary()) out.push_back(producer.event);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CanonicalDiagram::precedes(std::size_t a, std::size_t b) const {
  std::vector<bool> seen(events_.size(), false);
  std::vector<std::size_t> stack = predecessors(b);
  while (!stack.empty()) {
    const std::size_t e = stack.back();
    stack.pop_back();
    if (e == a) return true;
    if (seen[e]) continue;
    seen[e] = true;
    for (auto p : predecessors(e)) stack.push_back(p);
  }
  return false;
}

std::string CanonicalDiagram::to_string() const {
  std::ostringstream os;
  auto show = [&](const Endpoint& p) {
    if (p.from_boundary()) {
      os << "in" << p.port;
    } else {
      os << 'e' << p.event << '.' << p.port;
    }
  };
  os << inputs_ << " -> " << outputs_ << '\n';
  for (std::size_t e = 0; e < events_.size(); ++e) {
    os << "  e" << e << " = " << events_[e].generator.name << '(';
    for (std::size_t p = 0; p < events_[e].inputs.size(); ++p) {
      if (p != 0) os << ", ";
      show(events_[e].inputs[p]);
    }
    os << ")\n";
  }
  os << "  out = (";
  for (std::size_t j = 0; j < output_sources_.size(); ++j) {
    if (j != 0) os << ", ";
    show(output_sources_[j]);
  }
  os << ")\n";
  return os.str();
}

}  // namespace petrifold
