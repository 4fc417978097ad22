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

#include "petrifold/numlist.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace petrifold {

PetriNet parse_numlist(const NumList& values) {
  struct Sublist {
    std::size_t start;
    Multiset places;
  };
  std::vector<Sublist> sublists;
  if (!values.empty()) {
    sublists.push_back({0, {}});
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 0) {
        sublists.push_back({i + 1, {}});
      } else {
        sublists.back().places.add(GeneratorId::number(values[i]));
      }
    }
  }
  if (sublists.size() % 2 != 0) {
    throw Error(ErrorCode::OddSublistCount,
                "number list splits into " + std::to_string(sublists.size()) +
                    " sublists; the last one, starting at position " +
                    std::to_string(sublists.back().start) + ", has no partner");
  }
  std::set<GeneratorId> places;
  std::vector<Transition> transitions;
  for (std::size_t k = 0; k < sublists.size(); k += 2) {
    for (const auto* m : {&sublists[k].places, &sublists[k + 1].places}) {
      for (const auto& [p, n] : m->entries()) places.insert(p);
    }
    transitions.push_back({GeneratorId("t" + std::to_string(k / 2 + 1)),
                           std::move(sublists[k].places),
                           std::move(sublists[k + 1].places)});
  }
  return PetriNet(PlaceOrder::natural({places.begin(), places.end()}),
                  std::move(transitions));
}

namespace {

std::uint64_t place_number(const GeneratorId& g) {
  std::uint64_t v = 0;
  const auto& s = g.name();
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!g.is_numeric() || ec != std::errc() || end != s.data() + s.size() || v == 0) {
    throw Error(ErrorCode::NonNumericPlace,
                "place " + s + " has no nonzero numeric alias");
  }
  return v;
}

void emit_sublist(const Multiset& m, NumList& out) {
  std::vector<std::uint64_t> entries;
  for (const auto& [p, n] : m.entries()) {
    const auto v = place_number(p);
    for (Count i = 0; i < n; ++i) entries.push_back(v);
  }
  std::sort(entries.begin(), entries.end());
  out.insert(out.end(), entries.begin(), entries.end());
}

}  // namespace

NumList emit_numlist(const PetriNet& net) {
  std::set<GeneratorId> used;
  for (const auto& t : net.transitions()) {
    for (const auto* m : {&t.pre, &t.post}) {
      for (const auto& [p, n] : m->entries()) used.insert(p);
    }
  }
  for (const auto& p : net.places().elements()) {
    place_number(p);
    if (used.count(p) == 0) {
      throw Error(ErrorCode::IsolatedPlace,
                  "place " + p.name() + " is in no transition and cannot be written");
    }
  }
  NumList out;
  bool first = true;
  for (const auto& t : net.transitions()) {
    if (!first) out.push_back(0);
    first = false;
    emit_sublist(t.pre, out);
    out.push_back(0);
    emit_sublist(t.post, out);
  }
  return out;
}

NumList read_numlist(std::string_view text) {
  NumList out;
  std::size_t i = 0;
  auto separator = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',' || c == '[' || c == ']';
  };
  while (i < text.size()) {
    if (separator(text[i])) {
      ++i;
      continue;
    }
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || end == text.data() + i) {
      throw Error(ErrorCode::Parse,
                  "expected a natural number at offset " + std::to_string(i));
    }
    const std::size_t next = static_cast<std::size_t>(end - text.data());
    if (next < text.size() && !separator(text[next])) {
      throw Error(ErrorCode::Parse,
                  "unexpected character at offset " + std::to_string(next));
    }
    out.push_back(v);
    i = next;
  }
  return out;
}

std::string write_numlist(const NumList& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace petrifold
