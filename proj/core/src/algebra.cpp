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

#include "petrifold/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace petrifold {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view strip_leading_zeros(std::string_view s) {
  auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? s.substr(s.size() - 1)
                                         : s.substr(first);
}

Count checked_add(Count a, Count b, const GeneratorId& g) {
  if (a > std::numeric_limits<Count>::max() - b) {
    throw Error(ErrorCode::Overflow, "count overflow on " + g.name());
  }
  return a + b;
}

}  // namespace

GeneratorId::GeneratorId(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw Error(ErrorCode::Parse, "generator name is empty");
  }
  for (unsigned char c : name_) {
    if (std::isspace(c) != 0) {
      throw Error(ErrorCode::Parse,
                  "generator name contains whitespace: '" + name_ + "'");
    }
  }
  numeric_ = all_digits(name_);
}

GeneratorId GeneratorId::number(std::uint64_t value) {
  return GeneratorId(std::to_string(value));
}

std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
  if (a.numeric_ != b.numeric_) {
    return a.numeric_ ? std::strong_ordering::less
                      : std::strong_ordering::greater;
  }
  if (a.numeric_) {
    auto x = strip_leading_zeros(a.name_);
    auto y = strip_leading_zeros(b.name_);
    if (x.size() != y.size()) return x.size() <=> y.size();
    if (auto c = x.compare(y); c != 0) return c <=> 0;
  }
  return a.name_.compare(b.name_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const GeneratorId& g) {
  return os << g.name();
}

// ---------------------------------------------------------------------------

Multiset::Multiset(
    std::initializer_list<std::pair<const GeneratorId, Count>> entries) {
  for (const auto& [g, n] : entries) add(g, n);
}

void Multiset::add(const GeneratorId& g, Count n) {
  if (n == 0) return;
  auto [it, inserted] = entries_.try_emplace(g, 0);
  it->second = checked_add(it->second, n, g);
}

Count Multiset::count(const GeneratorId& g) const {
  auto it = entries_.find(g);
  return it == entries_.end() ? 0 : it->second;
}

Count Multiset::size() const {
  Count total = 0;
  for (const auto& [g, n] : entries_) total = checked_add(total, n, g);
  return total;
}

std::vector<GeneratorId> Multiset::support() const {
  std::vector<GeneratorId> out;
  out.reserve(entries_.size());
  for (const auto& [g, n] : entries_) out.push_back(g);
  return out;
}

bool Multiset::contained_in(const Multiset& other) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const auto& e) {
    return e.second <= other.count(e.first);
  });
}

Multiset& Multiset::operator+=(const Multiset& other) {
  for (const auto& [g, n] : other.entries_) add(g, n);
  return *this;
}

Multiset Multiset::minus(const Multiset& other) const {
  if (!other.contained_in(*this)) {
    throw Error(ErrorCode::InvalidMarking, "multiset difference would go negative");
  }
  Multiset out = *this;
  for (const auto& [g, n] : other.entries_) {
    auto it = out.entries_.find(g);
    it->second -= n;
    if (it->second == 0) out.entries_.erase(it);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Multiset& m) {
  os << '{';
  bool first = true;
  for (const auto& [g, n] : m.entries()) {
    if (!first) os << ", ";
    first = false;
    os << g << ':' << n;
  }
  return os << '}';
}

// ---------------------------------------------------------------------------

Word Word::from_chars(std::string_view chars) {
  Word w;
  for (char c : chars) w.push_back(GeneratorId(std::string(1, c)));
  return w;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) w.push_back(GeneratorId(token));
  return w;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<GeneratorId>(first,
                                       first + static_cast<std::ptrdiff_t>(len)));
}

Word& Word::operator+=(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

std::string Word::to_string() const {
  if (symbols_.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i != 0) out += ' ';
    out += symbols_[i].name();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << '"' << w.to_string() << '"';
}

// ---------------------------------------------------------------------------

MultisetHom MultisetHom::identity(const std::vector<GeneratorId>& generators) {
  MultisetHom h;
  for (const auto& g : generators) h.set(g, Multiset{{g, 1}});
  return h;
}

const Multiset& MultisetHom::image(const GeneratorId& g) const {
  auto it = images_.find(g);
  if (it == images_.end()) {
    throw Error(ErrorCode::UnknownGenerator,
                "homomorphism is not defined on " + g.name());
  }
  return it->second;
}

MultisetHom MultisetHom::then(const MultisetHom& next) const {
  MultisetHom out;
  for (const auto& [g, m] : images_) out.set(g, apply_hom(next, m));
  return out;
}

// ---------------------------------------------------------------------------

PlaceOrder PlaceOrder::natural(std::vector<GeneratorId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return explicit_order(std::move(elements));
}

PlaceOrder PlaceOrder::explicit_order(std::vector<GeneratorId> sequence) {
  PlaceOrder order;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (!order.rank_.emplace(sequence[i].name(), i).second) {
      throw Error(ErrorCode::DuplicateName,
                  "duplicate generator in order: " + sequence[i].name());
    }
  }
  order.elements_ = std::move(sequence);
  return order;
}

std::size_t PlaceOrder::rank(const GeneratorId& g) const {
  auto it = rank_.find(g.name());
  if (it == rank_.end()) {
    throw Error(ErrorCode::UnknownGenerator,
                "generator " + g.name() + " is outside the order's domain");
  }
  return it->second;
}

bool PlaceOrder::is_natural() const {
  return std::is_sorted(elements_.begin(), elements_.end());
}

// ---------------------------------------------------------------------------

Multiset multiplicity(const Word& w) {
  Multiset m;
  for (const auto& g : w) m.add(g);
  return m;
}

Word linearize(const Multiset& m, const PlaceOrder& order) {
  std::vector<std::pair<std::size_t, const GeneratorId*>> ranked;
  ranked.reserve(m.entries().size());
  for (const auto& [g, n] : m.entries()) ranked.emplace_back(order.rank(g), &g);
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Word out;
  for (const auto& [rank, g] : ranked) {
    for (Count i = 0, n = m.count(*g); i < n; ++i) out.push_back(*g);
  }
  return out;
}

Word sort_word(const Word& w, const PlaceOrder& order) {
  std::vector<std::pair<std::size_t, GeneratorId>> ranked;
  ranked.reserve(w.size());
  for (const auto& g : w) ranked.emplace_back(order.rank(g), g);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Word out;
  for (auto& [rank, g] : ranked) out.push_back(std::move(g));
  return out;
}

Multiset apply_hom(const MultisetHom& h, const Multiset& m) {
  Multiset out;
  for (const auto& [g, n] : m.entries()) {
    const Multiset& image = h.image(g);
    for (const auto& [target, k] : image.entries()) {
      if (k != 0 && n > std::numeric_limits<Count>::max() / k) {
        throw Error(ErrorCode::Overflow, "count overflow on " + target.name());
      }
      out.add(target, n * k);
    }
  }
  return out;
}

bool hom_is_grounded(const MultisetHom& h) {
  return std::all_of(h.images().begin(), h.images().end(), [](const auto& e) {
    return e.second.size() == 1;
  });
}

}  // namespace petrifold
