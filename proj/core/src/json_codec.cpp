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

#include "petrifold/json_codec.hpp"

#include <algorithm>

namespace petrifold::json {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::Schema, path + ": " + message);
}

// A value together with its JSON path, for diagnostics.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const json& value() const { return value_; }
  const std::string& path() const { return path_; }

  void expect_object() const {
    if (!value_.is_object()) fail(path_, "expected an object");
  }

  bool has(const char* key) const {
    expect_object();
    return value_.contains(key);
  }

  Node field(const char* key) const {
    expect_object();
    auto it = value_.find(key);
    if (it == value_.end()) fail(path_ + "." + key, "missing field");
    return Node(*it, path_ + "." + key);
  }

  std::vector<Node> items() const {
    if (!value_.is_array()) fail(path_, "expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_.size(); ++i) {
      out.emplace_back(value_[i], path_ + "[" + std::to_string(i) + "]");
    }
    return out;
  }

  std::vector<std::pair<std::string, Node>> members() const {
    expect_object();
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = value_.begin(); it != value_.end(); ++it) {
      out.emplace_back(it.key(), Node(it.value(), path_ + "." + it.key()));
    }
    return out;
  }

  std::string string() const {
    if (!value_.is_string()) fail(path_, "expected a string");
    return value_.get<std::string>();
  }

  std::uint64_t natural() const {
    if (!value_.is_number_unsigned()) {
      if (value_.is_number_integer() && value_.get<std::int64_t>() >= 0) {
        return value_.get<std::uint64_t>();
      }
      fail(path_, "expected a natural number");
    }
    return value_.get<std::uint64_t>();
  }

  std::int64_t integer() const {
    if (value_.is_number_unsigned()) {
      const auto v = value_.get<std::uint64_t>();
      if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        fail(path_, "integer out of range");
      }
      return static_cast<std::int64_t>(v);
    }
    if (!value_.is_number_integer()) fail(path_, "expected an integer");
    return value_.get<std::int64_t>();
  }

  GeneratorId id() const {
    const std::string s = string();
    if (s.empty()) fail(path_, "empty name");
    return GeneratorId(s);
  }

 private:
  const json& value_;
  std::string path_;
};

// Runs `body`, prefixing any library error with the node's path.
template <typename F>
auto at(const Node& n, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    throw Error(ErrorCode::Schema,
                n.path() + ": " + std::string(to_string(e.code())) + ": " + e.what());
  }
}

void check_schema(const Node& root, std::string_view expected) {
  root.expect_object();
  if (!root.has("schema")) return;
  const std::string got = root.field("schema").string();
  if (got != expected) {
    fail(root.path() + ".schema",
         "expected \"" + std::string(expected) + "\" but found \"" + got + "\"");
  }
}

json with_schema(std::string_view schema, json body) {
  body["schema"] = schema;
  return body;
}

Word word_of(const Node& n) {
  Word w;
  for (const auto& item : n.items()) w.push_back(item.id());
  return w;
}

Multiset multiset_of(const Node& n) {
  Multiset m;
  for (const auto& [key, value] : n.members()) {
    if (key.empty()) fail(value.path(), "empty name");
    const auto count = value.natural();
    at(value, [&] {
      m.add(GeneratorId(key), count);
      return 0;
    });
  }
  return m;
}

json encode_order(const PlaceOrder& order) {
  json places = json::array();
  for (const auto& p : order.elements()) places.push_back(p.name());
  return places;
}

PlaceOrder order_of(const Node& root, const char* list_key) {
  const Node list = root.field(list_key);
  std::vector<GeneratorId> elements;
  for (const auto& item : list.items()) elements.push_back(item.id());
  std::string kind = "natural";
  if (root.has("order")) kind = root.field("order").string();
  if (kind == "natural") {
    PlaceOrder natural = PlaceOrder::natural(elements);
    if (natural.size() != elements.size()) fail(list.path(), "duplicate name");
    return natural;
  }
  if (kind == "explicit") {
    return at(list, [&] { return PlaceOrder::explicit_order(elements); });
  }
  fail(root.path() + ".order", "expected \"natural\" or \"explicit\"");
}

json encode_body(const PetriNet& net) {
  json transitions = json::array();
  for (const auto& t : net.transitions()) {
    transitions.push_back(
        {{"name", t.name.name()}, {"pre", encode(t.pre)}, {"post", encode(t.post)}});
  }
  return {{"places", encode_order(net.places())},
          {"order", net.places().is_natural() ? "natural" : "explicit"},
          {"transitions", transitions}};
}

PetriNet net_of(const Node& root) {
  PlaceOrder places = order_of(root, "places");
  std::vector<Transition> transitions;
  for (const auto& item : root.field("transitions").items()) {
    // Named first: GCC 11 leaks earlier members when a braced initializer throws.
    GeneratorId name = item.field("name").id();
    Multiset pre = multiset_of(item.field("pre"));
    Multiset post = multiset_of(item.field("post"));
    transitions.push_back({std::move(name), std::move(pre), std::move(post)});
  }
  PetriNet net(std::move(places), std::move(transitions));
  const Violations v = validate_net(net);
  if (!v.empty()) fail(root.path(), "invalid net: " + describe(v));
  return net;
}

json encode_body(const Presentation& p) {
  json generators = json::array();
  for (const auto& g : p.generators()) {
    generators.push_back({{"name", g.name.name()}, {"dom", encode(g.dom)}, {"cod", encode(g.cod)}});
  }
  return {{"objects", encode_order(p.objects())},
          {"order", p.objects().is_natural() ? "natural" : "explicit"},
          {"generators", generators}};
}

Presentation presentation_of(const Node& root) {
  PlaceOrder objects = order_of(root, "objects");
  std::vector<GeneratorSignature> generators;
  for (const auto& item : root.field("generators").items()) {
    GeneratorId name = item.field("name").id();
    Word dom = word_of(item.field("dom"));
    Word cod = word_of(item.field("cod"));
    generators.push_back({std::move(name), std::move(dom), std::move(cod)});
  }
  Presentation p(std::move(objects), std::move(generators));
  const Violations v = validate_presentation(p);
  if (!v.empty()) fail(root.path(), "invalid presentation: " + describe(v));
  return p;
}

json encode_body(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Identity:
      return {{"kind", "id"}, {"word", encode(t.word())}};
    case Term::Kind::Braid:
      return {{"kind", "braid"}, {"left", encode(t.word())}, {"right", encode(t.right_word())}};
    case Term::Kind::Generator:
      return {{"kind", "gen"},
              {"name", t.signature().name.name()},
              {"dom", encode(t.signature().dom)},
              {"cod", encode(t.signature().cod)}};
    case Term::Kind::Tensor:
      return {{"kind", "tensor"}, {"left", encode_body(t.left())}, {"right", encode_body(t.right())}};
    case Term::Kind::Seq:
      return {{"kind", "seq"}, {"first", encode_body(t.left())}, {"second", encode_body(t.right())}};
  }
  throw Error(ErrorCode::Internal, "unknown term kind");
}

Term term_of(const Node& n) {
  const std::string kind = n.field("kind").string();
  if (kind == "id") return Term::identity(word_of(n.field("word")));
  if (kind == "braid") return Term::braid(word_of(n.field("left")), word_of(n.field("right")));
  if (kind == "gen") {
    return Term::generator(
        {n.field("name").id(), word_of(n.field("dom")), word_of(n.field("cod"))});
  }
  if (kind == "tensor") return tensor(term_of(n.field("left")), term_of(n.field("right")));
  if (kind == "seq") {
    Term first = term_of(n.field("first"));
    Term second = term_of(n.field("second"));
    return at(n, [&] { return seq(first, second); });
  }
  fail(n.path() + ".kind", "unknown term kind \"" + kind + "\"");
}

json encode_body(const Symmetry& s) {
  return {{"source", encode(s.source())}, {"perm", s.perm()}};
}

Symmetry symmetry_of(const Node& n) {
  Word source = word_of(n.field("source"));
  std::vector<std::size_t> perm;
  const Node p = n.field("perm");
  for (const auto& item : p.items()) perm.push_back(static_cast<std::size_t>(item.natural()));
  return at(p, [&] { return Symmetry(std::move(source), std::move(perm)); });
}

json encode_hom(const MultisetHom& h) {
  json out = json::object();
  for (const auto& [g, m] : h.images()) out[g.name()] = encode(m);
  return out;
}

json encode_body(const NetMorphism& f) {
  json transitions = json::object();
  for (const auto& [t, u] : f.transitions) transitions[t.name()] = u.name();
  return {{"source", encode_body(f.source)},
          {"target", encode_body(f.target)},
          {"places", encode_hom(f.places)},
          {"transitions", transitions}};
}

NetMorphism morphism_of(const Node& root) {
  NetMorphism f;
  f.source = net_of(root.field("source"));
  f.target = net_of(root.field("target"));
  for (const auto& [key, value] : root.field("places").members()) {
    f.places.set(GeneratorId(key), multiset_of(value));
  }
  for (const auto& [key, value] : root.field("transitions").members()) {
    f.transitions.emplace(GeneratorId(key), value.id());
  }
  const Violations v = validate_morphism(f);
  if (!v.empty()) fail(root.path(), "invalid net morphism: " + describe(v));
  return f;
}

json encode_body(const TPFunctor& f) {
  json objects = json::object();
  for (const auto& [g, w] : f.objects) objects[g.name()] = encode(w);
  json generators = json::object();
  for (const auto& [g, image] : f.generators) {
    generators[g.name()] = {{"pre", encode_body(image.pre)},
                            {"generator", image.generator.name()},
                            {"post", encode_body(image.post)}};
  }
  return {{"source", encode_body(f.source)},
          {"target", encode_body(f.target)},
          {"objects", objects},
          {"generators", generators}};
}

TPFunctor functor_of(const Node& root) {
  TPFunctor f;
  f.source = presentation_of(root.field("source"));
  f.target = presentation_of(root.field("target"));
  for (const auto& [key, value] : root.field("objects").members()) {
    f.objects.emplace(GeneratorId(key), word_of(value));
  }
  for (const auto& [key, value] : root.field("generators").members()) {
    f.generators.emplace(GeneratorId(key),
                         GeneratorImage{symmetry_of(value.field("pre")),
                                        value.field("generator").id(),
                                        symmetry_of(value.field("post"))});
  }
  const Violations v = check_transition_preserving(f);
  if (!v.empty()) fail(root.path(), "invalid functor: " + describe(v));
  return f;
}

}  // namespace

json encode(const Word& w) {
  json out = json::array();
  for (const auto& g : w) out.push_back(g.name());
  return out;
}

json encode(const Multiset& m) {
  json out = json::object();
  for (const auto& [g, n] : m.entries()) out[g.name()] = n;
  return out;
}

json encode(const PetriNet& net) { return with_schema(kNetSchema, encode_body(net)); }
json encode(const Presentation& p) { return with_schema(kPresentationSchema, encode_body(p)); }
json encode(const Term& t) { return with_schema(kTermSchema, encode_body(t)); }
json encode(const Symmetry& s) { return with_schema(kSymmetrySchema, encode_body(s)); }
json encode(const NetMorphism& f) { return with_schema(kMorphismSchema, encode_body(f)); }
json encode(const TPFunctor& f) { return with_schema(kFunctorSchema, encode_body(f)); }

json encode(const SemAssignment& a) {
  json sorts = json::object();
  for (const auto& [g, s] : a.sorts) sorts[g.name()] = s;
  json ops = json::object();
  for (const auto& [g, op] : a.ops) ops[g.name()] = op.name;
  return with_schema(kAssignmentSchema, {{"sorts", sorts}, {"ops", ops}});
}

json encode(const Violations& v) {
  json out = json::array();
  for (const auto& x : v) {
    out.push_back({{"code", to_string(x.code)}, {"subject", x.subject}, {"message", x.message}});
  }
  return out;
}

json encode_error(const Error& e) {
  return {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
}

Word decode_word(const json& j) { return word_of(Node(j, "$")); }
Multiset decode_multiset(const json& j) { return multiset_of(Node(j, "$")); }

PetriNet decode_net(const json& j) {
  const Node root(j, "$");
  check_schema(root, kNetSchema);
  return net_of(root);
}

Presentation decode_presentation(const json& j) {
  const Node root(j, "$");
  check_schema(root, kPresentationSchema);
  return presentation_of(root);
}

Term decode_term(const json& j) {
  const Node root(j, "$");
  check_schema(root, kTermSchema);
  return term_of(root);
}

Symmetry decode_symmetry(const json& j) {
  const Node root(j, "$");
  check_schema(root, kSymmetrySchema);
  return symmetry_of(root);
}

NetMorphism decode_morphism(const json& j) {
  const Node root(j, "$");
  check_schema(root, kMorphismSchema);
  return morphism_of(root);
}

TPFunctor decode_functor(const json& j) {
  const Node root(j, "$");
  check_schema(root, kFunctorSchema);
  return functor_of(root);
}

SemAssignment decode_assignment(const json& j) {
  const Node root(j, "$");
  check_schema(root, kAssignmentSchema);
  SemAssignment a;
  if (root.has("sorts")) {
    for (const auto& [key, value] : root.field("sorts").members()) {
      a.sorts.emplace(GeneratorId(key), value.string());
    }
  }
  for (const auto& [key, value] : root.field("ops").members()) {
    const std::string text = value.string();
    a.ops.emplace(GeneratorId(key), at(value, [&] { return parse_sem_op(text); }));
  }
  return a;
}

json encode_snapshot(const Session& s) {
  json firings = json::array();
  for (const auto& layer : s.layers()) {
    firings.push_back({{"transition", layer.transition.name()}, {"tokens", layer.chosen}});
  }
  return with_schema(kSnapshotSchema, {{"net", encode_body(s.net())},
                                       {"initial", encode(s.initial_marking())},
                                       {"firings", firings},
                                       {"marking", encode(s.marking())},
                                       {"history", encode_body(s.history())}});
}

Session decode_snapshot(const json& j) {
  const Node root(j, "$");
  check_schema(root, kSnapshotSchema);
  const Node initial = root.field("initial");
  Session s = at(initial, [&] {
    return Session(net_of(root.field("net")), multiset_of(initial));
  });
  for (const auto& firing : root.field("firings").items()) {
    const GeneratorId t = firing.field("transition").id();
    std::vector<std::size_t> chosen;
    for (const auto& item : firing.field("tokens").items()) {
      chosen.push_back(static_cast<std::size_t>(item.natural()));
    }
    at(firing, [&] { return s.fire(t, std::move(chosen)).transition; });
  }
  return s;
}

json encode_state(const Session& s) {
  json enabled = json::array();
  for (const auto& t : s.enabled()) enabled.push_back(t.name());
  json steps = json::array();
  for (const auto& layer : s.layers()) steps.push_back(layer.transition.name());
  return {{"marking", encode(s.marking())},
          {"enabled", enabled},
          {"boundary", encode(s.boundary())},
          {"tokens", s.tokens()},
          {"steps", steps},
          {"history", encode_body(s.history())}};
}

json encode_diagram(const Session& s) {
  auto boundary = [](const Word& w, const std::vector<TokenId>& tokens) {
    json wires = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
      wires.push_back({{"token", tokens[i]}, {"place", w[i].name()}});
    }
    return wires;
  };
  json boundaries = json::array();
  json layers = json::array();
  const Word word = s.history().dom();
  const std::vector<TokenId>& tokens = s.initial_tokens();
  boundaries.push_back(boundary(word, tokens));
  for (std::size_t k = 0; k < s.layers().size(); ++k) {
    const auto& layer = s.layers()[k];
    const Word after = layer.term.cod();
    std::vector<std::size_t> outputs;
    for (const TokenId id : layer.produced) {
      const auto it = std::find(layer.tokens_after.begin(), layer.tokens_after.end(), id);
      outputs.push_back(static_cast<std::size_t>(it - layer.tokens_after.begin()));
    }
    layers.push_back({{"index", k},
                      {"transition", layer.transition.name()},
                      {"inputs", layer.chosen},
                      {"outputs", outputs},
                      {"consumed", layer.consumed},
                      {"produced", layer.produced},
                      {"routing", layer.routing.perm()},
                      {"normalize", layer.normalize.perm()}});
    boundaries.push_back(boundary(after, layer.tokens_after));
  }
  return {{"schema", "petrifold/diagram/v1"}, {"boundaries", boundaries}, {"layers", layers}};
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace petrifold::json
