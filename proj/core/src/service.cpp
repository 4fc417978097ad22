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

#include "petrifold/service.hpp"

#include <fstream>
#include <sstream>

#include "petrifold/correspondence.hpp"
#include "petrifold/diagram.hpp"
#include "petrifold/interp.hpp"
#include "petrifold/json_codec.hpp"
#include "petrifold/numlist.hpp"

namespace petrifold {

using Json = nlohmann::json;
namespace pj = petrifold::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::Schema, path + ": " + message);
}

const Json& member(const Json& body, const char* key) {
  if (!body.is_object()) bad("$", "expected an object");
  auto it = body.find(key);
  if (it == body.end()) bad(std::string("$.") + key, "missing field");
  return *it;
}

// Decodes a nested document, rewriting "$" in error paths to its location.
template <typename F>
auto nested(const char* key, F&& decode) {
  try {
    return decode();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Schema) throw;
    std::string message = e.what();
    if (message.rfind("$", 0) == 0) message = std::string("$.") + key + message.substr(1);
    throw Error(ErrorCode::Schema, message);
  }
}

std::vector<std::uint64_t> naturals(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& v = j[i];
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      bad(path + "[" + std::to_string(i) + "]", "expected a natural number");
    }
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

std::vector<std::size_t> positions(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  for (auto v : naturals(j, path)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

Symmetry symmetry_arg(const Json& body, const char* key, const Symmetry& current) {
  const Json& j = member(body, key);
  if (j.is_array()) {
    return Symmetry(current.source(), positions(j, std::string("$.") + key));
  }
  return nested(key, [&] { return pj::decode_symmetry(j); });
}

Json body_of(std::string_view text) {
  if (text.empty()) return Json::object();
  return pj::parse(text);
}

ServiceResponse ok(Json body, int status = 200) { return {status, std::move(body)}; }

ServiceResponse not_found(std::string message) {
  return {404, {{"error", {{"code", "NotFound"}, {"message", std::move(message)}}}}};
}

std::vector<std::string_view> segments(std::string_view path) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    const std::size_t j = path.find('/', i);
    const std::size_t end = j == std::string_view::npos ? path.size() : j;
    out.push_back(path.substr(i, end - i));
    i = end;
  }
  return out;
}

ServiceResponse api(std::string_view op, const Json& body) {
  if (op == "parse") {
    const Json& j = member(body, "numlist");
    NumList values = j.is_string() ? read_numlist(j.get<std::string>()) : naturals(j, "$.numlist");
    return ok({{"net", pj::encode(parse_numlist(values))}});
  }
  if (op == "emit") {
    const PetriNet net = nested("net", [&] { return pj::decode_net(member(body, "net")); });
    const NumList values = emit_numlist(net);
    return ok({{"numlist", values}, {"text", write_numlist(values)}});
  }
  if (op == "validate") {
    // Structural problems are reported as violations rather than errors.
    const Json& j = member(body, "net");
    try {
      pj::decode_net(j);
      return ok({{"violations", Json::array()}});
    } catch (const Error& e) {
      return ok({{"violations", Json::array({{{"code", to_string(e.code())},
                                               {"subject", "net"},
                                               {"message", e.what()}}})}});
    }
  }
  if (op == "fold") {
    const PetriNet net = nested("net", [&] { return pj::decode_net(member(body, "net")); });
    return ok({{"presentation", pj::encode(fold_net(net))}});
  }
  if (op == "unfold") {
    const Presentation p =
        nested("presentation", [&] { return pj::decode_presentation(member(body, "presentation")); });
    return ok({{"net", pj::encode(unfold_cat(p))}});
  }
  if (op == "lift") {
    const NetMorphism f =
        nested("morphism", [&] { return pj::decode_morphism(member(body, "morphism")); });
    return ok({{"functor", pj::encode(lift_net_morphism(f))}});
  }
  if (op == "tweak") {
    const TPFunctor f =
        nested("functor", [&] { return pj::decode_functor(member(body, "functor")); });
    const Json& g = member(body, "generator");
    if (!g.is_string()) bad("$.generator", "expected a string");
    const GeneratorId name(g.get<std::string>());
    auto it = f.generators.find(name);
    if (it == f.generators.end()) {
      throw Error(ErrorCode::UnknownGenerator, "no generator " + name.name() + " in the source");
    }
    std::optional<Symmetry> pre, post;
    if (body.contains("pre")) pre = symmetry_arg(body, "pre", it->second.pre);
    if (body.contains("post")) post = symmetry_arg(body, "post", it->second.post);
    const TPFunctor tweaked = tweak(f, name, pre, post);
    const GeneratorImage& image = tweaked.generators.at(name);
    return ok({{"functor", pj::encode(tweaked)},
               {"swapFree", {{"pre", is_swap_free(image.pre)}, {"post", is_swap_free(image.post)}}}});
  }
  if (op == "compose") {
    const TPFunctor f = nested("first", [&] { return pj::decode_functor(member(body, "first")); });
    const TPFunctor g = nested("second", [&] { return pj::decode_functor(member(body, "second")); });
    return ok({{"functor", pj::encode(compose_functors(f, g))}});
  }
  if (op == "apply") {
    const TPFunctor f = nested("functor", [&] { return pj::decode_functor(member(body, "functor")); });
    const Term t = nested("term", [&] { return pj::decode_term(member(body, "term")); });
    return ok({{"term", pj::encode(apply_functor(f, t))}});
  }
  if (op == "unfoldf") {
    const TPFunctor f = nested("functor", [&] { return pj::decode_functor(member(body, "functor")); });
    return ok({{"morphism", pj::encode(unfold_functor(f))}});
  }
  if (op == "swap-free") {
    const Symmetry s = nested("symmetry", [&] { return pj::decode_symmetry(member(body, "symmetry")); });
    return ok({{"swapFree", is_swap_free(s)}, {"target", pj::encode(s.target())}});
  }
  if (op == "equal") {
    const Term a = nested("a", [&] { return pj::decode_term(member(body, "a")); });
    const Term b = nested("b", [&] { return pj::decode_term(member(body, "b")); });
    return ok({{"equal", mor_eq(a, b)}});
  }
  if (op == "eval") {
    const SemAssignment a =
        nested("assignment", [&] { return pj::decode_assignment(member(body, "assignment")); });
    const Term t = nested("term", [&] { return pj::decode_term(member(body, "term")); });
    const Json& in = member(body, "input");
    if (!in.is_array()) bad("$.input", "expected an array");
    Tuple input;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (!in[i].is_number_integer()) bad("$.input[" + std::to_string(i) + "]", "expected an integer");
      input.push_back(in[i].get<Value>());
    }
    return ok({{"output", eval_morphism(a, t, input)}});
  }
  return not_found("no operation /api/" + std::string(op));
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema:
    case ErrorCode::Parse:
      return 400;
    case ErrorCode::UnknownSession:
      return 404;
    case ErrorCode::NotEnabled:
    case ErrorCode::BadTokenChoice:
    case ErrorCode::NothingToUndo:
      return 409;
    case ErrorCode::Internal:
      return 500;
    default:
      return 422;
  }
}

SessionService::SessionService(std::optional<std::filesystem::path> snapshot_dir)
    : snapshot_dir_(std::move(snapshot_dir)) {
  if (!snapshot_dir_) return;
  std::filesystem::create_directories(*snapshot_dir_);
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_dir_)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    const std::string stem = file.stem().string();
    if (stem.size() < 2 || stem[0] != 's') continue;
    std::uint64_t n = 0;
    try {
      n = std::stoull(stem.substr(1));
    } catch (const std::exception&) {
      continue;
    }
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    sessions_.emplace(stem, std::make_shared<Entry>(
                                pj::decode_snapshot(pj::parse(text.str()))));
    next_id_ = std::max(next_id_, n + 1);
  }
}

std::size_t SessionService::session_count() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

ServiceResponse SessionService::handle(std::string_view method, std::string_view path,
                                       std::string_view body) {
  try {
    return route(method, path, body);
  } catch (const Error& e) {
    return {http_status(e.code()), pj::encode_error(e)};
  } catch (const std::exception& e) {
    return {500, pj::encode_error(Error(ErrorCode::Internal, e.what()))};
  }
}

ServiceResponse SessionService::route(std::string_view method, std::string_view path,
                                      std::string_view body) {
  const auto parts = segments(path.substr(0, path.find('?')));
  if (parts.size() == 2 && parts[0] == "api") {
    if (method != "POST") return not_found("use POST for /api/" + std::string(parts[1]));
    return api(parts[1], body_of(body));
  }
  if (parts.empty() || parts[0] != "sessions") return not_found("no route " + std::string(path));
  if (parts.size() == 1) {
    if (method == "GET") {
      Json ids = Json::array();
      std::shared_lock lock(mutex_);
      for (const auto& [id, entry] : sessions_) ids.push_back(id);
      return ok({{"sessions", ids}});
    }
    if (method == "POST") {
      const Json request = body_of(body);
      const PetriNet net =
          nested("net", [&] { return pj::decode_net(member(request, "net")); });
      Marking marking;
      if (request.contains("marking")) {
        marking = nested("marking", [&] { return pj::decode_multiset(request.at("marking")); });
      }
      Session s(net, marking);
      Json state = pj::encode_state(s);
      state["id"] = add(std::move(s));
      return ok(std::move(state), 201);
    }
    return not_found("unsupported method on /sessions");
  }
  if (parts.size() == 2 && parts[1] == "restore" && method == "POST") {
    Session s = pj::decode_snapshot(body_of(body));
    Json state = pj::encode_state(s);
    state["id"] = add(std::move(s));
    return ok(std::move(state), 201);
  }
  if (parts.size() > 3) return not_found("no route " + std::string(path));
  const std::string id(parts[1]);
  const std::string_view action = parts.size() == 3 ? parts[2] : std::string_view{};
  return session_route(id, action, method, body);
}

ServiceResponse SessionService::session_route(const std::string& id, std::string_view action,
                                              std::string_view method, std::string_view body) {
  if (action.empty() && method == "DELETE") {
    {
      std::unique_lock lock(mutex_);
      if (sessions_.erase(id) == 0) {
        throw Error(ErrorCode::UnknownSession, "no session " + id);
      }
    }
    forget(id);
    return ok({{"deleted", id}});
  }
  const auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  Session& s = entry->session;
  auto state = [&] {
    Json out = pj::encode_state(s);
    out["id"] = id;
    return out;
  };
  if (action.empty() && method == "GET") return ok(state());
  if (action == "diagram" && method == "GET") return ok(pj::encode_diagram(s));
  if (action == "snapshot" && method == "GET") return ok(pj::encode_snapshot(s));
  if (action == "fire" && method == "POST") {
    const Json request = body_of(body);
    const Json& t = member(request, "transition");
    if (!t.is_string() || t.get<std::string>().empty()) bad("$.transition", "expected a name");
    std::optional<std::vector<std::size_t>> chosen;
    if (request.contains("tokenAssignment") && !request.at("tokenAssignment").is_null()) {
      chosen = positions(request.at("tokenAssignment"), "$.tokenAssignment");
    }
    s.fire(GeneratorId(t.get<std::string>()), std::move(chosen));
    persist(id, s);
    Json out = state();
    const auto& layer = s.layers().back();
    out["fired"] = {{"transition", layer.transition.name()},
                    {"consumed", layer.consumed},
                    {"produced", layer.produced}};
    return ok(std::move(out));
  }
  if (action == "undo" && method == "POST") {
    s.undo();
    persist(id, s);
    return ok(state());
  }
  return not_found("no route /sessions/" + id + "/" + std::string(action));
}

std::string SessionService::add(Session s) {
  std::string id;
  {
    std::unique_lock lock(mutex_);
    id = "s" + std::to_string(next_id_++);
    sessions_.emplace(id, std::make_shared<Entry>(std::move(s)));
  }
  const auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  persist(id, entry->session);
  return id;
}

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::UnknownSession, "no session " + id);
  return it->second;
}

void SessionService::persist(const std::string& id, const Session& s) const {
  if (!snapshot_dir_) return;
  const auto file = *snapshot_dir_ / (id + ".json");
  const auto tmp = *snapshot_dir_ / (id + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << pj::encode_snapshot(s).dump(2) << '\n';
    if (!out) throw Error(ErrorCode::Internal, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

void SessionService::forget(const std::string& id) const {
  if (!snapshot_dir_) return;
  std::error_code ec;
  std::filesystem::remove(*snapshot_dir_ / (id + ".json"), ec);
}

}  // namespace petrifold
