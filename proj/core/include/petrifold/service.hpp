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

// Request dispatcher behind the HTTP session service. It knows nothing about
// sockets: the transport hands it a method, a path and a body, and sends
// back the status and JSON it returns.
//
// Sessions
//   POST   /sessions                    {net, marking}          -> 201 state
//   POST   /sessions/restore            session snapshot        -> 201 state
//   GET    /sessions                                            -> {sessions}
//   GET    /sessions/{id}                                       -> state
//   DELETE /sessions/{id}                                       -> {deleted}
//   POST   /sessions/{id}/fire          {transition, tokenAssignment?}
//   POST   /sessions/{id}/undo
//   GET    /sessions/{id}/diagram
//   GET    /sessions/{id}/snapshot
//
// Stateless operations, all POST with a JSON object body
//   /api/parse      {numlist}                 -> {net}
//   /api/emit       {net}                     -> {numlist}
//   /api/validate   {net}                     -> {violations}
//   /api/fold       {net}                     -> {presentation}
//   /api/unfold     {presentation}            -> {net}
//   /api/lift       {morphism}                -> {functor}
//   /api/tweak      {functor, generator, pre?, post?} -> {functor}
//   /api/compose    {first, second}           -> {functor}
//   /api/apply      {functor, term}           -> {term}
//   /api/unfoldf    {functor}                 -> {morphism}
//   /api/swap-free  {symmetry}                -> {swapFree}
//   /api/equal      {a, b}                    -> {equal}
//   /api/eval       {assignment, term, input} -> {output}
//
// Errors come back as {"error": {"code", "message"}} with 400 for malformed
// input, 404 for unknown sessions and routes, 409 for NotEnabled,
// BadTokenChoice and NothingToUndo, 422 for other rejected input and 500
// for internal failures.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "petrifold/error.hpp"
#include "petrifold/session.hpp"

namespace petrifold {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

int http_status(ErrorCode code);

class SessionService {
 public:
  /// With a directory, every session is written to <dir>/<id>.json after
  /// each change, and sessions found there are restored on construction.
  explicit SessionService(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

  /// Safe to call concurrently. Requests on one session are serialized.
  ServiceResponse handle(std::string_view method, std::string_view path,
                         std::string_view body);

  std::size_t session_count() const;

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  ServiceResponse route(std::string_view method, std::string_view path,
                        std::string_view body);
  ServiceResponse session_route(const std::string& id, std::string_view action,
                                std::string_view method, std::string_view body);
  std::string add(Session s);
  std::shared_ptr<Entry> find(const std::string& id) const;
  void persist(const std::string& id, const Session& s) const;
  void forget(const std::string& id) const;

  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
  std::optional<std::filesystem::path> snapshot_dir_;
};

}  // namespace petrifold
