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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "petrifold/json_codec.hpp"

using namespace petrifold;
namespace pj = petrifold::json;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PETRIFOLD_DATA_DIR) + "/" + name; }

// Writes `content` to a fresh file under the temp directory.
std::string scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "petrifold-cli-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("fire reproduces the relay execution") {
  const Result r = run({"fire", data("relay.net.json"), "--marking", "1,1,2,0", "--seq", "t,v,u"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const Json& trace = j.at("trace");
  // The first entry is the initial marking.
  REQUIRE(trace.size() == 4);
  CHECK(trace[0].at("counts") == Json::array({1, 1, 2, 0}));
  CHECK(trace[1].at("counts") == Json::array({0, 2, 2, 0}));
  CHECK(trace[2].at("counts") == Json::array({0, 1, 3, 1}));
  CHECK(trace[3].at("counts") == Json::array({0, 1, 2, 2}));
  CHECK(trace[3].at("transition") == "u");
  CHECK(j.at("boundary") == Json::array({"p2", "p3", "p3", "p4", "p4"}));
  const Term history = pj::decode_term(j.at("history"));
  CHECK(history.event_count() == 3);
}

TEST_CASE("fire with explicit tokens and named markings") {
  const Result r = run({"fire", data("relay.net.json"), "--marking", "p1=1,p2=1,p3=2", "--seq", "t,v,u",
                        "--tokens", ";;2"});
  REQUIRE(r.code == 0);
  const Json trace = Json::parse(r.out).at("trace");
  CHECK(trace[2].at("tokens") == Json::array({0}));
  CHECK(trace[3].at("tokens") == Json::array({2}));
  CHECK(trace[3].at("counts") == Json::array({0, 1, 2, 2}));
  const Result refused = run({"fire", data("relay.net.json"), "--marking", "0,0,0,0", "--seq", "u"});
  CHECK(refused.code == 1);
  CHECK(Json::parse(refused.err).at("error").at("code") == "NotEnabled");
}

TEST_CASE("marking syntax") {
  const PetriNet n = fixtures::relay();
  CHECK(cli::parse_marking(n, "1,1,2,0") == fixtures::relay_start());
  CHECK(cli::parse_marking(n, "p3=2, p1=1,p2=1") == fixtures::relay_start());
  CHECK(cli::parse_marking(n, R"({"p1": 1, "p2": 1, "p3": 2})") == fixtures::relay_start());
  CHECK(cli::parse_marking(n, "").empty());
  CHECK_THROWS_AS(cli::parse_marking(n, "1,2"), Error);
  CHECK_THROWS_AS(cli::parse_marking(n, "q=1"), Error);
}

TEST_CASE("parse and emit") {
  const Result parsed = run({"parse", data("relay.numlist")});
  REQUIRE(parsed.code == 0);
  const std::string net = scratch("numbered.net.json", parsed.out);
  const Result emitted = run({"emit", net});
  REQUIRE(emitted.code == 0);
  CHECK(emitted.out.find("1 0 2 0 2 0 3 4 0 3 0 4") != std::string::npos);
  const Result named = run({"emit", data("relay.net.json")});
  CHECK(named.code == 1);
  CHECK(Json::parse(named.err).at("error").at("code") == "NonNumericPlace");
}

TEST_CASE("fold then unfold is the identity") {
  const Result folded = run({"fold", data("relay.net.json")});
  REQUIRE(folded.code == 0);
  const Result unfolded = run({"unfold", scratch("relay.presentation.json", folded.out)});
  REQUIRE(unfolded.code == 0);
  CHECK(pj::decode_net(Json::parse(unfolded.out)) == fixtures::relay());
}

TEST_CASE("lifting the collapse chain is not functorial") {
  const Result r = run({"functoriality", data("collapse_f.json"), data("collapse_g.json")});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("functorial") == false);
  CHECK(j.at("generators")[0].at("equal") == false);

  const Result f = run({"lift", data("collapse_f.json")});
  const Result g = run({"lift", data("collapse_g.json")});
  REQUIRE(f.code == 0);
  REQUIRE(g.code == 0);
  const std::string ff = scratch("f.functor.json", f.out), gf = scratch("g.functor.json", g.out);
  const Result fg = run({"compose", ff, gf});
  REQUIRE(fg.code == 0);
  CHECK(pj::decode_functor(Json::parse(fg.out)).generators.at("tN").pre.perm() ==
        std::vector<std::size_t>{1, 0});
  const Result unfolded = run({"unfoldf", scratch("fg.functor.json", fg.out)});
  REQUIRE(unfolded.code == 0);
  const Result direct = run({"compose-morphisms", data("collapse_f.json"), data("collapse_g.json")});
  CHECK(Json::parse(unfolded.out) == Json::parse(direct.out));
}

TEST_CASE("tweak, apply and eval") {
  const std::string g = scratch("g.functor.json", run({"lift", data("collapse_g.json")}).out);
  const Result tweaked = run({"tweak", g, "--gen", "tM", "--pre", "1,0"});
  REQUIRE(tweaked.code == 0);
  CHECK_FALSE(is_swap_free(pj::decode_functor(Json::parse(tweaked.out)).generators.at("tM").pre));
  CHECK(run({"tweak", g, "--gen", "tM", "--pre", "0"}).code == 1);

  const std::string term = scratch("tm.term.json", pj::encode(Term::generator(fold_net(fixtures::chain_m()), "tM")).dump());
  const Result applied = run({"apply", g, term});
  REQUIRE(applied.code == 0);
  CHECK(pj::decode_term(Json::parse(applied.out)).dom() == Word{"z", "z"});

  const Result history = run({"fire", data("relay.net.json"), "--marking", "1,1,2,0", "--seq", "t,v,u"});
  const std::string h = scratch("history.term.json", Json::parse(history.out).at("history").dump());
  const Result evaluated = run({"eval", data("relay.assignment.json"), h, "--input", "5,1,2,3"});
  REQUIRE(evaluated.code == 0);
  CHECK(Json::parse(evaluated.out).at("output") == Json::array({1, 2, 3, -4, -5}));
  const Result same = run({"equal", h, h});
  CHECK(same.code == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"fold"}).code == 2);
  const Result missing = run({"fold", "/nonexistent/net.json"});
  CHECK(missing.code == 1);
  CHECK(Json::parse(missing.err).contains("error"));
  const Result malformed = run({"fold", scratch("bad.json", "{\"places\": [")});
  CHECK(malformed.code == 1);
  CHECK(Json::parse(malformed.err).at("error").at("code") == "Parse");
}

TEST_CASE("check runs the invariant suite") {
  const Result r = run({"check", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS smc-equations") != std::string::npos);
}
