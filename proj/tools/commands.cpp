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

#include "commands.hpp"

#include <atomic>
#include <charconv>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "http_server.hpp"
#include "petrifold/checks.hpp"
#include "petrifold/correspondence.hpp"
#include "petrifold/diagram.hpp"
#include "petrifold/interp.hpp"
#include "petrifold/json_codec.hpp"
#include "petrifold/numlist.hpp"
#include "petrifold/service.hpp"
#include "petrifold/session.hpp"

namespace petrifold::cli {

namespace pj = petrifold::json;
using Json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json read_json(const std::string& path) {
  try {
    return pj::parse(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

// Decoder errors carry a JSON path; prefix the file it came from.
template <typename F>
auto load(const std::string& path, F&& decode) {
  const Json j = read_json(path);
  try {
    return decode(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T number(std::string_view text, const char* what) {
  const std::string s = trim(text);
  T v{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, std::string("expected ") + what + ", got \"" + s + "\"");
  }
  return v;
}

std::vector<std::size_t> positions(std::string_view text) {
  std::vector<std::size_t> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) out.push_back(number<std::size_t>(item, "a position"));
  return out;
}

Json counts(const PetriNet& net, const Marking& m) {
  Json out = Json::array();
  for (const auto& p : net.places().elements()) out.push_back(m.count(p));
  return out;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::atomic<HttpServer*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (HttpServer* s = g_server.load()) s->stop();
}

}  // namespace

Marking parse_marking(const PetriNet& net, std::string_view text) {
  const std::string t = trim(text);
  Marking m;
  if (!t.empty() && t.front() == '{') {
    m = pj::decode_multiset(pj::parse(t));
  } else if (t.find('=') != std::string::npos) {
    for (const auto& item : split(t, ',')) {
      const auto parts = split(item, '=');
      if (parts.size() != 2 || trim(parts[0]).empty()) {
        throw Error(ErrorCode::Parse, "expected place=count, got \"" + item + "\"");
      }
      m.add(GeneratorId(trim(parts[0])), number<Count>(parts[1], "a count"));
    }
  } else if (!t.empty()) {
    const auto items = split(t, ',');
    const auto& places = net.places().elements();
    if (items.size() != places.size()) {
      throw Error(ErrorCode::Parse, "expected " + std::to_string(places.size()) +
                                        " counts, one per place, got " +
                                        std::to_string(items.size()));
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto n = number<Count>(items[i], "a count");
      if (n > 0) m.add(places[i], n);
    }
  }
  check_marking(net, m);
  return m;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Petri nets, their free symmetric monoidal categories and functors between them"};
  app.name("petrifold");
  app.require_subcommand(1);

  std::string file_a, file_b, marking_text, seq_text, tokens_text, gen_name, pre_text, post_text,
      input_text, host = "127.0.0.1", snapshot_dir;
  int port = 8080;
  std::uint64_t seed = 1;
  std::size_t scale = 1;

  auto* parse_cmd = app.add_subcommand("parse", "Number-list file to net JSON");
  parse_cmd->add_option("file", file_a, "Number-list file")->required();

  auto* emit_cmd = app.add_subcommand("emit", "Net JSON to number list");
  emit_cmd->add_option("net", file_a, "Net JSON")->required();

  auto* fold_cmd = app.add_subcommand("fold", "Net JSON to its presentation");
  fold_cmd->add_option("net", file_a, "Net JSON")->required();

  auto* unfold_cmd = app.add_subcommand("unfold", "Presentation JSON to its net");
  unfold_cmd->add_option("presentation", file_a, "Presentation JSON")->required();

  auto* fire_cmd = app.add_subcommand("fire", "Fire a sequence of transitions");
  fire_cmd->add_option("net", file_a, "Net JSON")->required();
  fire_cmd->add_option("--marking", marking_text, "Initial marking")->required();
  fire_cmd->add_option("--seq", seq_text, "Comma-separated transitions")->required();
  fire_cmd->add_option("--tokens", tokens_text,
                       "Boundary positions per firing, e.g. \"0;;2,1\" (empty = earliest tokens)");

  auto* lift_cmd = app.add_subcommand("lift", "Lift a net morphism to a functor");
  lift_cmd->add_option("morphism", file_a, "Net morphism JSON")->required();

  auto* tweak_cmd = app.add_subcommand("tweak", "Replace the symmetries around one generator");
  tweak_cmd->add_option("functor", file_a, "Functor JSON")->required();
  tweak_cmd->add_option("--gen", gen_name, "Source generator")->required();
  tweak_cmd->add_option("--pre", pre_text, "Permutation for the symmetry before the generator");
  tweak_cmd->add_option("--post", post_text, "Permutation for the symmetry after the generator");

  auto* apply_cmd = app.add_subcommand("apply", "Apply a functor to a term");
  apply_cmd->add_option("functor", file_a, "Functor JSON")->required();
  apply_cmd->add_option("term", file_b, "Term JSON")->required();

  auto* unfoldf_cmd = app.add_subcommand("unfoldf", "Functor JSON to its net morphism");
  unfoldf_cmd->add_option("functor", file_a, "Functor JSON")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term on an integer tuple");
  eval_cmd->add_option("assignment", file_a, "Assignment JSON")->required();
  eval_cmd->add_option("term", file_b, "Term JSON")->required();
  eval_cmd->add_option("--input", input_text, "Comma-separated integers")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose two functors");
  compose_cmd->add_option("first", file_a, "Functor JSON")->required();
  compose_cmd->add_option("second", file_b, "Functor JSON")->required();

  auto* compose_m_cmd = app.add_subcommand("compose-morphisms", "Compose two net morphisms");
  compose_m_cmd->add_option("first", file_a, "Net morphism JSON")->required();
  compose_m_cmd->add_option("second", file_b, "Net morphism JSON")->required();

  auto* equal_cmd = app.add_subcommand("equal", "Decide equality of two terms as morphisms");
  equal_cmd->add_option("a", file_a, "Term JSON")->required();
  equal_cmd->add_option("b", file_b, "Term JSON")->required();

  auto* functoriality_cmd = app.add_subcommand(
      "functoriality", "Compare lift(f);lift(g) with lift(f;g) on every source generator");
  functoriality_cmd->add_option("first", file_a, "Net morphism JSON")->required();
  functoriality_cmd->add_option("second", file_b, "Net morphism JSON")->required();

  auto* check_cmd = app.add_subcommand("check", "Run the randomized invariant suite");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_option("--scale", scale, "Multiplier for the number of cases");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", port, "Port (0 picks a free one)");
  serve_cmd->add_option("--host", host, "Address to bind");
  serve_cmd->add_option("--snapshots", snapshot_dir, "Directory for session snapshots");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse_cmd) {
      print(out, pj::encode(parse_numlist(read_numlist(read_file(file_a)))));
    } else if (*emit_cmd) {
      out << write_numlist(emit_numlist(load(file_a, pj::decode_net))) << '\n';
    } else if (*fold_cmd) {
      print(out, pj::encode(fold_net(load(file_a, pj::decode_net))));
    } else if (*unfold_cmd) {
      print(out, pj::encode(unfold_cat(load(file_a, pj::decode_presentation))));
    } else if (*fire_cmd) {
      const PetriNet net = load(file_a, pj::decode_net);
      Session session(net, parse_marking(net, marking_text));
      const auto steps = split(seq_text, ',');
      std::vector<std::string> choices;
      if (!tokens_text.empty()) choices = split(tokens_text, ';');
      if (!choices.empty() && choices.size() != steps.size()) {
        throw Error(ErrorCode::Parse, "--tokens needs one entry per firing");
      }
      Json trace = Json::array();
      trace.push_back({{"marking", pj::encode(session.marking())},
                       {"counts", counts(net, session.marking())}});
      for (std::size_t i = 0; i < steps.size(); ++i) {
        std::optional<std::vector<std::size_t>> chosen;
        if (!choices.empty() && !trim(choices[i]).empty()) chosen = positions(choices[i]);
        const auto& layer = session.fire(GeneratorId(trim(steps[i])), chosen);
        trace.push_back({{"transition", layer.transition.name()},
                         {"tokens", layer.chosen},
                         {"marking", pj::encode(layer.marking_after)},
                         {"counts", counts(net, layer.marking_after)}});
      }
      print(out, {{"places", pj::encode(Word(net.places().elements()))},
                  {"trace", trace},
                  {"boundary", pj::encode(session.boundary())},
                  {"history", pj::encode(session.history())}});
    } else if (*lift_cmd) {
      print(out, pj::encode(lift_net_morphism(load(file_a, pj::decode_morphism))));
    } else if (*tweak_cmd) {
      const TPFunctor f = load(file_a, pj::decode_functor);
      const GeneratorId g(gen_name);
      auto it = f.generators.find(g);
      if (it == f.generators.end()) {
        throw Error(ErrorCode::UnknownGenerator, "no generator " + gen_name + " in the source");
      }
      std::optional<Symmetry> pre, post;
      if (!pre_text.empty()) pre = Symmetry(it->second.pre.source(), positions(pre_text));
      if (!post_text.empty()) post = Symmetry(it->second.post.source(), positions(post_text));
      print(out, pj::encode(tweak(f, g, pre, post)));
    } else if (*apply_cmd) {
      const TPFunctor f = load(file_a, pj::decode_functor);
      print(out, pj::encode(apply_functor(f, load(file_b, pj::decode_term))));
    } else if (*unfoldf_cmd) {
      print(out, pj::encode(unfold_functor(load(file_a, pj::decode_functor))));
    } else if (*eval_cmd) {
      const SemAssignment a = load(file_a, pj::decode_assignment);
      const Term t = load(file_b, pj::decode_term);
      Tuple input;
      if (!trim(input_text).empty()) {
        for (const auto& item : split(input_text, ',')) input.push_back(number<Value>(item, "an integer"));
      }
      print(out, {{"output", eval_morphism(a, t, input)}});
    } else if (*compose_cmd) {
      const TPFunctor f = load(file_a, pj::decode_functor);
      print(out, pj::encode(compose_functors(f, load(file_b, pj::decode_functor))));
    } else if (*compose_m_cmd) {
      const NetMorphism f = load(file_a, pj::decode_morphism);
      print(out, pj::encode(compose_net_morphisms(f, load(file_b, pj::decode_morphism))));
    } else if (*equal_cmd) {
      const Term a = load(file_a, pj::decode_term);
      print(out, {{"equal", mor_eq(a, load(file_b, pj::decode_term))}});
    } else if (*functoriality_cmd) {
      const NetMorphism f = load(file_a, pj::decode_morphism);
      const NetMorphism g = load(file_b, pj::decode_morphism);
      const TPFunctor composite = compose_functors(lift_net_morphism(f), lift_net_morphism(g));
      const TPFunctor direct = lift_net_morphism(compose_net_morphisms(f, g));
      Json rows = Json::array();
      bool all_equal = true;
      for (const auto& sig : composite.source.generators()) {
        const Term gen = Term::generator(sig);
        const Term a = apply_functor(composite, gen);
        const Term b = apply_functor(direct, gen);
        const bool same = a.dom() == b.dom() && a.cod() == b.cod() && mor_eq(a, b);
        all_equal = all_equal && same;
        rows.push_back({{"generator", sig.name.name()},
                        {"composite", pj::encode(a)},
                        {"direct", pj::encode(b)},
                        {"equal", same}});
      }
      print(out, {{"functorial", all_equal}, {"generators", rows}});
    } else if (*check_cmd) {
      bool ok = true;
      for (const auto& r : run_invariant_suite(seed, scale)) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed()) out << ": " << r.failure;
        out << '\n';
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    } else if (*serve_cmd) {
      SessionService service(snapshot_dir.empty()
                                 ? std::nullopt
                                 : std::optional<std::filesystem::path>(snapshot_dir));
      HttpServer server(service);
      const int bound = server.bind(host, port);
      if (bound < 0) {
        throw Error(ErrorCode::Internal, "cannot bind " + host + ":" + std::to_string(port));
      }
      out << "listening on http://" << host << ":" << bound << std::endl;
      g_server.store(&server);
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.run();
      g_server.store(nullptr);
    }
  } catch (const Error& e) {
    err << pj::encode_error(e).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << pj::encode_error(Error(ErrorCode::Internal, e.what())).dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace petrifold::cli
