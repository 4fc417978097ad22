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

#include "petrifold/interp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>

namespace petrifold {

namespace {

Value checked(bool overflowed, Value v) {
  if (overflowed) throw Error(ErrorCode::Overflow, "integer overflow during evaluation");
  return v;
}

Value add(Value a, Value b) {
  Value r = 0;
  const bool overflowed = __builtin_add_overflow(a, b, &r);
  return checked(overflowed, r);
}
Value sub(Value a, Value b) {
  Value r = 0;
  const bool overflowed = __builtin_sub_overflow(a, b, &r);
  return checked(overflowed, r);
}
Value mul(Value a, Value b) {
  Value r = 0;
  const bool overflowed = __builtin_mul_overflow(a, b, &r);
  return checked(overflowed, r);
}

// Expression AST for lambda bodies.
struct Expr {
  enum class Op { Literal, Param, Neg, Add, Sub, Mul } op;
  Value literal = 0;
  std::size_t param = 0;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;

  Value eval(std::span<const Value> args) const {
    switch (op) {
      case Op::Literal: return literal;
      case Op::Param: return args[param];
      case Op::Neg: return sub(0, lhs->eval(args));
      case Op::Add: return add(lhs->eval(args), rhs->eval(args));
      case Op::Sub: return sub(lhs->eval(args), rhs->eval(args));
      case Op::Mul: return mul(lhs->eval(args), rhs->eval(args));
    }
    return 0;
  }
};

using ExprPtr = std::shared_ptr<const Expr>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SemOp parse_lambda() {
    expect('(');
    std::vector<std::string> params;
    skip();
    if (!accept(')')) {
      do {
        params.push_back(identifier());
      } while (accept(','));
      expect(')');
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (std::count(params.begin(), params.end(), params[i]) > 1) {
        fail("parameter '" + params[i] + "' declared twice");
      }
    }
    params_ = params;
    expect('-');
    expect('>');
    std::vector<ExprPtr> body;
    skip();
    if (peek() == '(') {
      // Either a tuple or a parenthesized single expression; a tuple is
      // just the comma-separated form.
      ++pos_;
      skip();
      if (!accept(')')) {
        do {
          body.push_back(expr());
        } while (accept(','));
        expect(')');
      }
      // "(x) + 1" style bodies: keep parsing as a single expression.
      skip();
      if (pos_ < text_.size() && body.size() == 1) {
        body[0] = continue_sum(continue_product(body[0]));
      }
    } else {
      body.push_back(expr());
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");

    SemOp op;
    op.name = std::string(text_);
    op.in_arity = params.size();
    op.out_arity = body.size();
    op.eval = [body](std::span<const Value> args) {
      Tuple out;
      out.reserve(body.size());
      for (const auto& e : body) out.push_back(e->eval(args));
      return out;
    };
    return op;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "bad operation '" + std::string(text_) + "' at offset " +
                                      std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      fail("expected a parameter name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr node(Expr::Op op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() { return continue_sum(product()); }
  ExprPtr continue_sum(ExprPtr lhs) {
    for (;;) {
      if (accept('+')) {
        lhs = node(Expr::Op::Add, lhs, product());
      } else if (peek() == '-' && !arrow_ahead()) {
        ++pos_;
        lhs = node(Expr::Op::Sub, lhs, product());
      } else {
        return lhs;
      }
    }
  }
  bool arrow_ahead() const { return pos_ + 1 < text_.size() && text_[pos_ + 1] == '>'; }
  ExprPtr product() { return continue_product(unary()); }
  ExprPtr continue_product(ExprPtr lhs) {
    while (accept('*')) lhs = node(Expr::Op::Mul, lhs, unary());
    return lhs;
  }
  ExprPtr unary() {
    if (accept('-')) return node(Expr::Op::Neg, unary(), nullptr);
    return primary();
  }
  ExprPtr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Value v = 0;
      auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
      if (ec != std::errc()) fail("integer literal out of range");
      pos_ = static_cast<std::size_t>(end - text_.data());
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Literal;
      e->literal = v;
      return e;
    }
    const std::string name = identifier();
    auto it = std::find(params_.begin(), params_.end(), name);
    if (it == params_.end()) fail("unknown parameter '" + name + "'");
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Param;
    e->param = static_cast<std::size_t>(it - params_.begin());
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> params_;
};

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// "name(a, b)" -> name, {a, b}; plain "name" -> name, {}.
bool split_call(const std::string& text, std::string& name, std::vector<Value>& args) {
  auto open = text.find('(');
  if (open == std::string::npos) {
    name = text;
    return true;
  }
  if (text.back() != ')') return false;
  name = trim(std::string_view(text).substr(0, open));
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    auto comma = inner.find(',', pos);
    std::string piece =
        trim(std::string_view(inner).substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos));
    if (piece.empty()) return inner.empty() && args.empty();
    Value v = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || end != piece.data() + piece.size()) return false;
    args.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return true;
}

SemOp builtin(std::string text, std::size_t in, std::size_t out,
              std::function<Tuple(std::span<const Value>)> eval) {
  return SemOp{std::move(text), in, out, std::move(eval)};
}

}  // namespace

SemOp parse_sem_op(std::string_view raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty operation");
  if (text.find("->") != std::string::npos) return Parser(text).parse_lambda();

  std::string name;
  std::vector<Value> args;
  if (!split_call(text, name, args)) {
    throw Error(ErrorCode::Parse, "cannot parse operation '" + text + "'");
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n) {
      throw Error(ErrorCode::Parse, "operation '" + name + "' takes " + std::to_string(n) +
                                        " arguments");
    }
  };
  auto nonnegative = [&](Value v) {
    if (v < 0) throw Error(ErrorCode::Parse, "arity must be nonnegative in '" + text + "'");
    return static_cast<std::size_t>(v);
  };
  if (name == "id") {
    if (args.size() > 1) want(1);
    const std::size_t n = args.empty() ? 1 : nonnegative(args[0]);
    return builtin(text, n, n, [](std::span<const Value> x) { return Tuple(x.begin(), x.end()); });
  }
  if (name == "neg") {
    want(0);
    return builtin(text, 1, 1, [](std::span<const Value> x) { return Tuple{sub(0, x[0])}; });
  }
  if (name == "inc") {
    want(0);
    return builtin(text, 1, 1, [](std::span<const Value> x) { return Tuple{add(x[0], 1)}; });
  }
  if (name == "add") {
    want(0);
    return builtin(text, 2, 1, [](std::span<const Value> x) { return Tuple{add(x[0], x[1])}; });
  }
  if (name == "dup") {
    want(0);
    return builtin(text, 1, 2, [](std::span<const Value> x) { return Tuple{x[0], x[0]}; });
  }
  if (name == "const") {
    want(1);
    const Value k = args[0];
    return builtin(text, 0, 1, [k](std::span<const Value>) { return Tuple{k}; });
  }
  if (name == "proj") {
    want(2);
    const std::size_t n = nonnegative(args[0]);
    const std::size_t i = nonnegative(args[1]);
    if (i >= n) throw Error(ErrorCode::Parse, "projection index out of range in '" + text + "'");
    return builtin(text, n, 1, [i](std::span<const Value> x) { return Tuple{x[i]}; });
  }
  if (name == "discard") {
    want(1);
    return builtin(text, nonnegative(args[0]), 0, [](std::span<const Value>) { return Tuple{}; });
  }
  throw Error(ErrorCode::Parse, "unknown operation '" + text + "'");
}

Violations validate_assignment(const SemAssignment& a, const Presentation& p) {
  Violations out;
  for (const auto& [g, sort] : a.sorts) {
    if (!p.objects().contains(g)) {
      out.push_back({ErrorCode::InvalidAssignment, g.name(), "sort given for unknown object"});
    } else if (sort != kIntegerSort) {
      out.push_back({ErrorCode::InvalidAssignment, g.name(),
                     "unsupported sort '" + sort + "'; only 'int' exists"});
    }
  }
  for (const auto& g : p.generators()) {
    auto it = a.ops.find(g.name);
    if (it == a.ops.end()) {
      out.push_back({ErrorCode::InvalidAssignment, g.name.name(), "no operation assigned"});
      continue;
    }
    const SemOp& op = it->second;
    if (op.in_arity != g.dom.size() || op.out_arity != g.cod.size()) {
      out.push_back({ErrorCode::ArityMismatch, g.name.name(),
                     "operation '" + op.name + "' is " + std::to_string(op.in_arity) + " -> " +
                         std::to_string(op.out_arity) + " but the generator is " +
                         std::to_string(g.dom.size()) + " -> " + std::to_string(g.cod.size())});
    }
  }
  for (const auto& [name, op] : a.ops) {
    if (p.find(name) == nullptr) {
      out.push_back({ErrorCode::InvalidAssignment, name.name(),
                     "operation assigned to unknown generator"});
    }
  }
  return out;
}

namespace {

Tuple eval_rec(const SemAssignment& a, const Term& t, Tuple values) {
  switch (t.kind()) {
    case Term::Kind::Identity:
      return values;
    case Term::Kind::Braid: {
      auto split = values.begin() + static_cast<std::ptrdiff_t>(t.word().size());
      std::rotate(values.begin(), split, values.end());
      return values;
    }
    case Term::Kind::Generator: {
      const auto& sig = t.signature();
      auto it = a.ops.find(sig.name);
      if (it == a.ops.end()) {
        throw Error(ErrorCode::InvalidAssignment,
                    "no operation assigned to generator " + sig.name.name());
      }
      const SemOp& op = it->second;
      if (op.in_arity != sig.dom.size() || op.out_arity != sig.cod.size()) {
        throw Error(ErrorCode::ArityMismatch,
                    "operation '" + op.name + "' does not fit generator " + sig.name.name());
      }
      Tuple out = op.eval(values);
      if (out.size() != sig.cod.size()) {
        throw Error(ErrorCode::ArityMismatch,
                    "operation '" + op.name + "' returned the wrong number of values");
      }
      return out;
    }
    case Term::Kind::Tensor: {
      auto split = values.begin() + static_cast<std::ptrdiff_t>(t.left().dom().size());
      Tuple left = eval_rec(a, t.left(), Tuple(values.begin(), split));
      Tuple right = eval_rec(a, t.right(), Tuple(split, values.end()));
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    case Term::Kind::Seq:
      return eval_rec(a, t.right(), eval_rec(a, t.left(), std::move(values)));
  }
  return values;
}

}  // namespace

Tuple eval_morphism(const SemAssignment& a, const Term& t, const Tuple& input) {
  if (input.size() != t.dom().size()) {
    throw Error(ErrorCode::ArityMismatch,
                "input has " + std::to_string(input.size()) + " values but the morphism expects " +
                    std::to_string(t.dom().size()));
  }
  return eval_rec(a, t, input);
}

}  // namespace petrifold
