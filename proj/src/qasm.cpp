// Copyright 2026 dqcc contributors
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

#include "dqcc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "dqcc/validate.hpp"

namespace dqcc {
namespace {

struct Token {
  enum class Kind { ident, number, symbol, string, eof };
  Kind kind = Kind::eof;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;

  int cur() const { return pos_ < src_.size() ? src_[pos_] : -1; }
  void bump() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    for (;;) {
      while (std::isspace(cur())) bump();
      if (cur() == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (cur() != -1 && cur() != '\n') bump();
        continue;
      }
      break;
    }
    tok_.line = line_;
    tok_.col = col_;
    int c = cur();
    if (c == -1) {
      tok_ = {Token::Kind::eof, "", 0.0, line_, col_};
      return;
    }
    if (std::isalpha(c) || c == '_') {
      std::string s;
      while (std::isalnum(cur()) || cur() == '_') {
        s += static_cast<char>(cur());
        bump();
      }
      tok_ = {Token::Kind::ident, s, 0.0, tok_.line, tok_.col};
      return;
    }
    if (std::isdigit(c) || c == '.') {
      std::string s;
      while (std::isdigit(cur()) || cur() == '.' || cur() == 'e' ||
             cur() == 'E' ||
             ((cur() == '+' || cur() == '-') && !s.empty() &&
              (s.back() == 'e' || s.back() == 'E'))) {
        s += static_cast<char>(cur());
        bump();
      }
      tok_ = {Token::Kind::number, s, std::stod(s), tok_.line, tok_.col};
      return;
    }
    if (c == '"') {
      bump();
      std::string s;
      while (cur() != -1 && cur() != '"') {
        s += static_cast<char>(cur());
        bump();
      }
      if (cur() != '"') throw ParseError("unterminated string", line_, col_);
      bump();
      tok_ = {Token::Kind::string, s, 0.0, tok_.line, tok_.col};
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      bump();
      bump();
      tok_ = {Token::Kind::symbol, "->", 0.0, tok_.line, tok_.col};
      return;
    }
    bump();
    tok_ = {Token::Kind::symbol, std::string(1, static_cast<char>(c)), 0.0,
            tok_.line, tok_.col};
  }
};

struct Register {
  std::uint32_t base = 0;
  std::uint32_t size = 0;
};

// One operand as written: whole register or one element.
struct Arg {
  std::string reg;
  std::optional<std::uint32_t> index;
};

class Parser {
 public:
  Parser(const std::string& src, const std::string& name) : lex_(src) {
    circuit_.name = name;
  }

  LogicalCircuit run() {
    expect_ident("OPENQASM");
    Token v = expect(Token::Kind::number);
    if (v.text != "2.0")
      throw ParseError("expected version 2.0, got " + v.text, v.line, v.col);
    expect_symbol(";");
    while (lex_.peek().kind != Token::Kind::eof) statement();

    auto violations = validate(circuit_);
    if (!violations.empty())
      throw ParseError("invalid circuit: " + violations.front().message, 0, 0);
    return circuit_;
  }

 private:
  Lexer lex_;
  LogicalCircuit circuit_;
  std::map<std::string, Register> qregs_, cregs_;
  std::vector<std::string> qreg_order_;

  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  Token expect(Token::Kind k) {
    Token t = lex_.next();
    if (t.kind != k) fail("unexpected token '" + t.text + "'", t);
    return t;
  }
  Token expect_symbol(const std::string& s) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::symbol || t.text != s)
      fail("expected '" + s + "', got '" + t.text + "'", t);
    return t;
  }
  Token expect_ident(const std::string& s) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::ident || t.text != s)
      fail("expected '" + s + "', got '" + t.text + "'", t);
    return t;
  }

  std::uint32_t expect_uint() {
    Token t = expect(Token::Kind::number);
    if (t.text.find_first_not_of("0123456789") != std::string::npos)
      fail("expected an integer, got '" + t.text + "'", t);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  // --- angle expressions ------------------------------------------------
  double parse_expr() {
    double v = parse_term();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::symbol && (t.text == "+" || t.text == "-")) {
        std::string op = lex_.next().text;
        double rhs = parse_term();
        v = op == "+" ? v + rhs : v - rhs;
      } else {
        return v;
      }
    }
  }
  double parse_term() {
    double v = parse_factor();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::symbol && (t.text == "*" || t.text == "/")) {
        std::string op = lex_.next().text;
        double rhs = parse_factor();
        v = op == "*" ? v * rhs : v / rhs;
      } else {
        return v;
      }
    }
  }
  double parse_factor() {
    Token t = lex_.next();
    if (t.kind == Token::Kind::symbol && (t.text == "-" || t.text == "+")) {
      double v = parse_factor();
      return t.text == "-" ? -v : v;
    }
    if (t.kind == Token::Kind::symbol && t.text == "(") {
      double v = parse_expr();
      expect_symbol(")");
      return v;
    }
    if (t.kind == Token::Kind::number) return t.value;
    if (t.kind == Token::Kind::ident && t.text == "pi") return M_PI;
    fail("expected a number in angle expression, got '" + t.text + "'", t);
  }

  // --- operands -----------------------------------------------------------
  Arg parse_arg() {
    Token t = expect(Token::Kind::ident);
    Arg a{t.text, std::nullopt};
    if (lex_.peek().kind == Token::Kind::symbol && lex_.peek().text == "[") {
      lex_.next();
      a.index = expect_uint();
      expect_symbol("]");
    }
    return a;
  }

  std::uint32_t resolve(const Arg& a, const std::map<std::string, Register>& regs,
                        std::uint32_t broadcast_i, const Token& at) {
    auto it = regs.find(a.reg);
    if (it == regs.end()) fail("unknown register '" + a.reg + "'", at);
    std::uint32_t idx = a.index ? *a.index : broadcast_i;
    if (idx >= it->second.size)
      fail("register-overflow: index " + std::to_string(idx) +
               " out of range for '" + a.reg + "' of size " +
               std::to_string(it->second.size),
           at);
    return it->second.base + idx;
  }

  std::uint32_t broadcast_length(std::span<const Arg> args,
                                 const std::map<std::string, Register>& qregs,
                                 const std::map<std::string, Register>& cregs,
                                 bool last_is_classical, const Token& at) {
    std::uint32_t len = 1;
    bool seen = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].index) continue;
      const auto& regs = (last_is_classical && i + 1 == args.size()) ? cregs : qregs;
      auto it = regs.find(args[i].reg);
      if (it == regs.end()) fail("unknown register '" + args[i].reg + "'", at);
      if (seen && it->second.size != len)
        fail("mismatched register sizes in broadcast", at);
      len = it->second.size;
      seen = true;
    }
    return len;
  }

  // --- statements -----------------------------------------------------------
  void statement() {
    Token t = expect(Token::Kind::ident);
    const std::string& kw = t.text;
    if (kw == "include") {
      Token s = expect(Token::Kind::string);
      if (s.text != "qelib1.inc")
        fail("only include \"qelib1.inc\" is supported", s);
      expect_symbol(";");
      return;
    }
    if (kw == "qreg" || kw == "creg") {
      Token name = expect(Token::Kind::ident);
      expect_symbol("[");
      std::uint32_t size = expect_uint();
      expect_symbol("]");
      expect_symbol(";");
      if (size == 0) fail("register '" + name.text + "' has size 0", name);
      auto& regs = kw == "qreg" ? qregs_ : cregs_;
      if (qregs_.count(name.text) || cregs_.count(name.text))
        fail("register '" + name.text + "' redeclared", name);
      std::uint32_t& total =
          kw == "qreg" ? circuit_.qubit_count : circuit_.classical_bit_count;
      regs[name.text] = {total, size};
      total += size;
      return;
    }
    if (kw == "measure") {
      Arg q = parse_arg();
      expect_symbol("->");
      Arg c = parse_arg();
      expect_symbol(";");
      Arg args[2] = {q, c};
      std::uint32_t len = broadcast_length(args, qregs_, cregs_, true, t);
      for (std::uint32_t i = 0; i < len; ++i)
        circuit_.instructions.push_back(
            make_measure(GateKind::MeasureZ, resolve(q, qregs_, i, t),
                         resolve(c, cregs_, i, t)));
      return;
    }
    if (kw == "barrier") {
      // Operands are parsed but the fence is global by design.
      if (!(lex_.peek().kind == Token::Kind::symbol && lex_.peek().text == ";")) {
        parse_arg();
        while (lex_.peek().kind == Token::Kind::symbol && lex_.peek().text == ",") {
          lex_.next();
          parse_arg();
        }
      }
      expect_symbol(";");
      circuit_.instructions.push_back(make_barrier());
      return;
    }

    static const std::map<std::string, GateKind> kGates = {
        {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},
        {"z", GateKind::Z},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
        {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rz", GateKind::RZ},
        {"rx", GateKind::RX},   {"ry", GateKind::RY},   {"cx", GateKind::CNOT},
        {"cz", GateKind::CZ},   {"swap", GateKind::SWAP},
    };
    auto g = kGates.find(kw);
    if (g == kGates.end()) throw UnsupportedGateError(kw, t.line, t.col);

    double theta = 0.0;
    if (is_rotation(g->second)) {
      expect_symbol("(");
      theta = parse_expr();
      expect_symbol(")");
    } else if (lex_.peek().kind == Token::Kind::symbol &&
               lex_.peek().text == "(") {
      fail("gate '" + kw + "' takes no parameters", lex_.peek());
    }

    std::vector<Arg> args;
    args.push_back(parse_arg());
    while (lex_.peek().kind == Token::Kind::symbol && lex_.peek().text == ",") {
      lex_.next();
      args.push_back(parse_arg());
    }
    expect_symbol(";");

    int arity = gate_arity(g->second);
    if (static_cast<int>(args.size()) != arity)
      fail("gate '" + kw + "' expects " + std::to_string(arity) + " operands",
           t);

    std::uint32_t len = broadcast_length(args, qregs_, cregs_, false, t);
    for (std::uint32_t i = 0; i < len; ++i) {
      std::vector<std::uint32_t> ops;
      for (const Arg& a : args) ops.push_back(resolve(a, qregs_, i, t));
      emit(g->second, theta, ops, t);
    }
  }

  void emit(GateKind kind, double theta, const std::vector<std::uint32_t>& ops,
            const Token& at) {
    if (kind == GateKind::SWAP) {
      if (ops[0] == ops[1]) fail("swap operands must differ", at);
      circuit_.instructions.push_back(make_gate(GateKind::CNOT, ops[0], ops[1]));
      circuit_.instructions.push_back(make_gate(GateKind::CNOT, ops[1], ops[0]));
      circuit_.instructions.push_back(make_gate(GateKind::CNOT, ops[0], ops[1]));
      return;
    }
    Instruction in;
    in.kind = kind;
    in.theta = theta;
    in.operands = ops;
    circuit_.instructions.push_back(std::move(in));
  }
};

std::string format_angle(double theta) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

}  // namespace

LogicalCircuit parse_qasm(const std::string& text, const std::string& name) {
  Parser p(text, name);
  return p.run();
}

std::string emit_qasm(const LogicalCircuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.qubit_count) + "];\n";
  if (c.classical_bit_count > 0)
    out += "creg c[" + std::to_string(c.classical_bit_count) + "];\n";
  for (const Instruction& in : c.instructions) {
    switch (in.kind) {
      case GateKind::Barrier:
        out += "barrier q;\n";
        break;
      case GateKind::MeasureZ:
        out += "measure q[" + std::to_string(in.operands[0]) + "] -> c[" +
               std::to_string(*in.writes) + "];\n";
        break;
      case GateKind::CNOT:
        out += "cx q[" + std::to_string(in.operands[0]) + "],q[" +
               std::to_string(in.operands[1]) + "];\n";
        break;
      case GateKind::CZ:
        out += "cz q[" + std::to_string(in.operands[0]) + "],q[" +
               std::to_string(in.operands[1]) + "];\n";
        break;
      default: {
        if (!is_single_qubit_gate(in.kind))
          throw InternalError(std::string("emit_qasm: gate outside the "
                                          "logical subset: ") +
                              gate_name(in.kind));
        out += gate_name(in.kind);
        if (is_rotation(in.kind)) out += "(" + format_angle(in.theta) + ")";
        out += " q[" + std::to_string(in.operands[0]) + "];\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace dqcc
