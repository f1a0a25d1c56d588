#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hk/ideal.hpp"

namespace hk {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

/// Ideal expression: a polynomial, a list of generators (sum of ideals) or an
/// intersection of parenthesized lists.
struct IdealExpr {
  enum class Kind { Poly, Sum, Intersect };
  Kind kind = Kind::Sum;
  Polynomial poly;
  std::vector<IdealExpr> parts;

  bool operator==(const IdealExpr& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Poly) return poly == o.poly;
    return parts == o.parts;
  }
};

struct Command {
  std::string name;
  std::vector<std::string> args;
  /// 1-based source line; not part of equality
  std::size_t line = 0;

  bool operator==(const Command& o) const { return name == o.name && args == o.args; }
};

struct Session {
  std::uint32_t characteristic = 32003;
  std::vector<std::string> variables;
  std::optional<IdealExpr> modulus;
  std::vector<std::pair<std::string, IdealExpr>> ideals;
  std::vector<Command> commands;
  RingPtr ring;

  const IdealExpr* find_ideal(const std::string& name) const {
    for (const auto& [n, e] : ideals) {
      if (n == name) return &e;
    }
    return nullptr;
  }

  bool operator==(const Session& o) const {
    return characteristic == o.characteristic && variables == o.variables && modulus == o.modulus &&
           ideals == o.ideals && commands == o.commands;
  }
};

/// Command name with its argument kinds: 'i' ideal name, 'n' non-negative integer.
struct CommandSpec {
  const char* name;
  const char* args;
};

inline const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"coeffs", "i"}, {"postulation", "i"}, {"dim1", "i"}, {"depth", ""},
      {"grade", "in"}, {"verify", "i"},      {"search", "n"},
  };
  return specs;
}

namespace detail {

struct Token {
  enum class Kind { Int, Ident, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t column = 0;
};

inline std::vector<Token> tokenize(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token t;
    t.column = i + 1;
    if (std::isdigit(c)) {
      t.kind = Token::Kind::Int;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) t.text += line[i++];
    } else if (std::isalpha(c) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) {
        t.text += line[i++];
      }
    } else if (std::string("+-*^(),[]=").find(static_cast<char>(c)) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, static_cast<char>(c));
      ++i;
    } else {
      throw ParseError(lineno, i + 1, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.column = line.size() + 1;
  out.push_back(end);
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t lineno, RingPtr ring)
      : toks_(std::move(toks)), line_(lineno), ring_(std::move(ring)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_punct(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? std::string("end of line") : "'" + t.text + "'";
  }

  void expect(const char* p) {
    if (!is_punct(p)) fail(peek(), std::string("expected '") + p + "', found " + describe(peek()));
    next();
  }

  Token expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

  void expect_end() {
    if (at_end()) return;
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident || t.kind == Token::Kind::Int || (t.kind == Token::Kind::Punct && t.text == "(")) {
      fail(t, "implicit multiplication is not allowed, use '*'");
    }
    fail(t, "unexpected " + describe(t));
  }

  std::uint64_t parse_uint(const Token& t, std::uint64_t limit, const char* what) const {
    if (t.kind != Token::Kind::Int) fail(t, std::string("expected ") + what + ", found " + describe(t));
    std::uint64_t v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > limit) fail(t, std::string(what) + " too large");
    }
    return v;
  }

  // expr := term (('+'|'-') term)*
  Polynomial expr() {
    Polynomial acc = term();
    while (is_punct("+") || is_punct("-")) {
      Token op = next();
      if (at_end() || is_punct(")") || is_punct(",")) fail(op, "expected operand after '" + op.text + "'");
      Polynomial rhs = term();
      acc = op.text == "+" ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  // term := unary ('*' unary)*
  Polynomial term() {
    Polynomial acc = unary();
    while (is_punct("*")) {
      Token op = next();
      if (at_end() || is_punct(")") || is_punct(",")) fail(op, "expected operand after '*'");
      acc = acc * unary();
    }
    if (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::Int || is_punct("(")) {
      fail(peek(), "implicit multiplication is not allowed, use '*'");
    }
    return acc;
  }

  // unary := ('+'|'-') unary | power
  Polynomial unary() {
    if (is_punct("-") || is_punct("+")) {
      Token op = next();
      if (at_end()) fail(op, "expected operand after '" + op.text + "'");
      Polynomial p = unary();
      return op.text == "-" ? -p : p;
    }
    return power();
  }

  // power := atom ('^' integer)?
  Polynomial power() {
    Polynomial base = atom();
    if (is_punct("^")) {
      Token op = next();
      if (at_end()) fail(op, "expected exponent after '^'");
      auto e = parse_uint(next(), 65535, "exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    Token t = next();
    switch (t.kind) {
      case Token::Kind::Int: {
        const std::uint32_t p = ring_->field().characteristic();
        std::uint64_t v = 0;
        for (char c : t.text) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
      }
      case Token::Kind::Ident: {
        auto i = ring_->index_of(t.text);
        if (i < 0) fail(t, "unknown variable '" + t.text + "'");
        return Polynomial::variable(ring_, static_cast<std::size_t>(i));
      }
      case Token::Kind::Punct:
        if (t.text == "(") {
          Polynomial inner = expr();
          expect(")");
          return inner;
        }
        fail(t, "unexpected " + describe(t));
      case Token::Kind::End:
        fail(t, "unexpected end of line");
    }
    fail(t, "unexpected token");
  }

  // list := item (',' item)* ; item := intersect | expr
  IdealExpr ideal_list() {
    IdealExpr sum;
    sum.kind = IdealExpr::Kind::Sum;
    sum.parts.push_back(ideal_item());
    while (is_punct(",")) {
      next();
      sum.parts.push_back(ideal_item());
    }
    return sum;
  }

  IdealExpr ideal_item() {
    if (peek().kind == Token::Kind::Ident && peek().text == "intersect") return intersection();
    IdealExpr leaf;
    leaf.kind = IdealExpr::Kind::Poly;
    leaf.poly = expr();
    return leaf;
  }

  // intersect '(' group (',' group)* ')' ; group := '(' list ')' | intersect
  IdealExpr intersection() {
    next();
    expect("(");
    IdealExpr node;
    node.kind = IdealExpr::Kind::Intersect;
    do {
      if (!node.parts.empty()) next();
      if (peek().kind == Token::Kind::Ident && peek().text == "intersect") {
        node.parts.push_back(intersection());
      } else {
        expect("(");
        node.parts.push_back(ideal_list());
        expect(")");
      }
    } while (is_punct(","));
    expect(")");
    return node;
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  RingPtr ring_;
};

}  // namespace detail

/// Parses a session file.  `characteristic` overrides the one declared on the
/// ring line.
inline Session parse_session(const std::string& text, std::optional<std::uint32_t> characteristic = std::nullopt) {
  Session s;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = detail::tokenize(raw, lineno);
    if (toks.front().kind == detail::Token::Kind::End) continue;
    detail::LineParser P(std::move(toks), lineno, s.ring);
    detail::Token head = P.peek();
    if (head.kind != detail::Token::Kind::Ident) P.fail(head, "expected a statement keyword, found " + P.describe(head));
    P.next();

    if (head.text == "ring") {
      if (s.ring) P.fail(head, "ring declared twice");
      detail::Token pt = P.next();
      std::uint64_t p = P.parse_uint(pt, (1ull << 31) - 1, "characteristic");
      if (!PrimeField::is_prime(p)) P.fail(pt, "characteristic " + pt.text + " is not prime");
      if (characteristic) {
        if (!PrimeField::is_prime(*characteristic)) {
          throw std::invalid_argument("characteristic " + std::to_string(*characteristic) + " is not prime");
        }
        p = *characteristic;
      }
      P.expect("[");
      std::vector<std::string> names;
      do {
        if (!names.empty()) P.next();
        detail::Token v = P.expect_ident("variable name");
        if (v.text == "intersect") P.fail(v, "'intersect' is reserved");
        for (const auto& n : names) {
          if (n == v.text) P.fail(v, "duplicate variable '" + v.text + "'");
        }
        names.push_back(v.text);
        if (names.size() > kMaxVars) P.fail(v, "too many variables (max " + std::to_string(kMaxVars) + ")");
      } while (P.is_punct(","));
      P.expect("]");
      P.expect_end();
      s.characteristic = static_cast<std::uint32_t>(p);
      s.variables = names;
      s.ring = PolyRing::make(PrimeField(s.characteristic), names);
      continue;
    }
    if (!s.ring) P.fail(head, "'" + head.text + "' before the ring declaration");

    if (head.text == "mod") {
      if (s.modulus) P.fail(head, "defining ideal declared twice");
      if (!s.ideals.empty()) P.fail(head, "defining ideal must precede ideal declarations");
      s.modulus = P.ideal_list();
      P.expect_end();
    } else if (head.text == "ideal") {
      detail::Token name = P.expect_ident("ideal name");
      if (s.find_ideal(name.text)) P.fail(name, "ideal '" + name.text + "' already declared");
      P.expect("=");
      IdealExpr e = P.ideal_list();
      P.expect_end();
      s.ideals.emplace_back(name.text, std::move(e));
    } else {
      const CommandSpec* spec = nullptr;
      for (const auto& c : command_specs()) {
        if (head.text == c.name) spec = &c;
      }
      if (!spec) P.fail(head, "unknown command '" + head.text + "'");
      Command cmd{head.text, {}, lineno};
      for (const char* a = spec->args; *a; ++a) {
        detail::Token t = P.next();
        if (*a == 'i') {
          if (t.kind != detail::Token::Kind::Ident) P.fail(t, "expected ideal name, found " + P.describe(t));
          if (!s.find_ideal(t.text)) P.fail(t, "undeclared ideal '" + t.text + "'");
        } else {
          P.parse_uint(t, 1000000, "count");
        }
        cmd.args.push_back(t.text);
      }
      if (!P.at_end()) P.fail(P.peek(), "too many arguments for '" + head.text + "'");
      s.commands.push_back(std::move(cmd));
    }
  }
  if (!s.ring) throw ParseError(lineno + 1, 1, "missing ring declaration");
  return s;
}

inline std::string to_string(const IdealExpr& e) {
  switch (e.kind) {
    case IdealExpr::Kind::Poly:
      return e.poly.to_string();
    case IdealExpr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.parts.size(); ++i) out += (i ? ", " : "") + to_string(e.parts[i]);
      return out;
    }
    case IdealExpr::Kind::Intersect: {
      std::string out = "intersect(";
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += ", ";
        const auto& p = e.parts[i];
        out += p.kind == IdealExpr::Kind::Intersect ? to_string(p) : "(" + to_string(p) + ")";
      }
      return out + ")";
    }
  }
  return {};
}

/// Canonical text; parse_session(print_session(s)) == s.
inline std::string print_session(const Session& s) {
  std::ostringstream os;
  os << "ring " << s.characteristic << " [";
  for (std::size_t i = 0; i < s.variables.size(); ++i) os << (i ? "," : "") << s.variables[i];
  os << "]\n";
  if (s.modulus) os << "mod " << to_string(*s.modulus) << "\n";
  for (const auto& [name, e] : s.ideals) os << "ideal " << name << " = " << to_string(e) << "\n";
  for (const auto& c : s.commands) {
    os << c.name;
    for (const auto& a : c.args) os << " " << a;
    os << "\n";
  }
  return os.str();
}

/// Generators (ambient preimages) of the ideal of R described by e.
inline std::vector<Polynomial> evaluate(const IdealExpr& e, const QuotientRing& R) {
  switch (e.kind) {
    case IdealExpr::Kind::Poly:
      return {e.poly.in_ring(R.ambient())};
    case IdealExpr::Kind::Sum: {
      std::vector<Polynomial> out;
      for (const auto& p : e.parts) {
        auto g = evaluate(p, R);
        out.insert(out.end(), g.begin(), g.end());
      }
      return out;
    }
    case IdealExpr::Kind::Intersect: {
      Ideal acc(R, evaluate(e.parts.front(), R));
      for (std::size_t i = 1; i < e.parts.size(); ++i) acc = intersect(acc, Ideal(R, evaluate(e.parts[i], R)));
      return acc.generators();
    }
  }
  return {};
}

/// R = S / J with J from the `mod` line.
inline QuotientRing session_ring(const Session& s) {
  if (!s.ring) throw std::logic_error("session has no ring");
  QuotientRing S(s.ring);
  if (!s.modulus) return S;
  return QuotientRing(s.ring, evaluate(*s.modulus, S));
}

inline Ideal session_ideal(const Session& s, const QuotientRing& R, const std::string& name) {
  const IdealExpr* e = s.find_ideal(name);
  if (!e) throw std::invalid_argument("undeclared ideal '" + name + "'");
  return Ideal(R, evaluate(*e, R));
}

}  // namespace hk
