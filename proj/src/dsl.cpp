// Copyright 2026 The qord Authors
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

#include "qord/dsl.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <variant>

#include "qord/baer_krull.hpp"

namespace qord {

ParseError::ParseError(SourcePos p, const std::string& message)
    : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + message), pos(p) {}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { ident, number, string, punct, end };
  Kind kind = Kind::end;
  std::string text;
  SourcePos pos;
};

std::string printable(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string(1, c);
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", u);
  return buf;
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  SourcePos p;
  std::size_t i = 0;
  auto step = [&] {
    if (s[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
    ++i;
  };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      step();
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') step();
      continue;
    }
    Token t;
    t.pos = p;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::ident;
      while (i < s.size() && ident_char(s[i])) {
        t.text += s[i];
        step();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::number;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.text += s[i];
        step();
      }
      if (i < s.size() && ident_char(s[i])) throw ParseError(p, "malformed number");
    } else if (c == '"') {
      t.kind = Token::Kind::string;
      step();
      while (true) {
        if (i >= s.size() || s[i] == '\n') throw ParseError(t.pos, "unterminated string");
        if (s[i] == '"') break;
        if (!std::isprint(static_cast<unsigned char>(s[i])))
          throw ParseError(p, "unexpected character '" + printable(s[i]) + "' in string");
        t.text += s[i];
        step();
      }
      step();
    } else if (std::string("()[],=+-").find(c) != std::string::npos) {
      t.kind = Token::Kind::punct;
      t.text = std::string(1, c);
      step();
    } else {
      throw ParseError(p, "unexpected character '" + printable(c) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = p;
  out.push_back(end);
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "let" || s == "check" || s == "show" || s == "on" || s == "samples";
}

bool is_reserved(const std::string& s) { return is_keyword(s) || s == "Z" || s == "Q"; }

// ---------------------------------------------------------------- parser

constexpr int kMaxDepth = 64;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SessionAst session() {
    SessionAst ast;
    while (peek().kind != Token::Kind::end) ast.statements.push_back(statement());
    return ast;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(k_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[k_];
    if (k_ + 1 < toks_.size()) ++k_;
    return t;
  }
  bool at_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::punct && peek(ahead).text == p;
  }
  bool at_word(const char* w) const { return peek().kind == Token::Kind::ident && peek().text == w; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    if (t.kind == Token::Kind::string) got = "string \"" + t.text + "\"";
    throw ParseError(t.pos, "expected " + what + ", got " + got);
  }
  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(std::string("'") + p + "'");
    next();
  }
  void expect_word(const char* w) {
    if (!at_word(w)) fail(std::string("'") + w + "'");
    next();
  }
  Token expect_ident(const char* what) {
    if (peek().kind != Token::Kind::ident || is_keyword(peek().text)) fail(what);
    return next();
  }

  Stmt statement() {
    Stmt st;
    st.pos = peek().pos;
    if (at_word("let")) {
      next();
      st.kind = Stmt::Kind::let;
      Token name = expect_ident("a name");
      if (is_reserved(name.text)) throw ParseError(name.pos, "'" + name.text + "' is reserved");
      st.name = name.text;
      expect_punct("=");
      st.value = expr(0);
      if (at_word("on")) {
        next();
        st.on = expr(0);
      }
    } else if (at_word("check")) {
      next();
      st.kind = Stmt::Kind::check;
      st.name = expect_ident("a check name").text;
      st.value.pos = st.pos;
      st.args = arglist(0);
      expect_word("samples");
      st.samples = arglist(0);
      for (const auto& a : st.samples)
        if (a.key.empty()) throw ParseError(a.value.pos, "samples takes key=value pairs");
    } else if (at_word("show")) {
      next();
      st.kind = Stmt::Kind::show;
      st.name = expect_ident("a name").text;
    } else {
      fail("'let', 'check' or 'show'");
    }
    return st;
  }

  std::vector<Arg> arglist(int depth) {
    std::vector<Arg> args;
    expect_punct("(");
    bool keyed = false;
    if (!at_punct(")")) {
      while (true) {
        Arg a;
        if (peek().kind == Token::Kind::ident && at_punct("=", 1)) {
          a.key = next().text;
          next();
          keyed = true;
        } else if (keyed) {
          throw ParseError(peek().pos, "positional argument after keyword argument");
        }
        a.value = expr(depth + 1);
        if (a.key.empty()) a.value = words(std::move(a.value));
        args.push_back(std::move(a));
        if (at_punct(",")) {
          next();
          continue;
        }
        break;
      }
    }
    expect_punct(")");
    return args;
  }

  // A positional name followed by more bare names is a word list (variables of poly).
  Expr words(Expr first) {
    if (first.kind != Expr::Kind::name || peek().kind != Token::Kind::ident || is_keyword(peek().text)) return first;
    Expr w;
    w.kind = Expr::Kind::words;
    w.pos = first.pos;
    w.items.push_back(std::move(first));
    while (peek().kind == Token::Kind::ident && !is_keyword(peek().text) && !at_punct("(", 1)) {
      Expr n;
      n.kind = Expr::Kind::name;
      n.pos = peek().pos;
      n.text = next().text;
      w.items.push_back(std::move(n));
    }
    return w;
  }

  Expr expr(int depth) {
    if (depth > kMaxDepth) throw ParseError(peek().pos, "nesting too deep");
    Expr e;
    e.pos = peek().pos;
    const Token& t = peek();
    if (at_punct("-") || at_punct("+")) {
      const std::string sign = next().text;
      if (peek().kind != Token::Kind::number) fail("a number after '" + sign + "'");
      e.kind = Expr::Kind::number;
      e.text = (sign == "-" ? "-" : "") + next().text;
    } else if (t.kind == Token::Kind::number) {
      e.kind = Expr::Kind::number;
      e.text = next().text;
    } else if (t.kind == Token::Kind::string) {
      e.kind = Expr::Kind::string;
      e.text = next().text;
    } else if (at_punct("[")) {
      next();
      e.kind = Expr::Kind::list;
      if (!at_punct("]")) {
        while (true) {
          e.items.push_back(expr(depth + 1));
          if (!at_punct(",")) break;
          next();
        }
      }
      expect_punct("]");
    } else if (t.kind == Token::Kind::ident && !is_keyword(t.text)) {
      e.text = next().text;
      if (at_punct("(")) {
        e.kind = Expr::Kind::call;
        e.args = arglist(depth);
      } else {
        e.kind = Expr::Kind::name;
      }
    } else {
      fail("an expression");
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

// ---------------------------------------------------------------- signatures

enum class T { ring, val, qo, lift, integer, element, words, ints, strings, word, value_lit, none };

std::string type_name(T t) {
  switch (t) {
    case T::ring:
      return "ring";
    case T::val:
      return "valuation";
    case T::qo:
      return "quasi-order";
    case T::lift:
      return "lift data";
    case T::integer:
      return "integer";
    case T::element:
      return "element string";
    case T::words:
      return "variable names";
    case T::ints:
      return "integer list";
    case T::strings:
      return "string list";
    case T::word:
      return "word";
    case T::value_lit:
      return "value";
    case T::none:
      return "nothing";
  }
  return "?";
}

struct Sig {
  std::string name;
  T result = T::none;
  std::vector<T> params;
  std::size_t min_args = 0;
  bool variadic = false;  // the last parameter repeats
  std::vector<std::pair<std::string, T>> keys;
  std::vector<std::string> required_keys;
  bool needs_on = false;
};

Sig sig(std::string name, T result, std::vector<T> params, std::vector<std::pair<std::string, T>> keys = {},
        bool needs_on = false) {
  Sig s;
  s.name = std::move(name);
  s.result = result;
  s.min_args = params.size();
  s.params = std::move(params);
  s.keys = std::move(keys);
  s.needs_on = needs_on;
  return s;
}

const std::map<std::string, Sig>& constructors() {
  static const std::map<std::string, Sig> table = [] {
    std::map<std::string, Sig> m;
    auto add = [&](Sig s) { m.emplace(s.name, std::move(s)); };
    {
      Sig s = sig("poly", T::ring, {T::ring, T::words});
      s.variadic = true;
      add(s);
    }
    add(sig("frac", T::ring, {T::ring}));
    add(sig("padic", T::val, {T::integer}, {}, true));
    add(sig("trivial", T::val, {}, {{"support", T::integer}}, true));
    add(sig("gauss", T::val, {T::val}, {{"gamma", T::value_lit}}, true));
    add(sig("degree", T::val, {}, {}, true));
    add(sig("frac_val", T::val, {T::val}));
    add(sig("composite", T::val, {T::val, T::val}));
    add(sig("quotient", T::val, {T::val, T::val}));
    add(sig("scaled", T::val, {T::val, T::integer}));
    for (const char* n : {"standard", "at_origin", "zero_plus", "flipped"}) add(sig(n, T::qo, {}, {}, true));
    {
      Sig s = sig("at_infinity", T::qo, {T::integer}, {}, true);
      s.min_args = 0;
      add(s);
    }
    add(sig("from_val", T::qo, {T::val}));
    add(sig("frac_qo", T::qo, {T::qo}));
    add(sig("residue", T::qo, {T::qo, T::val}));
    {
      Sig s = sig("liftdata", T::lift, {T::val}, {{"eta", T::ints}, {"residue", T::qo}, {"pis", T::strings}});
      s.required_keys = {"residue"};
      add(s);
    }
    add(sig("lift", T::qo, {T::lift}));
    add(sig("lift_displayed", T::qo, {T::lift}));
    {
      Sig s = sig("ring_lift", T::qo, {T::val}, {{"eta", T::ints}, {"residue", T::qo}});
      s.required_keys = {"residue"};
      add(s);
    }
    add(sig("mu", T::qo, {T::qo, T::val}));
    return m;
  }();
  return table;
}

const std::map<std::string, Sig>& checks() {
  static const std::map<std::string, Sig> table = [] {
    std::map<std::string, Sig> m;
    auto add = [&](Sig s) { m.emplace(s.name, std::move(s)); };
    add(sig("val_axioms", T::none, {T::val}));
    add(sig("qo_axioms", T::none, {T::qo}));
    add(sig("lemmas", T::none, {T::qo}));
    add(sig("classify", T::none, {T::qo}));
    add(sig("compat", T::none, {T::val, T::qo}));
    {
      Sig s = sig("convex", T::none, {T::qo, T::val}, {{"set", T::word}});
      s.required_keys = {"set"};
      add(s);
    }
    add(sig("iv_below_one", T::none, {T::val, T::qo}));
    add(sig("conditions", T::none, {T::qo, T::val}, {{"label", T::element}}));
    add(sig("theorem", T::none, {T::qo, T::val}));
    add(sig("local", T::none, {T::val, T::qo}));
    add(sig("value", T::none, {T::val, T::element, T::value_lit}));
    add(sig("equivalent", T::none, {T::val, T::val}));
    add(sig("coarsening", T::none, {T::val, T::val}));
    add(sig("well_defined", T::none, {T::val, T::val}));
    add(sig("agree_val", T::none, {T::val, T::val}));
    add(sig("agree", T::none, {T::qo, T::qo}));
    add(sig("special_star", T::none, {T::val}));
    {
      Sig s = sig("rank", T::none, {T::qo, T::val}, {{"expect", T::integer}});
      s.variadic = true;
      add(s);
    }
    add(sig("qofield", T::none, {T::qo, T::val}));
    add(sig("roundtrip", T::none, {T::lift}));
    add(sig("reconstruct", T::none, {T::qo, T::val}));
    add(sig("lift_props", T::none, {T::lift}));
    add(sig("injectivity", T::none, {T::lift, T::lift}));
    add(sig("manis_transfer", T::none, {T::val, T::val}));
    {
      Sig s = sig("ring_lift", T::none, {T::val}, {{"eta", T::ints}, {"residue", T::qo}});
      s.required_keys = {"residue"};
      add(s);
    }
    {
      Sig s = sig("dominates", T::none, {T::qo, T::element}, {{"bound", T::integer}});
      s.required_keys = {"bound"};
      add(s);
    }
    return m;
  }();
  return table;
}

const std::vector<std::pair<std::string, T>>& sample_keys() {
  static const std::vector<std::pair<std::string, T>> keys = {{"count", T::integer},  {"seed", T::integer},
                                                              {"pool", T::integer},   {"height", T::integer},
                                                              {"degree", T::integer}, {"include", T::strings}};
  return keys;
}

// ---------------------------------------------------------------- type checking

using TypeEnv = std::map<std::string, T>;

class Checker {
 public:
  void statement(const Stmt& st) {
    switch (st.kind) {
      case Stmt::Kind::let: {
        if (env_.count(st.name)) throw ParseError(st.pos, "'" + st.name + "' is already bound");
        const bool has_on = st.on.has_value();
        if (has_on) {
          T r = type_of(*st.on, false);
          if (r != T::ring) throw ParseError(st.on->pos, "'on' needs a ring, got " + type_name(r));
        }
        T t = type_of(st.value, has_on);
        if (has_on && !(st.value.kind == Expr::Kind::call && constructors().at(st.value.text).needs_on))
          throw ParseError(st.on->pos, "'" + st.value.text + "' does not take an 'on' ring");
        env_[st.name] = t;
        break;
      }
      case Stmt::Kind::check: {
        auto it = checks().find(st.name);
        if (it == checks().end()) throw ParseError(st.pos, "unknown check '" + st.name + "'");
        call(it->second, st.args, st.pos, false);
        keys(sample_keys(), {}, st.samples, "samples");
        break;
      }
      case Stmt::Kind::show:
        if (!env_.count(st.name)) throw ParseError(st.pos, "unbound name '" + st.name + "'");
        break;
    }
  }

 T bound(const std::string& name) const { return env_.at(name); }

 private:
  T type_of(const Expr& e, bool has_on) {
    switch (e.kind) {
      case Expr::Kind::number:
        return T::integer;
      case Expr::Kind::string:
        return T::element;
      case Expr::Kind::words:
        return T::words;
      case Expr::Kind::list: {
        bool ints = true, strings = true;
        for (const auto& i : e.items) {
          ints = ints && i.kind == Expr::Kind::number;
          strings = strings && i.kind == Expr::Kind::string;
        }
        if (ints) return T::ints;
        if (strings) return T::strings;
        throw ParseError(e.pos, "lists hold only integers or only strings");
      }
      case Expr::Kind::name: {
        if (e.text == "Z" || e.text == "Q") return T::ring;
        auto it = env_.find(e.text);
        if (it == env_.end()) throw ParseError(e.pos, "unbound name '" + e.text + "'");
        return it->second;
      }
      case Expr::Kind::call: {
        auto it = constructors().find(e.text);
        if (it == constructors().end()) throw ParseError(e.pos, "unknown constructor '" + e.text + "'");
        if (it->second.needs_on && !has_on) throw ParseError(e.pos, "'" + e.text + "' needs an 'on' ring");
        call(it->second, e.args, e.pos, has_on);
        return it->second.result;
      }
    }
    return T::none;
  }

  bool accepts(T want, const Expr& e, bool has_on) {
    switch (want) {
      case T::word:
        return e.kind == Expr::Kind::name;
      case T::words:
        return e.kind == Expr::Kind::name || e.kind == Expr::Kind::words;
      case T::value_lit:
        return e.kind == Expr::Kind::number || e.kind == Expr::Kind::string || type_of(e, has_on) == T::ints;
      case T::ints:
      case T::strings:
        if (e.kind == Expr::Kind::list && e.items.empty()) return true;
        return type_of(e, has_on) == want;
      default:
        return type_of(e, has_on) == want;
    }
  }

  void call(const Sig& s, const std::vector<Arg>& args, SourcePos pos, bool has_on) {
    std::vector<const Arg*> positional, keyed;
    for (const auto& a : args) (a.key.empty() ? positional : keyed).push_back(&a);
    const std::size_t n = positional.size();
    const std::size_t max = s.params.size();
    if (n < s.min_args || (!s.variadic && n > max)) {
      std::string expect = std::to_string(s.min_args);
      if (s.variadic) expect = "at least " + expect;
      else if (max != s.min_args) expect += " to " + std::to_string(max);
      throw ParseError(pos, "'" + s.name + "' takes " + expect + " argument" + (max == 1 && !s.variadic ? "" : "s") +
                                ", got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const T want = s.params[std::min(i, max - 1)];
      const Expr& e = positional[i]->value;
      if (!accepts(want, e, has_on))
        throw ParseError(e.pos, "argument " + std::to_string(i + 1) + " of '" + s.name + "' must be " +
                                    type_name(want) + ", got " + describe(e, has_on));
    }
    keys(s.keys, s.required_keys, args, s.name, has_on);
  }

  void keys(const std::vector<std::pair<std::string, T>>& allowed, const std::vector<std::string>& required,
            const std::vector<Arg>& args, const std::string& owner, bool has_on = false) {
    std::vector<std::string> seen;
    for (const auto& a : args) {
      if (a.key.empty()) continue;
      if (std::find(seen.begin(), seen.end(), a.key) != seen.end())
        throw ParseError(a.value.pos, "duplicate key '" + a.key + "'");
      seen.push_back(a.key);
      auto it = std::find_if(allowed.begin(), allowed.end(), [&](const auto& k) { return k.first == a.key; });
      if (it == allowed.end()) throw ParseError(a.value.pos, "unknown key '" + a.key + "' for '" + owner + "'");
      if (!accepts(it->second, a.value, has_on))
        throw ParseError(a.value.pos, "key '" + a.key + "' of '" + owner + "' must be " + type_name(it->second) +
                                          ", got " + describe(a.value, has_on));
    }
    for (const auto& r : required)
      if (std::find(seen.begin(), seen.end(), r) == seen.end())
        throw ParseError(args.empty() ? SourcePos{} : args.front().value.pos,
                         "'" + owner + "' needs key '" + r + "'");
  }

  std::string describe(const Expr& e, bool has_on) { return type_name(type_of(e, has_on)); }

  TypeEnv env_;
};

}  // namespace

SessionAst parse_session(const std::string& text) {
  SessionAst ast = Parser(lex(text)).session();
  Checker checker;
  for (const auto& st : ast.statements) checker.statement(st);
  return ast;
}

std::vector<std::pair<std::string, std::string>> binding_kinds(const SessionAst& ast) {
  Checker checker;
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& st : ast.statements) {
    checker.statement(st);
    if (st.kind == Stmt::Kind::let) out.emplace_back(st.name, type_name(checker.bound(st.name)));
  }
  return out;
}

// ---------------------------------------------------------------- interpreter

namespace {

using Object = std::variant<RingPtr, ValuationPtr, QuasiOrderPtr, LiftData>;

std::string expr_text(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::name:
      return e.text;
    case Expr::Kind::string:
      return "\"" + e.text + "\"";
    case Expr::Kind::words: {
      std::string s;
      for (const auto& i : e.items) s += (s.empty() ? "" : " ") + i.text;
      return s;
    }
    case Expr::Kind::list: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.items.size(); ++i) s += (i ? ", " : "") + expr_text(e.items[i]);
      return s + "]";
    }
    case Expr::Kind::call: {
      std::string s = e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        s += i ? ", " : "";
        if (!e.args[i].key.empty()) s += e.args[i].key + "=";
        s += expr_text(e.args[i].value);
      }
      return s + ")";
    }
  }
  return "";
}

long to_long(const Expr& e) {
  Integer n(e.text);
  if (!n.fits_slong_p()) throw std::invalid_argument("integer " + e.text + " is out of range");
  return n.get_si();
}

std::size_t to_size(const Expr& e, std::size_t cap) {
  long n = to_long(e);
  if (n < 0 || static_cast<std::size_t>(n) > cap)
    throw std::invalid_argument(e.text + " is outside 0.." + std::to_string(cap));
  return static_cast<std::size_t>(n);
}

const Expr* key_arg(const std::vector<Arg>& args, const std::string& key) {
  for (const auto& a : args)
    if (a.key == key) return &a.value;
  return nullptr;
}

std::vector<const Expr*> positional(const std::vector<Arg>& args) {
  std::vector<const Expr*> out;
  for (const auto& a : args)
    if (a.key.empty()) out.push_back(&a.value);
  return out;
}

EtaVector eta_of(const Expr* e, std::size_t size) {
  if (!e) return EtaVector(size, 1);
  EtaVector out;
  for (const auto& i : e->items) out.push_back(static_cast<int>(to_long(i)));
  return out;
}

std::string value_text(const Expr& e) {
  if (e.kind != Expr::Kind::list) return e.text;
  std::string s = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) s += (i ? "," : "") + e.items[i].text;
  return s + ")";
}

constexpr std::size_t kMaxSamples = 1000000;

struct Sampling {
  SampleSpec spec;
  Sweep sweep;
};

class Interpreter {
 public:
  explicit Interpreter(const RunOptions& options) : opt_(options) { result_.report.seed = options.seed; }

  SessionResult run(const SessionAst& ast) {
    for (const auto& st : ast.statements) {
      if (st.kind == Stmt::Kind::let) {
        try {
          RingPtr on = st.on ? ring(eval(*st.on, nullptr)) : nullptr;
          env_[st.name] = eval(st.value, on);
        } catch (const std::exception& e) {
          Finding f;
          f.name = "precondition";
          f.status = Status::fail;
          f.detail = e.what();
          result_.report.checks.push_back(make_entry(f, "let " + st.name, opt_.seed));
          result_.halted = true;
          break;
        }
      } else if (st.kind == Stmt::Kind::show) {
        result_.report.shown.push_back(show(st.name, env_.at(st.name)));
      } else {
        check(st);
      }
    }
    return std::move(result_);
  }

 private:
  // ---- objects

  static RingPtr ring(const Object& o) { return std::get<RingPtr>(o); }
  static ValuationPtr val(const Object& o) { return std::get<ValuationPtr>(o); }
  static QuasiOrderPtr qo(const Object& o) { return std::get<QuasiOrderPtr>(o); }
  static const LiftData& lift_of(const Object& o) { return std::get<LiftData>(o); }

  static RingPtr ring_of(const Object& o) {
    if (auto r = std::get_if<RingPtr>(&o)) return *r;
    if (auto v = std::get_if<ValuationPtr>(&o)) return (*v)->ring;
    if (auto q = std::get_if<QuasiOrderPtr>(&o)) return (*q)->ring;
    return std::get<LiftData>(o).basis.valuation->ring;
  }

  Sampling defaults() const {
    Sampling s;
    s.spec.seed = opt_.seed;
    s.spec.count = opt_.samples;
    s.sweep.seed = opt_.seed;
    s.sweep.budget = opt_.samples;
    return s;
  }

  Object eval(const Expr& e, const RingPtr& on) {
    switch (e.kind) {
      case Expr::Kind::name:
        if (e.text == "Z") return Ring::integers();
        if (e.text == "Q") return Ring::rationals();
        return env_.at(e.text);
      case Expr::Kind::call:
        return construct(e, on);
      default:
        throw std::logic_error("not an object: " + expr_text(e));
    }
  }

  Object construct(const Expr& e, const RingPtr& on) {
    const auto pos = positional(e.args);
    auto arg = [&](std::size_t i) { return eval(*pos.at(i), on); };
    const std::string& f = e.text;
    if (f == "poly") {
      std::vector<std::string> vars;
      for (std::size_t i = 1; i < pos.size(); ++i) {
        if (pos[i]->kind == Expr::Kind::words)
          for (const auto& w : pos[i]->items) vars.push_back(w.text);
        else
          vars.push_back(pos[i]->text);
      }
      return Ring::polynomial(ring(arg(0)), vars);
    }
    if (f == "frac") return Ring::fraction(ring(arg(0)));
    if (f == "padic") return padic(Integer(pos[0]->text), on);
    if (f == "trivial") {
      const Expr* s = key_arg(e.args, "support");
      return trivial(on, s ? Ideal::principal(Integer(s->text)) : Ideal::zero());
    }
    if (f == "gauss") {
      std::vector<Value> gammas;
      if (const Expr* g = key_arg(e.args, "gamma")) {
        if (g->kind == Expr::Kind::list)
          for (const auto& i : g->items) gammas.push_back(parse_value(i.text));
        else
          gammas.push_back(parse_value(g->text));
      } else {
        gammas.assign(on->nvars(), Value::of(0));
      }
      return gauss_extend(val(arg(0)), on, gammas);
    }
    if (f == "degree") return degree_valuation(on);
    if (f == "frac_val") return frac_extend_val(val(arg(0)));
    if (f == "composite") return composite(val(arg(0)), val(arg(1)));
    if (f == "quotient") return quotient_val(val(arg(0)), val(arg(1)));
    if (f == "scaled") return scaled(val(arg(0)), to_long(*pos[1]));
    if (f == "standard") return from_sign_order(sign_standard(on));
    if (f == "at_origin") return from_sign_order(sign_at_origin(on));
    if (f == "at_infinity") return from_sign_order(sign_at_infinity(on, pos.empty() ? 1 : static_cast<int>(to_long(*pos[0]))));
    if (f == "zero_plus") return from_sign_order(sign_at_zero_plus(on));
    if (f == "flipped") return from_sign_order(sign_flipped(on));
    if (f == "from_val") return from_valuation(val(arg(0)));
    if (f == "frac_qo") return frac_extend_qo(qo(arg(0)));
    if (f == "residue") {
      QuasiOrderPtr q = qo(arg(0));
      ValuationPtr v = val(arg(1));
      Sampling s = defaults();
      Finding c = is_compatible(*v, *q, condition_pool(*v, generate(v->ring, s.spec)), s.sweep);
      if (!c.ok())
        throw PreconditionError("residue: " + q->name + " is not compatible with " + v->name + ", witness " +
                                format_witness(c.witness));
      return residue_qo(q, v);
    }
    if (f == "liftdata") {
      ValuationPtr v = val(arg(0));
      BasisData b = basis_data(v);
      if (const Expr* p = key_arg(e.args, "pis")) {
        std::vector<Element> pis;
        for (const auto& i : p->items) pis.push_back(parse_element(v->ring, i.text));
        b = basis_data(v, pis);
      }
      const std::size_t n = b.pis.size();
      return lift_data(b, eta_of(key_arg(e.args, "eta"), n), qo(eval(*key_arg(e.args, "residue"), on)));
    }
    if (f == "lift") return qord::lift(lift_of(arg(0)));
    if (f == "lift_displayed") return lift_displayed(lift_of(arg(0)));
    if (f == "ring_lift") return ring_lift(e, on).order;
    if (f == "mu") {
      ValuationPtr v = val(arg(1));
      Sampling s = defaults();
      return mu_restrict(qo(arg(0)), v, generate(v->ring, s.spec), s.sweep);
    }
    throw std::logic_error("unknown constructor " + f);
  }

  RingLift ring_lift(const Expr& e, const RingPtr& on, const Sampling* sampling = nullptr) {
    const auto pos = positional(e.args);
    ValuationPtr v = val(eval(*pos[0], on));
    QuasiOrderPtr r = qo(eval(*key_arg(e.args, "residue"), on));
    Sampling s = sampling ? *sampling : defaults();
    const std::size_t n = v->manis ? v->group.rank() : frac_extend_val(v)->group.rank();
    return bk3_lift(v, eta_of(key_arg(e.args, "eta"), n), r, generate(v->ring, s.spec), s.sweep);
  }

  static std::string yes_no(bool b) { return b ? "yes" : "no"; }

  static std::string show(const std::string& name, const Object& o) {
    if (auto r = std::get_if<RingPtr>(&o)) return name + " = ring " + (*r)->describe();
    if (auto v = std::get_if<ValuationPtr>(&o)) {
      const Valuation& x = **v;
      return name + " = valuation " + x.name + " on " + x.ring->describe() + ", group " + x.group.describe() +
             ", manis " + yes_no(x.manis) + ", local " + yes_no(x.local);
    }
    if (auto q = std::get_if<QuasiOrderPtr>(&o)) {
      const QuasiOrder& x = **q;
      std::string cls = x.declared ? to_string(*x.declared) : "undeclared";
      return name + " = quasi-order " + x.name + " on " + x.ring->describe() + ", " + x.provenance + ", " + cls;
    }
    const LiftData& l = std::get<LiftData>(o);
    return name + " = lift data over " + l.basis.valuation->name + ", eta " + to_string(l.eta) + ", residue " +
           l.residue_qo->name;
  }

  // ---- checks

  Sampling sampling(const Stmt& st, const RingPtr& r) const {
    Sampling s = defaults();
    if (const Expr* e = key_arg(st.samples, "count")) {
      s.spec.count = to_size(*e, kMaxSamples);
      s.sweep.budget = s.spec.count;
    }
    if (const Expr* e = key_arg(st.samples, "seed")) {
      Integer n(e->text);
      if (n < 0 || !n.fits_ulong_p()) throw std::invalid_argument("seed " + e->text + " is out of range");
      s.spec.seed = s.sweep.seed = n.get_ui();
    }
    if (const Expr* e = key_arg(st.samples, "pool")) s.spec.count = to_size(*e, kMaxSamples);
    if (const Expr* e = key_arg(st.samples, "height")) s.spec.bounds.height = s.spec.bounds.den_height = Integer(e->text);
    if (const Expr* e = key_arg(st.samples, "degree")) s.spec.bounds.degree = static_cast<unsigned>(to_size(*e, 64));
    if (const Expr* e = key_arg(st.samples, "include"))
      for (const auto& i : e->items) s.spec.distinguished.push_back(parse_element(r, i.text));
    return s;
  }

  void check(const Stmt& st) {
    std::string label = st.name + "(";
    for (std::size_t i = 0; i < st.args.size(); ++i) {
      label += i ? ", " : "";
      if (!st.args[i].key.empty()) label += st.args[i].key + "=";
      label += expr_text(st.args[i].value);
    }
    label += ")";
    std::uint64_t seed = opt_.seed;
    const auto start = std::chrono::steady_clock::now();
    std::vector<Finding> findings;
    try {
      const auto pos = positional(st.args);
      std::vector<Object> objs;
      for (const Expr* e : pos)
        if (e->kind == Expr::Kind::name || e->kind == Expr::Kind::call) objs.push_back(eval(*e, nullptr));
      const RingPtr r = ring_of(objs.at(0));
      Sampling s = sampling(st, r);
      seed = s.sweep.seed;
      findings = run_check(st, objs, r, s);
    } catch (const PreconditionError& e) {
      findings = {Finding{"precondition", Status::inconclusive, {}, e.what(), 0}};
    } catch (const std::exception& e) {
      findings = {Finding{"error", Status::fail, {}, e.what(), 0}};
    }
    std::int64_t ms = 0;
    if (opt_.timing)
      ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    for (const auto& f : findings) result_.report.checks.push_back(make_entry(f, label + ": " + f.name, seed, ms));
  }

  std::vector<Finding> run_check(const Stmt& st, const std::vector<Object>& o, const RingPtr& r, const Sampling& s) {
    const std::string& c = st.name;
    const auto pos = positional(st.args);
    const std::vector<Element> pool = generate(r, s.spec);
    const Sweep& sw = s.sweep;
    if (c == "val_axioms") return check_val_axioms(*val(o[0]), pool, sw).items;
    if (c == "qo_axioms") return check_qo_axioms(*qo(o[0]), pool, sw).items;
    if (c == "lemmas") return check_derived_lemmas(*qo(o[0]), pool, sw).items;
    if (c == "classify") return {classify_check(*qo(o[0]))};
    if (c == "compat") {
      ValuationPtr v = val(o[0]);
      return {is_compatible(*v, *qo(o[1]), condition_pool(*v, pool), sw)};
    }
    if (c == "convex") {
      QuasiOrderPtr q = qo(o[0]);
      ValuationPtr v = val(o[1]);
      const std::string set = key_arg(st.args, "set")->text;
      if (set == "ring")
        return {is_convex("R_v convex", [&](const Element& x) { return v->in_ring(x); }, *q, condition_pool(*v, pool), sw)};
      if (set == "ideal")
        return {is_convex("I_v convex", [&](const Element& x) { return v->in_ideal(x); }, *q, condition_pool(*v, pool), sw)};
      throw std::invalid_argument("set must be 'ring' or 'ideal', got '" + set + "'");
    }
    if (c == "iv_below_one") {
      ValuationPtr v = val(o[0]);
      return {iv_below_one(*v, *qo(o[1]), condition_pool(*v, pool), sw)};
    }
    if (c == "conditions") {
      CompatReport rep = conditions(qo(o[0]), val(o[1]), pool, sw);
      const Expr* l = key_arg(st.args, "label");
      result_.conditions.push_back({l ? l->text : "", rep.flags});
      std::vector<Finding> out;
      for (std::size_t i = 0; i < 5; ++i) {
        Finding f = rep.evidence[i];
        f.name = "(" + std::to_string(i + 1) + ") " + f.name;
        out.push_back(std::move(f));
      }
      return out;
    }
    if (c == "theorem") return theorem_report(qo(o[0]), val(o[1]), pool, sw).findings.items;
    if (c == "local") return iv_prec_one(val(o[0]), qo(o[1]), pool, sw).items;
    if (c == "value") {
      ValuationPtr v = val(o[0]);
      Element x = parse_element(v->ring, pos[1]->text);
      const Value want = parse_value(value_text(*pos[2]));
      const Value got = (*v)(x);
      Finding f{expr_text(*pos[0]) + "(" + x.to_string() + ")", Status::pass, {}, "", 1};
      f.detail = v->name + "(" + x.to_string() + ") = " + got.to_string();
      if (got != want) {
        f.status = Status::fail;
        f.witness = {x};
        f.detail += ", expected " + want.to_string();
      }
      return {f};
    }
    if (c == "equivalent") return {equivalent_check(*val(o[0]), *val(o[1]), pool, sw)};
    if (c == "coarsening") {
      CoarseningReport rep = coarsening_check(*val(o[0]), *val(o[1]), pool, sw);
      std::vector<Finding> out = rep.findings.items;
      out.push_back({"coarsening", rep.coarsening ? Status::pass : Status::fail, {}, "", rep.findings.samples_used()});
      return out;
    }
    if (c == "well_defined") return quotient_well_defined(*val(o[0]), *val(o[1]), pool, sw).items;
    if (c == "agree_val") {
      ValuationPtr a = val(o[0]), b = val(o[1]);
      std::string detail;
      Finding f = sweep_singles("values agree", sw, pool, [&](const Element& x) {
        const Value va = (*a)(x), vb = (*b)(x);
        if (va == vb) return false;
        detail = a->name + " = " + va.to_string() + ", " + b->name + " = " + vb.to_string();
        return true;
      });
      if (f.detail.empty()) f.detail = detail;
      return {f};
    }
    if (c == "agree") return {agreement("agree", *qo(o[0]), *qo(o[1]), pool, sw)};
    if (c == "special_star") return {special_star_check(val(o[0]), pool, sw)};
    if (c == "rank") {
      std::vector<ValuationPtr> cands;
      for (std::size_t i = 1; i < o.size(); ++i) cands.push_back(val(o[i]));
      RankReport rep = rank(qo(o[0]), cands, pool, sw);
      std::vector<Finding> out = rep.findings.items;
      std::string chain;
      for (const auto& n : rep.chain) chain += (chain.empty() ? "" : " < ") + n;
      Finding f{"rank", Status::pass, {}, "rank " + std::to_string(rep.rank), rep.findings.samples_used()};
      if (!chain.empty()) f.detail += ", chain " + chain;
      if (const Expr* want = key_arg(st.args, "expect")) {
        if (static_cast<long>(rep.rank) != to_long(*want)) {
          f.status = Status::fail;
          f.detail += ", expected " + want->text;
        }
      }
      out.push_back(f);
      return out;
    }
    if (c == "qofield") return associated_qofield(qo(o[0]), val(o[1]), pool, sw).findings.items;
    if (c == "roundtrip") return roundtrip_check(lift_of(o[0]), pool, sw).items;
    if (c == "reconstruct") return reconstruct_check(qo(o[0]), basis_data(val(o[1])), pool, sw).items;
    if (c == "lift_props") return lift_properties(lift_of(o[0]), pool, sw).items;
    if (c == "injectivity") return {injectivity_check(lift_of(o[0]), lift_of(o[1]), pool, sw)};
    if (c == "manis_transfer") return {manis_transfer_check(val(o[0]), val(o[1]))};
    if (c == "ring_lift") {
      Expr call;
      call.kind = Expr::Kind::call;
      call.text = "ring_lift";
      call.args = st.args;
      return ring_lift(call, nullptr, &s).findings.items;
    }
    if (c == "dominates") return {dominates(qo(o[0]), pos[1]->text, *key_arg(st.args, "bound"), s)};
    throw std::logic_error("unknown check " + c);
  }

  // x strictly above every sampled integer n with |n| <= bound.
  static Finding dominates(const QuasiOrderPtr& q, const std::string& text, const Expr& bound_expr, const Sampling& s) {
    const Element x = parse_element(q->ring, text);
    const Integer bound(bound_expr.text);
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    std::vector<Element> ns;
    for (const Integer& n : {Integer(0), Integer(1), Integer(-1), bound, Integer(-bound)})
      merge_unique(ns, {q->ring->from_integer(n)});
    Rng rng(s.sweep.seed);
    for (std::size_t i = 0; i < s.sweep.budget; ++i) ns.push_back(q->ring->from_integer(rng.between(-bound, bound)));
    Finding f = sweep_singles("dominates", s.sweep, ns, [&](const Element& n) { return !q->strict(n, x); });
    if (f.ok()) f.detail = x.to_string() + " above every sampled n with |n| <= " + bound.get_str();
    else if (f.detail.empty()) f.detail = "not " + f.witness[0].to_string() + " < " + x.to_string();
    return f;
  }

  RunOptions opt_;
  std::map<std::string, Object> env_;
  SessionResult result_;
};

}  // namespace

SessionResult run_session(const SessionAst& ast, const RunOptions& options) {
  return Interpreter(options).run(ast);
}

}  // namespace qord
