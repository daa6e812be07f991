#include <cctype>
#include <set>
#include <sstream>

#include "osg/conjecture.hpp"

namespace osg {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t start_line = line, start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start_line, start_col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), start_line, start_col});
      advance(j - i);
    } else if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Sym, "<=", start_line, start_col});
      advance(2);
    } else if (std::string_view("():{}^*&|=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), start_line, start_col});
      advance(1);
    } else {
      throw ParseError(ErrorKind::SyntaxError,
                       std::to_string(start_line) + ":" + std::to_string(start_col) + ": unexpected character '" +
                           std::string(1, c) + "'",
                       start_line, start_col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::set<std::string, std::less<>> kReserved = {"forall", "in", "where", "and", "cl", "S"};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Conjecture conjecture() {
    Conjecture c;
    binder(c);
    while (peek_ident("forall")) binder(c);
    if (peek_ident("where")) {
      next();
      c.guard = guard();
    }
    expect_sym(":", {"'forall'", "'where'", "':'"});
    c.body.push_back(relation());
    while (peek_ident("and")) {
      next();
      c.body.push_back(relation());
    }
    if (peek().kind != Tok::End) fail(peek(), {"'and'", "end of input"});
    return c;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool peek_ident(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool peek_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }

  [[noreturn]] void fail(const Token& at, std::vector<std::string> expected) const {
    std::ostringstream os;
    os << at.line << ":" << at.column << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? (i + 1 == expected.size() ? " or " : ", ") : "") << expected[i];
    os << ", found " << describe(at);
    throw ParseError(ErrorKind::SyntaxError, os.str(), at.line, at.column, std::move(expected));
  }

  [[noreturn]] void fail_at(ErrorKind kind, const Token& at, const std::string& msg) const {
    throw ParseError(kind, std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg, at.line,
                     at.column);
  }

  void expect_sym(std::string_view s, std::vector<std::string> expected) {
    if (!peek_sym(s)) fail(peek(), std::move(expected));
    next();
  }

  void expect_ident(std::string_view w) {
    if (!peek_ident(w)) fail(peek(), {"'" + std::string(w) + "'"});
    next();
  }

  void binder(Conjecture& c) {
    expect_ident("forall");
    const Token& name = peek();
    if (name.kind != Tok::Ident || kReserved.contains(name.text)) fail(name, {"variable name"});
    next();
    for (const Quantifier& q : c.binders)
      if (q.name == name.text) fail_at(ErrorKind::DuplicateBinder, name, "variable '" + name.text + "' bound twice");
    expect_ident("in");
    Quantifier q;
    q.name = name.text;
    const Token& r = peek();
    if (peek_ident("all")) {
      q.domain = Domain::AllSubsets;
      next();
    } else if (peek_ident("downclosed")) {
      q.domain = Domain::DownClosed;
      next();
    } else if (peek_ident("elements")) {
      q.domain = Domain::Elements;
      next();
    } else if (peek_ident("kind")) {
      next();
      expect_sym("(", {"'('"});
      const Token& k = peek();
      const auto kind = k.kind == Tok::Ident ? parse_kind(k.text) : std::nullopt;
      if (!kind)
        fail(k, {"m_left", "m_right", "m_two_sided", "m_quasi", "m_bi", "m_interior", "m_bi_interior"});
      next();
      q.domain = Domain::Ideals;
      q.kind = *kind;
      expect_sym(")", {"')'"});
    } else {
      fail(r, {"'all'", "'downclosed'", "'elements'", "'kind'"});
    }
    c.binders.push_back(std::move(q));
    scope_ = &c.binders;
  }

  Guard guard() {
    static const std::pair<const char*, Guard> kGuards[] = {{"regular", Guard::Regular},
                                                            {"simple", Guard::Simple},
                                                            {"left_simple", Guard::LeftSimple},
                                                            {"right_simple", Guard::RightSimple},
                                                            {"biint_simple", Guard::BiIntSimple}};
    for (auto [word, g] : kGuards)
      if (peek_ident(word)) {
        next();
        return g;
      }
    fail(peek(), {"'regular'", "'simple'", "'left_simple'", "'right_simple'", "'biint_simple'"});
  }

  Comparison relation() {
    Comparison r;
    r.lhs = expr();
    if (peek_sym("<=")) {
      r.op = RelOp::Contained;
    } else if (peek_sym("=")) {
      r.op = RelOp::Equal;
    } else {
      fail(peek(), {"'<='", "'='", "'|'", "'&'", "'*'", "'^'"});
    }
    next();
    r.rhs = expr();
    return r;
  }

  SetExpr expr() {
    SetExpr e = term();
    while (peek_sym("|")) {
      next();
      e = SetExpr::join(std::move(e), term());
    }
    return e;
  }

  SetExpr term() {
    SetExpr e = factor();
    while (peek_sym("&")) {
      next();
      e = SetExpr::meet(std::move(e), factor());
    }
    return e;
  }

  SetExpr factor() {
    SetExpr e = atom();
    while (peek_sym("*")) {
      next();
      e = SetExpr::product(std::move(e), atom());
    }
    return e;
  }

  const Quantifier* lookup(const std::string& name) const {
    if (scope_ == nullptr) return nullptr;
    for (const Quantifier& q : *scope_)
      if (q.name == name) return &q;
    return nullptr;
  }

  SetExpr atom() {
    SetExpr e = primary();
    while (peek_sym("^")) {
      next();
      const Token& t = peek();
      if (t.kind == Tok::Int) {
        unsigned long k = 0;
        try {
          k = std::stoul(t.text);
        } catch (const std::exception&) {
          k = 0;
        }
        if (k < 1 || k > 1000) fail_at(ErrorKind::SyntaxError, t, "exponent must be a positive integer");
        e = SetExpr::power(std::move(e), static_cast<unsigned>(k));
      } else if (t.kind == Tok::Ident && t.text == "M") {
        e = SetExpr::power(std::move(e), 0);
      } else {
        fail(t, {"integer", "'M'"});
      }
      next();
    }
    return e;
  }

  SetExpr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "S") {
      next();
      return SetExpr::universe();
    }
    if (t.kind == Tok::Ident && t.text == "cl") {
      next();
      expect_sym("(", {"'('"});
      SetExpr inner = expr();
      expect_sym(")", {"')'", "'|'", "'&'", "'*'", "'^'"});
      return SetExpr::closure(std::move(inner));
    }
    if (peek_sym("(")) {
      next();
      SetExpr inner = expr();
      expect_sym(")", {"')'", "'|'", "'&'", "'*'", "'^'"});
      return inner;
    }
    if (peek_sym("{")) {
      next();
      const Token& v = peek();
      if (v.kind != Tok::Ident || kReserved.contains(v.text)) fail(v, {"element variable"});
      const Quantifier* q = lookup(v.text);
      if (q == nullptr) fail_at(ErrorKind::UnboundVariable, v, "unbound variable '" + v.text + "'");
      if (q->sort() != Sort::Element)
        fail_at(ErrorKind::SyntaxError, v, "'" + v.text + "' is a subset variable; {..} needs an element variable");
      next();
      expect_sym("}", {"'}'"});
      return SetExpr::singleton(v.text);
    }
    if (t.kind == Tok::Ident && !kReserved.contains(t.text)) {
      const Quantifier* q = lookup(t.text);
      if (q == nullptr) fail_at(ErrorKind::UnboundVariable, t, "unbound variable '" + t.text + "'");
      if (q->sort() != Sort::Subset)
        fail_at(ErrorKind::SyntaxError, t, "'" + t.text + "' is an element variable; write {" + t.text + "}");
      next();
      return SetExpr::var(t.text);
    }
    fail(t, {"'S'", "variable", "'{'", "'cl'", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<Quantifier>* scope_ = nullptr;
};

std::string format_range(const Quantifier& q) {
  switch (q.domain) {
    case Domain::AllSubsets: return "all";
    case Domain::DownClosed: return "downclosed";
    case Domain::Elements: return "elements";
    case Domain::Ideals: return "kind(" + std::string(kind_name(q.kind)) + ")";
    case Domain::NonemptySubsets:
    case Domain::Subsemigroups: break;
  }
  throw Error(ErrorKind::SyntaxError, "domain has no concrete syntax");
}

const char* guard_word(Guard g) {
  switch (g) {
    case Guard::Regular: return "regular";
    case Guard::Simple: return "simple";
    case Guard::LeftSimple: return "left_simple";
    case Guard::RightSimple: return "right_simple";
    case Guard::BiIntSimple: return "biint_simple";
    case Guard::None: break;
  }
  return "";
}

}  // namespace

Conjecture parse_conjecture(std::string_view text) { return Parser(text).conjecture(); }

std::string format_expr(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::Universe: return "S";
    case ExprKind::Var: return e.name;
    case ExprKind::Singleton: return "{" + e.name + "}";
    case ExprKind::Closure: return "cl(" + format_expr(e.args[0]) + ")";
    case ExprKind::Power:
      return format_expr(e.args[0]) + "^" + (e.exponent == 0 ? std::string("M") : std::to_string(e.exponent));
    case ExprKind::Product: return "(" + format_expr(e.args[0]) + " * " + format_expr(e.args[1]) + ")";
    case ExprKind::Intersection: return "(" + format_expr(e.args[0]) + " & " + format_expr(e.args[1]) + ")";
    case ExprKind::Union: return "(" + format_expr(e.args[0]) + " | " + format_expr(e.args[1]) + ")";
  }
  return "";
}

std::string format_conjecture(const Conjecture& c) {
  std::string out;
  for (const Quantifier& q : c.binders) {
    if (!out.empty()) out += ' ';
    out += "forall " + q.name + " in " + format_range(q);
  }
  if (c.guard != Guard::None) out += std::string(" where ") + guard_word(c.guard);
  out += ":";
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    out += i == 0 ? " " : " and ";
    out += format_expr(c.body[i].lhs);
    out += c.body[i].op == RelOp::Contained ? " <= " : " = ";
    out += format_expr(c.body[i].rhs);
  }
  return out;
}

}  // namespace osg
