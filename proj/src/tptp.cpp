#include "hosup/tptp.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hosup {

ExprPtr make_expr(Expr::Kind k, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = std::move(args);
  return e;
}

ExprPtr make_var(std::string name, std::uint32_t id, Type type) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Var;
  e->name = std::move(name);
  e->var = id;
  e->type = std::move(type);
  return e;
}

ExprPtr make_const(std::string name, Type type, std::vector<Type> type_args) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Const;
  e->name = std::move(name);
  e->type = std::move(type);
  e->type_args = std::move(type_args);
  return e;
}

ExprPtr make_binder(Expr::Kind k, std::string name, std::uint32_t id, Type type, ExprPtr body) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->name = std::move(name);
  e->var = id;
  e->type = std::move(type);
  e->args.push_back(std::move(body));
  return e;
}

Type type_of(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Var:
    case K::Const:
      return e.type;
    case K::App:
      return type_of(*e.args[0]).to();
    case K::Lambda:
      return Type::arrow(e.type, type_of(*e.args[0]));
    default:
      return Type::boolean();
  }
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  if (static_cast<bool>(a.type) != static_cast<bool>(b.type)) return false;
  if (a.type && !(a.type == b.type)) return false;
  if (a.type_args.size() != b.type_args.size()) return false;
  for (std::size_t i = 0; i < a.type_args.size(); ++i)
    if (!(a.type_args[i] == b.type_args[i])) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_expr(*a.args[i], *b.args[i])) return false;
  return true;
}

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string quote_if_needed(const std::string& s) {
  if (is_lower_word(s) || (!s.empty() && s[0] == '$')) return s;
  std::string q = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') q += '\\';
    q += c;
  }
  return q + "'";
}

const char* binop(Expr::Kind k) {
  using K = Expr::Kind;
  switch (k) {
    case K::And: return " & ";
    case K::Or: return " | ";
    case K::Implies: return " => ";
    case K::Iff: return " <=> ";
    case K::Xor: return " <~> ";
    case K::Eq: return " = ";
    case K::Neq: return " != ";
    default: return nullptr;
  }
}

void print(const Expr& e, std::string& out) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Var:
      out += e.name;
      return;
    case K::Const:
      out += quote_if_needed(e.name);
      return;
    case K::True:
      out += "$true";
      return;
    case K::False:
      out += "$false";
      return;
    case K::App: {
      std::vector<const Expr*> spine;
      const Expr* h = &e;
      while (h->kind == K::App) {
        spine.push_back(h->args[1].get());
        h = h->args[0].get();
      }
      out += "(";
      print(*h, out);
      for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
        out += " @ ";
        print(**it, out);
      }
      out += ")";
      return;
    }
    case K::Lambda:
    case K::Forall:
    case K::Exists:
      out += e.kind == K::Lambda ? "(^ [" : (e.kind == K::Forall ? "(! [" : "(? [");
      out += e.name + ": " + e.type.to_string() + "]: ";
      print(*e.args[0], out);
      out += ")";
      return;
    case K::Not:
      out += "(~ ";
      print(*e.args[0], out);
      out += ")";
      return;
    default:
      out += "(";
      print(*e.args[0], out);
      out += binop(e.kind);
      print(*e.args[1], out);
      out += ")";
      return;
  }
}

}  // namespace

std::string to_thf(const Expr& e) {
  std::string s;
  print(e, s);
  return s;
}

bool Problem::has_conjecture() const {
  for (const auto& s : statements)
    if (s.role == Role::Conjecture) return true;
  return false;
}

ParseError::ParseError(const std::string& msg, int l, int c)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

namespace {

enum class Tok {
  Lower, Upper, Dollar, Quoted, Number, LParen, RParen, LBrack, RBrack, Comma, Dot, Colon,
  Arrow, Star, At, Lambda, Forall, Exists, Tilde, And, Or, Eq, Neq, Implies, RevImplies,
  Iff, Xor, Nor, Nand, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", line_, col_};
      if (i_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '$' || c == '_') {
        std::size_t st = i_;
        advance();
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
          advance();
        t.text = std::string(s_.substr(st, i_ - st));
        t.kind = c == '$' ? Tok::Dollar : (std::isupper(static_cast<unsigned char>(c)) || c == '_' ? Tok::Upper : Tok::Lower);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) advance();
        t.text = std::string(s_.substr(st, i_ - st));
        t.kind = Tok::Number;
      } else if (c == '\'') {
        advance();
        std::string v;
        for (;;) {
          if (i_ >= s_.size()) throw ParseError("unterminated quoted name", t.line, t.col);
          char d = s_[i_];
          advance();
          if (d == '\\' && i_ < s_.size()) {
            v += s_[i_];
            advance();
          } else if (d == '\'') {
            break;
          } else {
            v += d;
          }
        }
        t.text = v;
        t.kind = Tok::Quoted;
      } else {
        t.kind = punct(t);
      }
      out.push_back(t);
    }
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  bool starts(std::string_view p) const { return s_.substr(i_, p.size()) == p; }

  void skip_space() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
      if (i_ < s_.size() && s_[i_] == '%') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
        continue;
      }
      if (starts("/*")) {
        int l = line_, c = col_;
        advance();
        advance();
        while (i_ < s_.size() && !starts("*/")) advance();
        if (i_ >= s_.size()) throw ParseError("unterminated comment", l, c);
        advance();
        advance();
        continue;
      }
      return;
    }
  }

  Tok punct(Token& t) {
    static const std::pair<std::string_view, Tok> table[] = {
        {"<=>", Tok::Iff}, {"<~>", Tok::Xor}, {"=>", Tok::Implies}, {"<=", Tok::RevImplies},
        {"~|", Tok::Nor},  {"~&", Tok::Nand}, {"!=", Tok::Neq},     {"(", Tok::LParen},
        {")", Tok::RParen}, {"[", Tok::LBrack}, {"]", Tok::RBrack}, {",", Tok::Comma},
        {".", Tok::Dot},   {":", Tok::Colon}, {">", Tok::Arrow},    {"*", Tok::Star},
        {"@", Tok::At},    {"^", Tok::Lambda}, {"!", Tok::Forall},  {"?", Tok::Exists},
        {"~", Tok::Tilde}, {"&", Tok::And},   {"|", Tok::Or},       {"=", Tok::Eq},
    };
    for (const auto& [text, kind] : table) {
      if (starts(text)) {
        for (std::size_t k = 0; k < text.size(); ++k) advance();
        t.text = std::string(text);
        return kind;
      }
    }
    throw ParseError(std::string("unexpected character '") + s_[i_] + "'", line_, col_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Scope {
  std::string name;
  std::uint32_t id;
  Type type;
};

class Parser {
 public:
  Parser(Problem& p, std::string_view text, const ParseOptions& opts)
      : p_(p), toks_(Lexer(text).run()), opts_(opts) {}

  void run() {
    while (peek().kind != Tok::End) statement();
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.col);
  }
  [[noreturn]] void fail_here(const std::string& msg) const { fail(msg, peek()); }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) {
      const Token& t = peek();
      fail(std::string("expected ") + what + " but found " +
               (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'"),
           t);
    }
    return next();
  }

  void statement() {
    Token kw = next();
    if (kw.kind != Tok::Lower) fail("expected a statement", kw);
    if (kw.text == "include") return include(kw);
    if (kw.text != "thf") fail("unsupported construct: " + kw.text + " statements", kw);
    expect(Tok::LParen, "'('");
    Token name = next();
    if (name.kind != Tok::Lower && name.kind != Tok::Quoted && name.kind != Tok::Number &&
        name.kind != Tok::Upper)
      fail("expected a statement name", name);
    expect(Tok::Comma, "','");
    Token role = expect(Tok::Lower, "a role");
    expect(Tok::Comma, "','");
    if (role.text == "type") {
      type_declaration();
    } else {
      Statement st;
      st.name = name.text;
      st.role = parse_role(role);
      Token at = peek();
      st.formula = formula();
      if (!(type_of(*st.formula) == Type::boolean()))
        fail("statement is not a formula (type " + type_of(*st.formula).to_string() + ")", at);
      p_.statements.push_back(std::move(st));
    }
    if (peek().kind == Tok::Comma) fail_here("unsupported construct: annotations");
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
  }

  Role parse_role(const Token& t) const {
    static const std::map<std::string, Role> roles = {
        {"axiom", Role::Axiom},           {"hypothesis", Role::Hypothesis},
        {"definition", Role::Definition}, {"lemma", Role::Lemma},
        {"theorem", Role::Theorem},       {"conjecture", Role::Conjecture},
        {"negated_conjecture", Role::NegatedConjecture},
    };
    auto it = roles.find(t.text);
    if (it == roles.end()) fail("unsupported role " + t.text, t);
    return it->second;
  }

  void include(const Token& kw) {
    expect(Tok::LParen, "'('");
    Token file = expect(Tok::Quoted, "a quoted file name");
    if (peek().kind == Tok::Comma) fail_here("unsupported construct: include selection");
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
    std::filesystem::path path = opts_.include_root / file.text;
    std::ifstream in(path);
    if (!in) fail("cannot open include file " + path.string(), kw);
    std::stringstream ss;
    ss << in.rdbuf();
    ParseOptions sub = opts_;
    try {
      parse_into(p_, ss.str(), sub);
    } catch (const ParseError& e) {
      fail(std::string("in ") + path.string() + ": " + e.what(), kw);
    }
  }

  void type_declaration() {
    int parens = 0;
    while (peek().kind == Tok::LParen) {
      next();
      ++parens;
    }
    Token name = next();
    if (name.kind != Tok::Lower && name.kind != Tok::Quoted) fail("expected a symbol name", name);
    expect(Tok::Colon, "':'");
    if (peek().kind == Tok::Dollar && peek().text == "$tType") {
      next();
      if (p_.signature.has_type(name.text) || Signature::is_reserved(name.text))
        fail("type " + name.text + " declared twice", name);
      p_.signature.declare_type(name.text);
      p_.type_declarations.push_back(name.text);
    } else {
      Type ty = type();
      try {
        p_.signature.declare(name.text, TypeScheme{0, ty});
      } catch (const SignatureError& e) {
        fail(e.what(), name);
      }
      p_.declarations.emplace_back(name.text, ty);
    }
    for (; parens > 0; --parens) expect(Tok::RParen, "')'");
  }

  Type type() {
    Type lhs = type_atom();
    if (peek().kind == Tok::Arrow) {
      next();
      return Type::arrow(lhs, type());
    }
    if (peek().kind == Tok::Star) fail_here("unsupported construct: product types");
    return lhs;
  }

  Type type_atom() {
    Token t = next();
    if (t.kind == Tok::LParen) {
      Type inner = type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Dollar) {
      if (t.text == "$i") return Type::individual();
      if (t.text == "$o") return Type::boolean();
      if (t.text == "$tType") fail("unsupported construct: type operators", t);
      fail("unknown type " + t.text, t);
    }
    if (t.kind == Tok::Lower || t.kind == Tok::Quoted) {
      if (!p_.signature.has_type(t.text)) fail("undeclared type " + t.text, t);
      return Type::base(t.text);
    }
    if (t.kind == Tok::Exists || t.kind == Tok::Forall) fail("unsupported construct: polymorphic types", t);
    fail("expected a type", t);
  }

  // Formula layers, loosest first.
  ExprPtr formula() {
    ExprPtr lhs = disjunction();
    Tok k = peek().kind;
    if (k == Tok::Iff || k == Tok::Xor || k == Tok::Implies || k == Tok::RevImplies) {
      Token op = next();
      ExprPtr rhs = formula();
      check_bool(*lhs, op);
      check_bool(*rhs, op);
      switch (k) {
        case Tok::Iff: return at(make_expr(Expr::Kind::Iff, {lhs, rhs}), op);
        case Tok::Xor: return at(make_expr(Expr::Kind::Xor, {lhs, rhs}), op);
        case Tok::Implies: return at(make_expr(Expr::Kind::Implies, {lhs, rhs}), op);
        default: return at(make_expr(Expr::Kind::Implies, {rhs, lhs}), op);
      }
    }
    return lhs;
  }

  ExprPtr disjunction() {
    ExprPtr lhs = conjunction();
    while (peek().kind == Tok::Or || peek().kind == Tok::Nor) {
      Token op = next();
      ExprPtr rhs = conjunction();
      check_bool(*lhs, op);
      check_bool(*rhs, op);
      lhs = at(make_expr(Expr::Kind::Or, {lhs, rhs}), op);
      if (op.kind == Tok::Nor) lhs = at(make_expr(Expr::Kind::Not, {lhs}), op);
    }
    return lhs;
  }

  ExprPtr conjunction() {
    ExprPtr lhs = equation();
    while (peek().kind == Tok::And || peek().kind == Tok::Nand) {
      Token op = next();
      ExprPtr rhs = equation();
      check_bool(*lhs, op);
      check_bool(*rhs, op);
      lhs = at(make_expr(Expr::Kind::And, {lhs, rhs}), op);
      if (op.kind == Tok::Nand) lhs = at(make_expr(Expr::Kind::Not, {lhs}), op);
    }
    return lhs;
  }

  ExprPtr equation() {
    ExprPtr lhs = application();
    if (peek().kind == Tok::Eq || peek().kind == Tok::Neq) {
      Token op = next();
      ExprPtr rhs = application();
      Type a = type_of(*lhs), b = type_of(*rhs);
      if (!(a == b)) fail("type mismatch in equation: " + a.to_string() + " vs " + b.to_string(), op);
      return at(make_expr(op.kind == Tok::Eq ? Expr::Kind::Eq : Expr::Kind::Neq, {lhs, rhs}), op);
    }
    return lhs;
  }

  ExprPtr application() {
    ExprPtr fun = unary();
    while (peek().kind == Tok::At) {
      Token op = next();
      ExprPtr arg = unary();
      Type ft = type_of(*fun), at_ = type_of(*arg);
      if (!ft.is_arrow() || !(ft.from() == at_))
        fail("type mismatch in application: function of type " + ft.to_string() +
                 " applied to argument of type " + at_.to_string(),
             op);
      fun = at(make_expr(Expr::Kind::App, {fun, arg}), op);
    }
    return fun;
  }

  ExprPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde: {
        Token op = next();
        ExprPtr body = application();
        check_bool(*body, op);
        return at(make_expr(Expr::Kind::Not, {body}), op);
      }
      case Tok::Forall:
      case Tok::Exists:
      case Tok::Lambda:
        return binder();
      default:
        return atom();
    }
  }

  ExprPtr binder() {
    Token op = next();
    Expr::Kind kind = op.kind == Tok::Forall ? Expr::Kind::Forall
                      : op.kind == Tok::Exists ? Expr::Kind::Exists
                                               : Expr::Kind::Lambda;
    expect(Tok::LBrack, "'['");
    std::vector<Scope> vars;
    for (;;) {
      Token v = expect(Tok::Upper, "a variable");
      Type ty = Type::individual();
      if (peek().kind == Tok::Colon) {
        next();
        ty = type();
      }
      vars.push_back(Scope{v.text, p_.next_var++, ty});
      if (peek().kind != Tok::Comma) break;
      next();
    }
    expect(Tok::RBrack, "']'");
    expect(Tok::Colon, "':'");
    for (const auto& v : vars) scopes_.push_back(v);
    Token body_at = peek();
    ExprPtr body = equation();
    scopes_.resize(scopes_.size() - vars.size());
    if (kind != Expr::Kind::Lambda) check_bool(*body, body_at);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = at(make_binder(kind, it->name, it->id, it->type, body), op);
    return body;
  }

  ExprPtr atom() {
    Token t = next();
    switch (t.kind) {
      case Tok::LParen: {
        ExprPtr e = formula();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Upper:
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
          if (it->name == t.text) return at(make_var(t.text, it->id, it->type), t);
        fail("unbound variable " + t.text, t);
      case Tok::Dollar:
        if (t.text == "$true") return at(make_expr(Expr::Kind::True, {}), t);
        if (t.text == "$false") return at(make_expr(Expr::Kind::False, {}), t);
        fail("unsupported construct: " + t.text, t);
      case Tok::Lower:
      case Tok::Quoted: {
        const TypeScheme* s = p_.signature.find(t.text);
        if (!s || Signature::is_reserved(t.text)) fail("undeclared symbol " + t.text, t);
        return at(make_const(t.text, s->type), t);
      }
      case Tok::End:
        fail("unexpected end of input", t);
      default:
        fail("unexpected '" + t.text + "'", t);
    }
  }

  void check_bool(const Expr& e, const Token& op) const {
    if (!(type_of(e) == Type::boolean()))
      fail("expected a formula but found a term of type " + type_of(e).to_string(), op);
  }

  static ExprPtr at(ExprPtr e, const Token& t) {
    auto m = std::const_pointer_cast<Expr>(e);
    m->line = t.line;
    m->col = t.col;
    return e;
  }

  Problem& p_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& opts_;
  std::vector<Scope> scopes_;
};

const char* role_name(Role r) {
  switch (r) {
    case Role::Axiom: return "axiom";
    case Role::Hypothesis: return "hypothesis";
    case Role::Definition: return "definition";
    case Role::Lemma: return "lemma";
    case Role::Theorem: return "theorem";
    case Role::Conjecture: return "conjecture";
    case Role::NegatedConjecture: return "negated_conjecture";
  }
  return "axiom";
}

}  // namespace

void parse_into(Problem& p, std::string_view text, const ParseOptions& opts) {
  Parser(p, text, opts).run();
}

Problem parse_problem(std::string_view text, const ParseOptions& opts) {
  Problem p;
  parse_into(p, text, opts);
  return p;
}

Problem parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  ParseOptions opts;
  opts.include_root = path.parent_path();
  return parse_problem(ss.str(), opts);
}

std::string to_thf(const Problem& p) {
  std::string out;
  for (const auto& t : p.type_declarations)
    out += "thf(" + t + "_type, type, " + quote_if_needed(t) + ": $tType).\n";
  for (const auto& [name, ty] : p.declarations)
    out += "thf(" + quote_if_needed(name + "_decl") + ", type, " + quote_if_needed(name) + ": " +
           ty.to_string() + ").\n";
  for (const auto& s : p.statements)
    out += "thf(" + quote_if_needed(s.name) + ", " + role_name(s.role) + ", " + to_thf(*s.formula) + ").\n";
  return out;
}

}  // namespace hosup
