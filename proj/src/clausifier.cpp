#include "hosup/clausifier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hosup {

namespace {

using K = Expr::Kind;

bool is_connective(K k) {
  switch (k) {
    case K::Not: case K::And: case K::Or: case K::Implies: case K::Iff: case K::Xor:
    case K::Forall: case K::Exists: case K::Eq: case K::Neq:
      return true;
    default:
      return false;
  }
}

ExprPtr with_args(const Expr& e, std::vector<ExprPtr> args) {
  auto c = std::make_shared<Expr>(e);
  c->args = std::move(args);
  return c;
}

ExprPtr map_children(const Expr& e, const std::function<ExprPtr(const ExprPtr&)>& f) {
  if (e.args.empty()) return std::make_shared<Expr>(e);
  std::vector<ExprPtr> args;
  for (const auto& a : e.args) args.push_back(f(a));
  return with_args(e, std::move(args));
}

void free_vars(const Expr& e, std::set<std::uint32_t>& bound,
               std::map<std::uint32_t, ExprPtr>& out, const ExprPtr& self) {
  if (e.kind == K::Var) {
    if (!bound.count(e.var)) out.emplace(e.var, self);
    return;
  }
  const bool binds = e.is_binder() && !bound.count(e.var);
  if (binds) bound.insert(e.var);
  for (const auto& a : e.args) free_vars(*a, bound, out, a);
  if (binds) bound.erase(e.var);
}

// Free variables ordered by id.
std::vector<ExprPtr> free_vars(const ExprPtr& e) {
  std::set<std::uint32_t> bound;
  std::map<std::uint32_t, ExprPtr> out;
  free_vars(*e, bound, out, e);
  std::vector<ExprPtr> v;
  for (auto& [id, x] : out) v.push_back(x);
  return v;
}

ExprPtr apply_to(ExprPtr head, const std::vector<ExprPtr>& args) {
  for (const auto& a : args) head = make_expr(K::App, {head, a});
  return head;
}

ExprPtr close_forall(ExprPtr body, const std::vector<ExprPtr>& vars) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = make_binder(K::Forall, (*it)->name, (*it)->var, (*it)->type, body);
  return body;
}

// Declares a symbol of type `ty`, generalizing over its type variables, and
// returns its occurrence at those variables.
ExprPtr fresh_symbol(Signature& sig, const char* prefix, const Type& ty) {
  std::vector<std::uint32_t> tvs;
  collect_type_vars(ty, tvs);
  TypeSubst ren;
  std::vector<Type> args;
  for (std::uint32_t i = 0; i < tvs.size(); ++i) {
    ren.emplace(tvs[i], Type::var(i));
    args.push_back(Type::var(tvs[i]));
  }
  std::string name = sig.fresh_symbol(prefix, TypeScheme{static_cast<std::uint32_t>(tvs.size()),
                                                          apply_types(ren, ty)});
  return make_const(name, ty, std::move(args));
}

Type arrows_of(const std::vector<ExprPtr>& vars, Type result) {
  std::vector<Type> ts;
  for (const auto& v : vars) ts.push_back(v->type);
  return Type::arrows(ts, std::move(result));
}

ExprPtr eq_to_equiv(const ExprPtr& e) {
  ExprPtr m = map_children(*e, eq_to_equiv);
  if ((m->kind == K::Eq || m->kind == K::Neq) && type_of(*m->args[0]) == Type::boolean()) {
    ExprPtr iff = make_expr(K::Iff, {m->args[0], m->args[1]});
    return m->kind == K::Eq ? iff : make_expr(K::Not, {iff});
  }
  return m;
}

class Clausifier {
 public:
  Clausifier(Problem& p, const ClausifyOptions& o) : p_(p), opts_(o) {}

  std::vector<Clause> run() {
    for (const auto& st : p_.statements) {
      ExprPtr f = st.formula;
      if (st.role == Role::Conjecture) f = make_expr(K::Not, {f});
      Rule rule = is_added_axiom(st.name) ? Rule::Axiom : Rule::Input;
      queue_.push_back(Item{lift(f, false), st.name, rule, false});
    }
    while (!queue_.empty()) {
      Item it = queue_.front();
      queue_.pop_front();
      ExprPtr f = it.formula;
      if (opts_.naming && !it.is_definition) f = name(f, it);
      emit(skolemize(nnf(f, true)), it);
    }
    add_boolean_axiom();
    return std::move(out_);
  }

 private:
  struct Item {
    ExprPtr formula;
    std::string source;
    Rule rule;
    bool is_definition;
  };

  static bool is_added_axiom(const std::string& n) { return n == "func_ext" || n == "choice"; }

  void define(const ExprPtr& atom, const std::vector<ExprPtr>& vars, const ExprPtr& body,
              const Item* parent, const std::string& source) {
    ExprPtr def = close_forall(make_expr(K::Iff, {atom, body}), vars);
    queue_.push_back(Item{def, source, parent ? parent->rule : Rule::Input, parent != nullptr});
  }

  // Replaces formulas at term positions by fresh symbols applied to their
  // free variables.
  ExprPtr lift(const ExprPtr& e, bool in_term) {
    if (in_term && is_connective(e->kind)) {
      std::vector<ExprPtr> vars = free_vars(e);
      ExprPtr sym = fresh_symbol(p_.signature, "bool", arrows_of(vars, Type::boolean()));
      ExprPtr atom = apply_to(sym, vars);
      ExprPtr body = lift(e, false);
      ExprPtr def = close_forall(make_expr(K::Iff, {atom, body}), vars);
      queue_.push_back(Item{def, "lifted", Rule::Input, false});
      return atom;
    }
    switch (e->kind) {
      case K::App:
      case K::Lambda:
      case K::Eq:
      case K::Neq:
        return map_children(*e, [&](const ExprPtr& a) { return lift(a, true); });
      default:
        return map_children(*e, [&](const ExprPtr& a) { return lift(a, in_term); });
    }
  }

  struct Counts {
    double pos;
    double neg;
    double max() const { return std::max(pos, neg); }
  };

  static double cap(double v) { return std::min(v, 1e12); }

  static Counts counts(const Expr& e) {
    switch (e.kind) {
      case K::Not: {
        Counts c = counts(*e.args[0]);
        return {c.neg, c.pos};
      }
      case K::Forall:
      case K::Exists:
        return counts(*e.args[0]);
      case K::And: {
        Counts a = counts(*e.args[0]), b = counts(*e.args[1]);
        return {cap(a.pos + b.pos), cap(a.neg * b.neg)};
      }
      case K::Or: {
        Counts a = counts(*e.args[0]), b = counts(*e.args[1]);
        return {cap(a.pos * b.pos), cap(a.neg + b.neg)};
      }
      case K::Implies: {
        Counts a = counts(*e.args[0]), b = counts(*e.args[1]);
        return {cap(a.neg * b.pos), cap(a.pos + b.neg)};
      }
      case K::Iff:
      case K::Xor: {
        Counts a = counts(*e.args[0]), b = counts(*e.args[1]);
        Counts c{cap(a.neg * b.pos + a.pos * b.neg), cap(a.pos * b.pos + a.neg * b.neg)};
        return e.kind == K::Iff ? c : Counts{c.neg, c.pos};
      }
      default:
        return {1, 1};
    }
  }

  static bool is_atomic(const Expr& e) {
    switch (e.kind) {
      case K::Not: case K::And: case K::Or: case K::Implies: case K::Iff: case K::Xor:
      case K::Forall: case K::Exists:
        return false;
      default:
        return true;
    }
  }

  ExprPtr name(const ExprPtr& e, const Item& parent) {
    switch (e->kind) {
      case K::Not:
      case K::Forall:
      case K::Exists:
        return with_args(*e, {name(e->args[0], parent)});
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff:
      case K::Xor: {
        std::vector<ExprPtr> kids{name(e->args[0], parent), name(e->args[1], parent)};
        ExprPtr cur = with_args(*e, kids);
        while (counts(*cur).max() > opts_.naming_threshold) {
          int pick = -1;
          double best = 0;
          for (int k = 0; k < 2; ++k) {
            if (is_atomic(*kids[k])) continue;
            double m = counts(*kids[k]).max();
            if (pick < 0 || m > best) {
              pick = k;
              best = m;
            }
          }
          if (pick < 0) break;
          std::vector<ExprPtr> vars = free_vars(kids[pick]);
          ExprPtr sym = fresh_symbol(p_.signature, "def", arrows_of(vars, Type::boolean()));
          ExprPtr atom = apply_to(sym, vars);
          define(atom, vars, kids[pick], &parent, parent.source);
          kids[pick] = atom;
          cur = with_args(*e, kids);
        }
        return cur;
      }
      default:
        return e;
    }
  }

  static ExprPtr negate(const ExprPtr& e) { return make_expr(K::Not, {e}); }

  static ExprPtr nnf(const ExprPtr& e, bool pos) {
    switch (e->kind) {
      case K::Not:
        return nnf(e->args[0], !pos);
      case K::And:
      case K::Or: {
        K k = (e->kind == K::And) == pos ? K::And : K::Or;
        return make_expr(k, {nnf(e->args[0], pos), nnf(e->args[1], pos)});
      }
      case K::Implies:
        if (pos) return make_expr(K::Or, {nnf(e->args[0], false), nnf(e->args[1], true)});
        return make_expr(K::And, {nnf(e->args[0], true), nnf(e->args[1], false)});
      case K::Iff:
      case K::Xor: {
        const ExprPtr& a = e->args[0];
        const ExprPtr& b = e->args[1];
        if ((e->kind == K::Iff) == pos)
          return make_expr(K::And, {make_expr(K::Or, {nnf(a, false), nnf(b, true)}),
                                    make_expr(K::Or, {nnf(a, true), nnf(b, false)})});
        return make_expr(K::And, {make_expr(K::Or, {nnf(a, true), nnf(b, true)}),
                                  make_expr(K::Or, {nnf(a, false), nnf(b, false)})});
      }
      case K::Forall:
      case K::Exists: {
        K k = (e->kind == K::Forall) == pos ? K::Forall : K::Exists;
        return make_binder(k, e->name, e->var, e->type, nnf(e->args[0], pos));
      }
      case K::True:
      case K::False:
        return make_expr((e->kind == K::True) == pos ? K::True : K::False, {});
      case K::Eq:
      case K::Neq:
        return make_expr((e->kind == K::Eq) == pos ? K::Eq : K::Neq, e->args);
      default:
        return pos ? e : negate(e);
    }
  }

  ExprPtr skolemize(const ExprPtr& e) {
    std::vector<ExprPtr> universals;
    std::map<std::uint32_t, ExprPtr> repl;
    return skolemize(e, universals, repl);
  }

  ExprPtr substitute(const ExprPtr& e, const std::map<std::uint32_t, ExprPtr>& repl) {
    if (repl.empty()) return e;
    if (e->kind == K::Var) {
      auto it = repl.find(e->var);
      return it == repl.end() ? e : it->second;
    }
    return map_children(*e, [&](const ExprPtr& a) { return substitute(a, repl); });
  }

  ExprPtr skolemize(const ExprPtr& e, std::vector<ExprPtr>& universals,
                    std::map<std::uint32_t, ExprPtr>& repl) {
    switch (e->kind) {
      case K::Forall: {
        universals.push_back(make_var(e->name, e->var, e->type));
        ExprPtr body = skolemize(e->args[0], universals, repl);
        universals.pop_back();
        return make_binder(K::Forall, e->name, e->var, e->type, body);
      }
      case K::Exists: {
        std::vector<ExprPtr> deps;
        std::set<std::uint32_t> fv;
        for (const auto& v : free_vars(e)) fv.insert(v->var);
        for (const auto& u : universals)
          if (fv.count(u->var)) deps.push_back(u);
        ExprPtr sk = apply_to(fresh_symbol(p_.signature, "sk", arrows_of(deps, e->type)), deps);
        repl[e->var] = sk;
        ExprPtr body = skolemize(e->args[0], universals, repl);
        repl.erase(e->var);
        return body;
      }
      case K::And:
      case K::Or:
        return map_children(*e, [&](const ExprPtr& a) { return skolemize(a, universals, repl); });
      default:
        return substitute(e, repl);
    }
  }

  using ExprClause = std::vector<ExprPtr>;

  static std::vector<ExprClause> cnf(const ExprPtr& e) {
    switch (e->kind) {
      case K::Forall:
        return cnf(e->args[0]);
      case K::And: {
        auto a = cnf(e->args[0]);
        auto b = cnf(e->args[1]);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      case K::Or: {
        auto a = cnf(e->args[0]);
        auto b = cnf(e->args[1]);
        std::vector<ExprClause> out;
        for (const auto& x : a)
          for (const auto& y : b) {
            ExprClause c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
          }
        return out;
      }
      case K::True:
        return {};
      case K::False:
        return {ExprClause{}};
      default:
        return {ExprClause{e}};
    }
  }

 public:
  struct TermEnv {
    std::map<std::uint32_t, Term> free;
    std::vector<std::pair<std::uint32_t, Type>> lambdas;
    VarId next = 0;
  };

  static Term to_term(const Expr& e, TermEnv& env) {
    switch (e.kind) {
      case K::Var: {
        for (std::size_t k = env.lambdas.size(); k > 0; --k)
          if (env.lambdas[k - 1].first == e.var)
            return Term::index(static_cast<std::uint32_t>(env.lambdas.size() - k), e.type);
        auto it = env.free.find(e.var);
        if (it != env.free.end()) return it->second;
        Term v = Term::var(env.next++, e.type);
        env.free.emplace(e.var, v);
        return v;
      }
      case K::Const:
        return Term::sym(e.name, e.type, e.type_args);
      case K::True:
        return Term::true_const();
      case K::False:
        return Term::false_const();
      case K::App:
        return Term::app(to_term(*e.args[0], env), to_term(*e.args[1], env));
      case K::Lambda: {
        env.lambdas.emplace_back(e.var, e.type);
        Term body = to_term(*e.args[0], env);
        env.lambdas.pop_back();
        return Term::lam(e.type, body);
      }
      default:
        throw std::logic_error("formula left at a term position");
    }
  }

  static Literal to_literal(const Expr& e, TermEnv& env) {
    switch (e.kind) {
      case K::Eq:
        return Literal::eq(to_term(*e.args[0], env), to_term(*e.args[1], env));
      case K::Neq:
        return Literal::neq(to_term(*e.args[0], env), to_term(*e.args[1], env));
      case K::Not:
        return Literal::neq(to_term(*e.args[0], env), Term::true_const());
      default:
        return Literal::eq(to_term(e, env), Term::true_const());
    }
  }

 private:
  void emit(const ExprPtr& f, const Item& it) {
    for (const auto& ec : cnf(f)) {
      TermEnv env;
      Clause c;
      for (const auto& l : ec) c.literals.push_back(to_literal(*l, env));
      c.derivation.rule = it.rule;
      c.derivation.source = it.source;
      out_.push_back(std::move(c));
    }
  }

  static bool boolean_inside(const Term& t, bool top) {
    if (!top && t.type() == Type::boolean() && !t.is_index()) return true;
    switch (t.kind()) {
      case Term::Kind::App:
        return boolean_inside(t.fun(), true) || boolean_inside(t.arg(), false);
      case Term::Kind::Lam:
        return boolean_inside(t.body(), false);
      default:
        return false;
    }
  }

  // $true != $false, needed once Booleans occur as terms.
  void add_boolean_axiom() {
    bool needed = false;
    for (const auto& c : out_)
      for (const auto& l : c.literals) {
        if (l.lhs.type() == Type::boolean() && !(l.rhs == Term::true_const()) &&
            !(l.lhs == Term::true_const()))
          needed = true;
        if (boolean_inside(l.lhs, true) || boolean_inside(l.rhs, true)) needed = true;
      }
    if (!needed) return;
    Clause c;
    c.literals.push_back(Literal::neq(Term::true_const(), Term::false_const()));
    c.derivation.rule = Rule::Axiom;
    c.derivation.source = "true_neq_false";
    out_.push_back(std::move(c));
  }

  Problem& p_;
  const ClausifyOptions& opts_;
  std::deque<Item> queue_;
  std::vector<Clause> out_;
};

}  // namespace

Problem preprocess(Problem p, const PreprocessOptions& opts) {
  if (opts.equality_to_equiv)
    for (auto& st : p.statements) st.formula = eq_to_equiv(st.formula);
  const Type a = Type::var(0), b = Type::var(1);
  if (opts.func_ext_axiom) {
    // ! [F, G: a > b]: ((! [X: a]: F @ X = G @ X) => F = G)
    const Type fn = Type::arrow(a, b);
    const std::uint32_t f = p.next_var++, g = p.next_var++, x = p.next_var++;
    ExprPtr F = make_var("F", f, fn), G = make_var("G", g, fn), X = make_var("X", x, a);
    ExprPtr pointwise = make_binder(
        K::Forall, "X", x, a,
        make_expr(K::Eq, {make_expr(K::App, {F, X}), make_expr(K::App, {G, X})}));
    ExprPtr body = make_expr(K::Implies, {pointwise, make_expr(K::Eq, {F, G})});
    ExprPtr ax = make_binder(K::Forall, "F", f, fn, make_binder(K::Forall, "G", g, fn, body));
    p.statements.push_back(Statement{"func_ext", Role::Axiom, ax});
  }
  if (opts.choice_axiom) {
    // ! [P: a > $o, X: a]: (P @ X => P @ (eps @ P))
    const Type pred = Type::arrow(a, Type::boolean());
    std::string eps = p.signature.fresh_symbol(
        "choice", TypeScheme{1, Type::arrow(pred, a)});
    const std::uint32_t pv = p.next_var++, xv = p.next_var++;
    ExprPtr P = make_var("P", pv, pred), X = make_var("X", xv, a);
    ExprPtr E = make_const(eps, Type::arrow(pred, a), {a});
    ExprPtr body = make_expr(K::Implies, {make_expr(K::App, {P, X}),
                                          make_expr(K::App, {P, make_expr(K::App, {E, P})})});
    ExprPtr ax = make_binder(K::Forall, "P", pv, pred, make_binder(K::Forall, "X", xv, a, body));
    p.statements.push_back(Statement{"choice", Role::Axiom, ax});
  }
  return p;
}

std::vector<Clause> clausify(Problem& p, const ClausifyOptions& opts) {
  return Clausifier(p, opts).run();
}

std::pair<Term, Term> equation_terms(const Expr& e) {
  const Expr* cur = &e;
  while (cur->kind == Expr::Kind::Forall) cur = cur->args[0].get();
  if (cur->kind != Expr::Kind::Eq && cur->kind != Expr::Kind::Neq)
    throw std::invalid_argument("expected an equation under universal binders");
  Clausifier::TermEnv env;
  Term s = Clausifier::to_term(*cur->args[0], env);
  Term t = Clausifier::to_term(*cur->args[1], env);
  return {s, t};
}

}  // namespace hosup
