#pragma once

// Test-side generators and oracles.  Nothing here calls the library's own
// normalizer, unifier or ordering.

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hosup/clause.hpp"
#include "hosup/term.hpp"

namespace testing_support {

using hosup::Term;
using hosup::Type;

inline Type I() { return Type::individual(); }
inline Type O() { return Type::boolean(); }
inline Type fn(Type a, Type b) { return Type::arrow(std::move(a), std::move(b)); }
inline Type ii() { return fn(I(), I()); }
inline Type iii() { return fn(I(), ii()); }

inline Term sym(const std::string& n, Type t) { return Term::sym(n, std::move(t)); }
inline Term var(hosup::VarId v, Type t) { return Term::var(v, std::move(t)); }
inline Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
inline Term ap(Term f, Term a, Term b) { return ap(ap(std::move(f), std::move(a)), std::move(b)); }

inline Term a() { return sym("a", I()); }
inline Term b() { return sym("b", I()); }
inline Term c() { return sym("c", I()); }
inline Term d() { return sym("d", I()); }
inline Term f() { return sym("f", iii()); }
inline Term g() { return sym("g", ii()); }
inline Term h() { return sym("h", fn(ii(), I())); }

// ---------------------------------------------------------------------------
// Named lambda terms and a textbook normal-order normalizer.

struct Named;
using NamedPtr = std::shared_ptr<const Named>;

struct Named {
  enum Kind { Free, Sym, Bound, App, Lam } kind;
  std::string name;  // symbol name, bound name, or "X<id>"
  NamedPtr l, r;     // App: l r; Lam: r is the body
};

inline NamedPtr nmk(Named::Kind k, std::string n, NamedPtr l = nullptr, NamedPtr r = nullptr) {
  return std::make_shared<const Named>(Named{k, std::move(n), std::move(l), std::move(r)});
}

inline NamedPtr to_named(const Term& t, std::vector<std::string>& binders, int& fresh) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return nmk(Named::Free, "X" + std::to_string(t.var_id()));
    case Term::Kind::Sym:
      return nmk(Named::Sym, t.name());
    case Term::Kind::Index:
      return nmk(Named::Bound, binders[binders.size() - 1 - t.db_index()]);
    case Term::Kind::App:
      return nmk(Named::App, "", to_named(t.fun(), binders, fresh), to_named(t.arg(), binders, fresh));
    case Term::Kind::Lam: {
      std::string n = "v" + std::to_string(fresh++);
      binders.push_back(n);
      auto body = to_named(t.body(), binders, fresh);
      binders.pop_back();
      return nmk(Named::Lam, n, nullptr, body);
    }
  }
  return nullptr;
}

inline NamedPtr to_named(const Term& t) {
  std::vector<std::string> bs;
  int fresh = 0;
  return to_named(t, bs, fresh);
}

inline bool free_in(const std::string& x, const NamedPtr& t) {
  switch (t->kind) {
    case Named::Bound:
      return t->name == x;
    case Named::App:
      return free_in(x, t->l) || free_in(x, t->r);
    case Named::Lam:
      return t->name != x && free_in(x, t->r);
    default:
      return false;
  }
}

// Capture-avoiding t[x := s].
inline NamedPtr nsubst(const NamedPtr& t, const std::string& x, const NamedPtr& s, int& fresh) {
  switch (t->kind) {
    case Named::Bound:
      return t->name == x ? s : t;
    case Named::App:
      return nmk(Named::App, "", nsubst(t->l, x, s, fresh), nsubst(t->r, x, s, fresh));
    case Named::Lam: {
      if (t->name == x) return t;
      if (free_in(t->name, s)) {
        std::string y = "w" + std::to_string(fresh++);
        auto body = nsubst(t->r, t->name, nmk(Named::Bound, y), fresh);
        return nmk(Named::Lam, y, nullptr, nsubst(body, x, s, fresh));
      }
      return nmk(Named::Lam, t->name, nullptr, nsubst(t->r, x, s, fresh));
    }
    default:
      return t;
  }
}

inline NamedPtr nnormalize(const NamedPtr& t, int& fresh) {
  switch (t->kind) {
    case Named::App: {
      auto fun = nnormalize(t->l, fresh);
      if (fun->kind == Named::Lam) return nnormalize(nsubst(fun->r, fun->name, t->r, fresh), fresh);
      return nmk(Named::App, "", fun, nnormalize(t->r, fresh));
    }
    case Named::Lam:
      return nmk(Named::Lam, t->name, nullptr, nnormalize(t->r, fresh));
    default:
      return t;
  }
}

// Alpha-invariant rendering: bound names replaced by binder depth.
inline std::string canonical(const NamedPtr& t, std::vector<std::string>& bs) {
  switch (t->kind) {
    case Named::Free:
    case Named::Sym:
      return t->name;
    case Named::Bound:
      for (std::size_t k = bs.size(); k > 0; --k)
        if (bs[k - 1] == t->name) return "#" + std::to_string(k - 1);
      return "?" + t->name;
    case Named::App:
      return "(" + canonical(t->l, bs) + " " + canonical(t->r, bs) + ")";
    case Named::Lam: {
      bs.push_back(t->name);
      auto s = "(L " + canonical(t->r, bs) + ")";
      bs.pop_back();
      return s;
    }
  }
  return "";
}

inline std::string canonical(const NamedPtr& t) {
  std::vector<std::string> bs;
  return canonical(t, bs);
}

inline std::string oracle_normal_form(const Term& raw) {
  int fresh = 0;
  return canonical(nnormalize(to_named(raw), fresh));
}

// ---------------------------------------------------------------------------
// Random terms over a, b, c : $i, g : $i > $i, f : $i > $i > $i,
// h : ($i > $i) > $i and variables X0..X2 : $i, X3, X4 : $i > $i.

struct TermGen {
  std::mt19937_64 rng;
  bool allow_vars = true;
  bool allow_lambda = true;
  bool allow_redex = false;

  explicit TermGen(std::uint64_t seed) : rng(seed) {}

  unsigned pick(unsigned n) { return static_cast<unsigned>(rng() % n); }

  // A term of type `ty` under binders `ctx` (innermost last).
  Term gen(const Type& ty, std::vector<Type>& ctx, int size) {
    std::vector<std::function<Term()>> options;
    auto leaf_ok = [&] { return size <= 1; };
    // Bound variables of exactly this type.
    for (std::size_t k = 0; k < ctx.size(); ++k)
      if (ctx[ctx.size() - 1 - k] == ty)
        options.push_back([&, k] { return Term::index(static_cast<std::uint32_t>(k), ty); });
    if (ty == I()) {
      options.push_back([&] { return a(); });
      options.push_back([&] { return b(); });
      options.push_back([&] { return c(); });
      if (allow_vars) options.push_back([&] { return var(pick(3), I()); });
      if (!leaf_ok()) {
        options.push_back([&] { return ap(g(), gen(I(), ctx, size - 1)); });
        options.push_back([&] { return ap(f(), gen(I(), ctx, size / 2), gen(I(), ctx, size / 2)); });
        if (allow_lambda) options.push_back([&] { return ap(h(), gen(ii(), ctx, size - 1)); });
        if (allow_vars) options.push_back([&] { return ap(var(3 + pick(2), ii()), gen(I(), ctx, size - 1)); });
        if (allow_redex) options.push_back([&] {
          ctx.push_back(I());
          Term body = gen(I(), ctx, size / 2);
          ctx.pop_back();
          Term arg = gen(I(), ctx, size / 2);
          return Term::raw_app(Term::lam(I(), body), arg);
        });
      }
    } else if (ty == ii()) {
      options.push_back([&] { return g(); });
      if (!leaf_ok()) options.push_back([&] { return ap(f(), gen(I(), ctx, size - 1)); });
      if (allow_vars) options.push_back([&] { return var(3 + pick(2), ii()); });
      if (allow_lambda && !leaf_ok()) options.push_back([&] {
        ctx.push_back(I());
        Term body = gen(I(), ctx, size - 1);
        ctx.pop_back();
        return Term::lam(I(), body);
      });
    }
    return options[pick(static_cast<unsigned>(options.size()))]();
  }

  Term gen(const Type& ty, int size) {
    std::vector<Type> ctx;
    return gen(ty, ctx, size);
  }
};


}  // namespace testing_support

namespace hosup {
inline void PrintTo(const Term& t, std::ostream* os) { *os << t.to_string(); }
inline void PrintTo(const Type& t, std::ostream* os) { *os << t.to_string(); }
}  // namespace hosup
