#include "hosup/unification.hpp"

#include <map>

namespace hosup {

PairKind UnifPair::kind() const {
  const bool fl = lhs.is_flex(), fr = rhs.is_flex();
  if (fl && fr) return PairKind::FlexFlex;
  if (fl || fr) return PairKind::FlexRigid;
  return PairKind::RigidRigid;
}

Literal UnifPair::to_constraint() const {
  Term l = lhs, r = rhs;
  for (auto it = context.rbegin(); it != context.rend(); ++it) {
    l = Term::lam(*it, l);
    r = Term::lam(*it, r);
  }
  return Literal{l, r, false, true};
}

namespace {

// Binder prefix and the bound-variable terms y1..yk for a flex head x.
struct FlexShape {
  Term head;
  std::size_t k;
  std::vector<Type> arg_types;
  Type result;
};

FlexShape flex_shape(const Term& flex) {
  FlexShape sh;
  sh.head = flex.head();
  sh.k = flex.num_args();
  auto all = sh.head.type().arg_types();
  sh.arg_types.assign(all.begin(), all.begin() + static_cast<long>(sh.k));
  sh.result = sh.head.type().result_after(sh.k);
  return sh;
}

// z (y1..yk) at binder depth k, z : τ1 > .. > τk > target.
Term fresh_applied(const FlexShape& sh, const Type& target, FreshVars& fresh) {
  Term z = fresh.make(Type::arrows(sh.arg_types, target));
  for (std::size_t i = 0; i < sh.k; ++i)
    z = Term::app(z, Term::index(static_cast<std::uint32_t>(sh.k - 1 - i), sh.arg_types[i]));
  return z;
}

Term close_binders(const FlexShape& sh, Term body) {
  for (std::size_t i = sh.k; i > 0; --i) body = Term::lam(sh.arg_types[i - 1], body);
  return body;
}

}  // namespace

std::optional<Substitution> imitation_binding(const Term& flex, const Term& rigid,
                                              FreshVars& fresh) {
  const Term& f = rigid.head();
  if (!f.is_sym() || !flex.is_flex()) return std::nullopt;
  FlexShape sh = flex_shape(flex);
  const std::size_t m = rigid.num_args();
  auto f_args = f.type().arg_types();
  if (f_args.size() < m || !(f.type().result_after(m) == sh.result)) return std::nullopt;
  Term body = f;
  for (std::size_t j = 0; j < m; ++j) body = Term::app(body, fresh_applied(sh, f_args[j], fresh));
  Substitution s;
  s.bind(sh.head, close_binders(sh, body));
  return s;
}

std::vector<Substitution> projection_bindings(const Term& flex, const Term& /*rigid*/,
                                              FreshVars& fresh) {
  std::vector<Substitution> out;
  if (!flex.is_flex()) return out;
  FlexShape sh = flex_shape(flex);
  const std::size_t r = sh.result.arity();
  for (std::size_t i = 0; i < sh.k; ++i) {
    const Type& ti = sh.arg_types[i];
    const std::size_t a = ti.arity();
    if (a < r) continue;
    const std::size_t p = a - r;
    if (!(ti.result_after(p) == sh.result)) continue;
    auto ti_args = ti.arg_types();
    Term body = Term::index(static_cast<std::uint32_t>(sh.k - 1 - i), ti);
    for (std::size_t j = 0; j < p; ++j) body = Term::app(body, fresh_applied(sh, ti_args[j], fresh));
    Substitution s;
    s.bind(sh.head, close_binders(sh, body));
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct State {
  std::vector<UnifPair> pairs;
  Substitution sigma;
  unsigned used = 0;
};

void apply_sigma(State& st) {
  for (auto& p : st.pairs) {
    p.lhs = st.sigma.apply(p.lhs);
    p.rhs = st.sigma.apply(p.rhs);
    for (auto& c : p.context) c = st.sigma.apply(c);
  }
}

std::string indent(unsigned level) { return std::string(2 * level, ' '); }

std::string pairs_to_string(const std::vector<UnifPair>& pairs) {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ", ";
    s += pairs[i].lhs.to_string() + " =? " + pairs[i].rhs.to_string();
  }
  return s + "}";
}

class Enumerator {
 public:
  Enumerator(const UnifConfig& cfg, FreshVars& fresh, UnifTrace* trace)
      : cfg_(cfg), fresh_(fresh), trace_(trace) {}

  void search(State st, unsigned level) {
    if (!simplify(st)) {
      log(level, "fail");
      return;
    }
    std::size_t fr = st.pairs.size();
    for (std::size_t i = 0; i < st.pairs.size(); ++i)
      if (st.pairs[i].kind() == PairKind::FlexRigid) {
        fr = i;
        break;
      }
    if (fr == st.pairs.size() || st.used == cfg_.depth) {
      emit(st, level);
      return;
    }
    UnifPair pair = st.pairs[fr];
    if (!pair.lhs.is_flex()) std::swap(pair.lhs, pair.rhs);
    log(level, "select " + pair.lhs.to_string() + " =? " + pair.rhs.to_string());

    std::vector<std::pair<const char*, Substitution>> steps;
    if (auto im = imitation_binding(pair.lhs, pair.rhs, fresh_)) steps.emplace_back("imitate", *im);
    for (auto& pr : projection_bindings(pair.lhs, pair.rhs, fresh_)) steps.emplace_back("project", pr);

    for (auto& [name, binding] : steps) {
      State child = st;
      const auto& [var, range] = *binding.terms().begin();
      log(level, std::string(name) + " X" + std::to_string(var) + " -> " + range.to_string());
      child.sigma.bind(pair.lhs.head(), range);
      child.used++;
      apply_sigma(child);
      if (child.used == cfg_.depth)
        freeze(std::move(child), level + 1);
      else
        search(std::move(child), level + 1);
    }
  }

  std::vector<ConstrainedUnifier> take() { return std::move(out_); }

 private:
  enum class BindResult { Bound, Keep, Fail };

  void log(unsigned level, const std::string& s) {
    if (trace_) trace_->push_back(indent(level) + s);
  }

  void emit(const State& st, unsigned level) {
    ConstrainedUnifier cu;
    cu.subst = st.sigma;
    cu.depth_used = st.used;
    for (const auto& p : st.pairs) cu.constraints.push_back(p.to_constraint());
    log(level, "unifier " + st.sigma.to_string() + " constraints " + pairs_to_string(st.pairs));
    out_.push_back(std::move(cu));
  }

  void freeze(State st, unsigned level) {
    std::vector<UnifPair> kept;
    for (auto& p : st.pairs) {
      if (p.lhs == p.rhs) continue;
      if (p.kind() == PairKind::RigidRigid && !p.lhs.is_lam() && !p.rhs.is_lam() &&
          !same_rigid_head(p.lhs.head(), p.rhs.head())) {
        log(level, "fail: clash " + p.lhs.to_string() + " =? " + p.rhs.to_string());
        return;
      }
      kept.push_back(std::move(p));
    }
    st.pairs = std::move(kept);
    emit(st, level);
  }

  static bool same_rigid_head(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    if (a.is_sym()) return a.name() == b.name();
    if (a.is_index()) return a.db_index() == b.db_index();
    return false;
  }

  BindResult try_bind(State& st, std::size_t i, const Term& x, const Term& t) {
    if (occurs(x.var_id(), t) || t.loose_bound() > 0)
      return t.is_flex() ? BindResult::Keep : BindResult::Fail;
    if (!(x.type() == t.type())) return BindResult::Fail;
    st.pairs.erase(st.pairs.begin() + static_cast<long>(i));
    st.sigma.bind(x, t);
    apply_sigma(st);
    return BindResult::Bound;
  }

  // Heads already known rigid and of the same kind/name; unify type arguments.
  bool unify_heads(State& st, const Term& a, const Term& b) {
    if (!same_rigid_head(a, b)) return false;
    if (a.type() == b.type()) return true;
    if (!st.sigma.unify_types(a.type(), b.type())) return false;
    apply_sigma(st);
    return true;
  }

  bool simplify(State& st) {
    for (;;) {
      bool progress = false;
      for (std::size_t i = 0; i < st.pairs.size() && !progress; ++i) {
        UnifPair& p = st.pairs[i];
        if (p.lhs == p.rhs) {
          st.pairs.erase(st.pairs.begin() + static_cast<long>(i));
          progress = true;
          break;
        }
        if (p.lhs.is_lam() || p.rhs.is_lam()) {
          Type bt = p.lhs.is_lam() ? p.lhs.binder_type() : p.rhs.binder_type();
          auto strip = [&](const Term& t) {
            if (t.is_lam()) return t.body();
            return Term::app(shift(t, 1, 0), Term::index(0, bt));
          };
          Term l = strip(p.lhs), r = strip(p.rhs);
          p.lhs = l;
          p.rhs = r;
          p.context.push_back(bt);
          progress = true;
          break;
        }
        for (int side = 0; side < 2 && !progress; ++side) {
          const Term x = side == 0 ? p.lhs : p.rhs;
          const Term t = side == 0 ? p.rhs : p.lhs;
          if (!x.is_var()) continue;
          switch (try_bind(st, i, x, t)) {
            case BindResult::Fail:
              return false;
            case BindResult::Bound:
              progress = true;
              break;
            case BindResult::Keep:
              break;
          }
        }
        if (progress) break;
        if (p.lhs.is_rigid() && p.rhs.is_rigid()) {
          const Term lh = p.lhs.head(), rh = p.rhs.head();
          if (p.lhs.num_args() != p.rhs.num_args()) return false;
          if (!unify_heads(st, lh, rh)) return false;
          UnifPair cur = st.pairs[i];
          auto la = cur.lhs.args(), ra = cur.rhs.args();
          std::vector<UnifPair> sub;
          for (std::size_t j = 0; j < la.size(); ++j) {
            if (!(la[j].type() == ra[j].type()) && !st.sigma.unify_types(la[j].type(), ra[j].type()))
              return false;
            sub.push_back(UnifPair{la[j], ra[j], cur.context});
          }
          st.pairs.erase(st.pairs.begin() + static_cast<long>(i));
          st.pairs.insert(st.pairs.begin() + static_cast<long>(i), sub.begin(), sub.end());
          apply_sigma(st);
          progress = true;
          break;
        }
      }
      if (!progress) return true;
    }
  }

  const UnifConfig& cfg_;
  FreshVars& fresh_;
  UnifTrace* trace_;
  std::vector<ConstrainedUnifier> out_;
};

// First-order unification over raw trees with a triangular substitution.
class FirstOrder {
 public:
  bool unify(const Term& s, const Term& t) {
    Term a = deref(s), b = deref(t);
    if (a == b) return true;
    if (a.is_var()) return bind(a, b);
    if (b.is_var()) return bind(b, a);
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Term::Kind::Sym:
        if (a.name() != b.name()) return false;
        return unify_type(a.type(), b.type());
      case Term::Kind::Index:
        return a.db_index() == b.db_index() && unify_type(a.type(), b.type());
      case Term::Kind::App:
        return unify(a.fun(), b.fun()) && unify(a.arg(), b.arg());
      case Term::Kind::Lam:
        return unify_type(a.binder_type(), b.binder_type()) && unify(a.body(), b.body());
      case Term::Kind::Var:
        break;
    }
    return false;
  }

  Substitution result() const {
    Substitution s;
    for (const auto& [v, ty] : types_) s.unify_types(Type::var(v), ty);
    for (const auto& [v, t] : bindings_) {
      Term x = Term::var(v, t.type());
      s.bind(Term::var(v, s.apply(t.type())), resolve(t));
      (void)x;
    }
    return s;
  }

 private:
  bool unify_type(const Type& a, const Type& b) { return unify_types(a, b, types_); }

  Term deref(const Term& t) const {
    Term cur = t;
    while (cur.is_var()) {
      auto it = bindings_.find(cur.var_id());
      if (it == bindings_.end()) break;
      cur = it->second;
    }
    return cur;
  }

  Term resolve(const Term& t) const {
    if (!t.has_vars()) return map_types(t, types_);
    switch (t.kind()) {
      case Term::Kind::Var: {
        Term d = deref(t);
        if (d.is_var()) return map_types(d, types_);
        return resolve(d);
      }
      case Term::Kind::App:
        return Term::raw_app(resolve(t.fun()), resolve(t.arg()));
      case Term::Kind::Lam:
        return Term::lam(apply_types(types_, t.binder_type()), resolve(t.body()));
      default:
        return map_types(t, types_);
    }
  }

  bool occurs_deep(VarId v, const Term& t) const {
    if (!t.has_vars()) return false;
    switch (t.kind()) {
      case Term::Kind::Var: {
        Term d = deref(t);
        if (d.is_var()) return d.var_id() == v;
        return occurs_deep(v, d);
      }
      case Term::Kind::App:
        return occurs_deep(v, t.fun()) || occurs_deep(v, t.arg());
      case Term::Kind::Lam:
        return occurs_deep(v, t.body());
      default:
        return false;
    }
  }

  bool bind(const Term& x, const Term& t) {
    if (t.loose_bound() > 0 || occurs_deep(x.var_id(), t)) return false;
    if (!unify_type(x.type(), t.type())) return false;
    bindings_.emplace(x.var_id(), t);
    return true;
  }

  std::map<VarId, Term> bindings_;
  TypeSubst types_;
};

}  // namespace

std::vector<ConstrainedUnifier> depth_n_unifiers(const Term& s, const Term& t,
                                                 const UnifConfig& cfg, FreshVars& fresh,
                                                 UnifTrace* trace) {
  if (cfg.applicative) {
    auto r = applicative_unify(s, t);
    if (trace) trace->push_back(r ? "unifier " + r->subst.to_string() : "fail");
    if (!r) return {};
    return {*r};
  }
  State st;
  if (!st.sigma.unify_types(s.type(), t.type())) {
    if (trace) trace->push_back("fail: type clash");
    return {};
  }
  st.pairs.push_back(UnifPair{st.sigma.apply(s), st.sigma.apply(t), {}});
  Enumerator e(cfg, fresh, trace);
  e.search(std::move(st), 0);
  return e.take();
}

std::optional<ConstrainedUnifier> applicative_unify(const Term& s, const Term& t) {
  FirstOrder fo;
  if (!fo.unify(s, t)) return std::nullopt;
  ConstrainedUnifier cu;
  cu.subst = fo.result();
  return cu;
}

}  // namespace hosup
