#include "hosup/simplify.hpp"

#include <algorithm>
#include <functional>

namespace hosup {

bool match_term(const Term& p, const Term& t, std::map<VarId, Term>& terms, TypeSubst& types) {
  if (p.is_var()) {
    auto it = terms.find(p.var_id());
    if (it != terms.end()) return it->second == t;
    if (t.loose_bound() > 0) return false;
    if (!match_types(p.type(), t.type(), types)) return false;
    terms.emplace(p.var_id(), t);
    return true;
  }
  if (p.kind() != t.kind()) return false;
  switch (p.kind()) {
    case Term::Kind::Sym:
      return p.name() == t.name() && match_types(p.type(), t.type(), types);
    case Term::Kind::Index:
      return p.db_index() == t.db_index() && match_types(p.type(), t.type(), types);
    case Term::Kind::App:
      return match_term(p.fun(), t.fun(), terms, types) && match_term(p.arg(), t.arg(), terms, types);
    case Term::Kind::Lam:
      return match_types(p.binder_type(), t.binder_type(), types) &&
             match_term(p.body(), t.body(), terms, types);
    case Term::Kind::Var:
      break;
  }
  return false;
}

namespace {

Substitution to_substitution(const std::map<VarId, Term>& terms, const TypeSubst& types,
                             const std::vector<std::pair<VarId, Type>>& pattern_vars) {
  Substitution s;
  for (const auto& [v, ty] : types) s.unify_types(Type::var(v), ty);
  for (const auto& [v, ty] : pattern_vars) {
    auto it = terms.find(v);
    if (it != terms.end()) s.bind(Term::var(v, ty), it->second);
  }
  return s;
}

bool match_literal(const Literal& g, const Literal& s, bool flipped, std::map<VarId, Term>& terms,
                   TypeSubst& types) {
  if (g.positive != s.positive) return false;
  const Term& a = flipped ? s.rhs : s.lhs;
  const Term& b = flipped ? s.lhs : s.rhs;
  return match_term(g.lhs, a, terms, types) && match_term(g.rhs, b, terms, types);
}

bool subsume_from(const std::vector<Literal>& g, std::size_t k, const std::vector<Literal>& s,
                  std::vector<bool>& used, std::map<VarId, Term>& terms, TypeSubst& types) {
  if (k == g.size()) return true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (used[j]) continue;
    for (bool flip : {false, true}) {
      auto t2 = terms;
      auto ty2 = types;
      if (!match_literal(g[k], s[j], flip, t2, ty2)) continue;
      used[j] = true;
      if (subsume_from(g, k + 1, s, used, t2, ty2)) {
        terms = std::move(t2);
        types = std::move(ty2);
        return true;
      }
      used[j] = false;
    }
  }
  return false;
}

VarId max_var_of(const std::vector<Literal>& lits) {
  VarId m = 0;
  for (const auto& l : lits) m = std::max({m, max_var(l.lhs), max_var(l.rhs)});
  return m;
}

std::uint32_t max_type_var_of(const std::vector<Literal>& lits) {
  std::uint32_t m = 0;
  for (const auto& l : lits) m = std::max({m, max_type_var(l.lhs), max_type_var(l.rhs)});
  return m;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  std::map<VarId, Term> terms;
  TypeSubst types;
  if (!match_term(pattern, target, terms, types)) return std::nullopt;
  std::vector<std::pair<VarId, Type>> vars;
  collect_vars(pattern, vars);
  return to_substitution(terms, types, vars);
}

bool subsumes(const std::vector<Literal>& general, const std::vector<Literal>& specific) {
  if (general.size() > specific.size()) return false;
  auto g = offset_variables(general, max_var_of(specific), max_type_var_of(specific));
  // Cheap necessary check: each general literal matches something.
  for (const auto& gl : g) {
    bool any = false;
    for (const auto& sl : specific) {
      for (bool flip : {false, true}) {
        std::map<VarId, Term> t;
        TypeSubst ty;
        if (match_literal(gl, sl, flip, t, ty)) any = true;
      }
      if (any) break;
    }
    if (!any) return false;
  }
  std::vector<bool> used(specific.size(), false);
  std::map<VarId, Term> terms;
  TypeSubst types;
  return subsume_from(g, 0, specific, used, terms, types);
}

bool is_variant(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  return a.size() == b.size() && subsumes(a, b) && subsumes(b, a);
}

std::vector<Literal> remove_trivial_literals(const std::vector<Literal>& lits) {
  std::vector<Literal> out;
  for (const auto& l : lits)
    if (!l.is_trivially_false()) out.push_back(l);
  return out;
}

std::vector<Literal> remove_duplicate_literals(const std::vector<Literal>& lits) {
  std::vector<Literal> out;
  for (const auto& l : lits) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const Literal& o) { return o.same_as(l); });
    if (!dup) out.push_back(l);
  }
  return out;
}

bool is_tautology(const std::vector<Literal>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (lits[i].is_tautology()) return true;
    if (!lits[i].positive) continue;
    for (const auto& o : lits) {
      if (o.positive) continue;
      Literal flipped = o;
      flipped.positive = true;
      if (flipped.same_as(lits[i])) return true;
    }
  }
  return false;
}

namespace {

// One rewrite step on `t` at some first-order position, if possible.
std::optional<Term> rewrite_once(const Term& t, const std::vector<ClausePtr>& units,
                                 const std::vector<std::vector<Literal>>& renamed,
                                 const OrderingConfig& cfg, std::vector<ClauseId>& used) {
  for (const auto& [pos, u] : first_order_subterms(t)) {
    if (u.is_var()) continue;
    for (std::size_t k = 0; k < units.size(); ++k) {
      const Literal& eq = renamed[k][0];
      for (int dir = 0; dir < 2; ++dir) {
        const Term& l = dir == 0 ? eq.lhs : eq.rhs;
        const Term& r = dir == 0 ? eq.rhs : eq.lhs;
        if (l.is_var()) continue;
        auto theta = match(l, u);
        if (!theta) continue;
        Term li = theta->apply(l), ri = theta->apply(r);
        if (compare(li, ri, cfg) != OrderingResult::Greater) continue;
        if (std::find(used.begin(), used.end(), units[k]->id) == used.end())
          used.push_back(units[k]->id);
        return replace_at(t, pos, ri);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<DemodResult> demodulate(const Clause& c, const std::vector<ClausePtr>& units,
                                      const OrderingConfig& cfg) {
  std::vector<ClausePtr> usable;
  for (const auto& u : units)
    if (u->id != c.id && u->literals.size() == 1 && u->literals[0].positive) usable.push_back(u);
  if (usable.empty()) return std::nullopt;
  const VarId voff = c.max_var();
  const std::uint32_t toff = c.max_type_var();
  std::vector<std::vector<Literal>> renamed;
  for (const auto& u : usable) renamed.push_back(offset_variables(u->literals, voff, toff));

  DemodResult res{c.literals, {}};
  bool changed = false;
  constexpr int kMaxSteps = 1000;
  for (int step = 0; step < kMaxSteps; ++step) {
    bool progress = false;
    for (auto& lit : res.literals) {
      for (Term* side : {&lit.lhs, &lit.rhs}) {
        if (auto r = rewrite_once(*side, usable, renamed, cfg, res.used)) {
          *side = *r;
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
    if (!progress) break;
    changed = true;
  }
  if (!changed) return std::nullopt;
  return res;
}

}  // namespace hosup
