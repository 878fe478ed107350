#include "hosup/calculus.hpp"

#include <algorithm>

namespace hosup {

namespace {

bool at_least(OrderingResult r) { return r == OrderingResult::Greater || r == OrderingResult::Equal; }

Clause conclusion(std::vector<Literal> lits, Rule rule, std::vector<ClauseId> premises,
                  const Substitution& sigma) {
  Clause c;
  c.literals = std::move(lits);
  c.derivation.rule = rule;
  c.derivation.premises = std::move(premises);
  c.derivation.unifier = sigma.empty() ? std::string{} : sigma.to_string();
  return c;
}

// Candidate literal indices before the unifier is known: the selected one, or
// every literal when nothing is selected.
std::vector<std::size_t> candidates(const std::vector<Literal>& lits, SelectionMode mode) {
  auto sel = select(lits, mode);
  if (!sel.empty()) return sel;
  std::vector<std::size_t> all(lits.size());
  for (std::size_t i = 0; i < lits.size(); ++i) all[i] = i;
  return all;
}

std::vector<std::pair<Term, Term>> orientations(const Literal& l) {
  if (l.lhs == l.rhs) return {{l.lhs, l.rhs}};
  return {{l.lhs, l.rhs}, {l.rhs, l.lhs}};
}

void append_instance(std::vector<Literal>& out, const std::vector<Literal>& lits,
                     std::size_t skip, const Substitution& s) {
  for (std::size_t k = 0; k < lits.size(); ++k)
    if (k != skip) out.push_back(lits[k].apply(s));
}

// Ground sides keep their order under any substitution.
bool ground_not_greater(const Term& a, const Term& b, const OrderingConfig& ord) {
  return a.is_ground() && b.is_ground() && at_least(compare(b, a, ord));
}

// Distinct symbol heads never unify.
bool head_clash(const Term& a, const Term& b) {
  const Term& ha = a.head();
  const Term& hb = b.head();
  return ha.is_sym() && hb.is_sym() && ha.name() != hb.name();
}

}  // namespace

std::vector<Clause> superposition(const Clause& left, const Clause& right,
                                  const CalculusConfig& cfg) {
  std::vector<Clause> out;
  const auto& L = left.literals;
  if (!select(L, cfg.selection).empty()) return out;
  const auto R = offset_variables(right.literals, left.max_var(), left.max_type_var());
  FreshVars fresh(left.max_var() + right.max_var());

  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!L[i].positive) continue;
    for (const auto& [t, t1] : orientations(L[i])) {
      if (t.is_var() || ground_not_greater(t, t1, cfg.ordering)) continue;
      for (std::size_t j : candidates(R, cfg.selection)) {
        if (R[j].is_flex_flex()) continue;
        for (const auto& [s, s1] : orientations(R[j])) {
          if (ground_not_greater(s, s1, cfg.ordering)) continue;
          const Term& lhs = t;
          const Term& lhs1 = t1;
          const Term& side = s;
          const Term& side1 = s1;
          for_each_first_order_subterm(side, [&](const std::vector<std::uint8_t>& path, const Term& u) {
            if (u.is_var() || head_clash(lhs, u)) return;
            const Position pos{path, false, false};
            for (auto& cu : depth_n_unifiers(lhs, u, cfg.unif, fresh)) {
              const Substitution& sg = cu.subst;
              if (at_least(compare(sg.apply(lhs1), sg.apply(lhs), cfg.ordering))) continue;
              if (at_least(compare(sg.apply(side1), sg.apply(side), cfg.ordering))) continue;
              if (!eligible(L, i, sg, true, cfg.selection, cfg.ordering)) continue;
              if (!eligible(R, j, sg, R[j].positive, cfg.selection, cfg.ordering)) continue;
              std::vector<Literal> lits;
              append_instance(lits, L, i, sg);
              append_instance(lits, R, j, sg);
              Term rewritten = replace_at(side, pos, lhs1);
              lits.push_back(Literal{sg.apply(rewritten), sg.apply(side1), R[j].positive, false});
              for (const auto& c : cu.constraints) lits.push_back(c.apply(sg));
              out.push_back(conclusion(std::move(lits), Rule::Sup, {left.id, right.id}, sg));
            }
          });
        }
      }
    }
  }
  return out;
}

namespace {

void resolve_literal(const Clause& c, std::size_t i, const CalculusConfig& cfg, bool check,
                     std::vector<Clause>& out) {
  const auto& lits = c.literals;
  const Literal& l = lits[i];
  if (l.positive || l.is_flex_flex()) return;
  FreshVars fresh(c.max_var());
  for (auto& cu : depth_n_unifiers(l.lhs, l.rhs, cfg.unif, fresh)) {
    if (check && !eligible(lits, i, cu.subst, false, cfg.selection, cfg.ordering)) continue;
    std::vector<Literal> res;
    for (std::size_t k = 0; k < i; ++k) res.push_back(lits[k].apply(cu.subst));
    for (const auto& con : cu.constraints) res.push_back(con.apply(cu.subst));
    for (std::size_t k = i + 1; k < lits.size(); ++k) res.push_back(lits[k].apply(cu.subst));
    // A pure residue of the literal itself reproduces the premise.
    if (cu.subst.empty() && res.size() == lits.size() &&
        std::equal(res.begin(), res.end(), lits.begin(),
                   [](const Literal& a, const Literal& b) { return a.same_as(b); }))
      continue;
    out.push_back(conclusion(std::move(res), Rule::EqRes, {c.id}, cu.subst));
  }
}

}  // namespace

std::vector<Clause> equality_resolution(const Clause& c, const CalculusConfig& cfg) {
  std::vector<Clause> out;
  for (std::size_t i : candidates(c.literals, cfg.selection)) resolve_literal(c, i, cfg, true, out);
  return out;
}

std::vector<Clause> equality_resolution_at(const Clause& c, std::size_t i,
                                           const CalculusConfig& cfg) {
  std::vector<Clause> out;
  if (i < c.literals.size()) resolve_literal(c, i, cfg, false, out);
  return out;
}

std::vector<Clause> equality_factoring(const Clause& c, const CalculusConfig& cfg) {
  std::vector<Clause> out;
  const auto& lits = c.literals;
  if (!select(lits, cfg.selection).empty()) return out;
  FreshVars fresh(c.max_var());
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (!lits[i].positive) continue;
    for (const auto& [s, s1] : orientations(lits[i])) {
      for (std::size_t j = 0; j < lits.size(); ++j) {
        if (j == i || !lits[j].positive) continue;
        for (const auto& [t, t1] : orientations(lits[j])) {
          for (auto& cu : depth_n_unifiers(t, s, cfg.unif, fresh)) {
            const Substitution& sg = cu.subst;
            if (at_least(compare(sg.apply(s1), sg.apply(s), cfg.ordering))) continue;
            if (!eligible(lits, i, sg, false, cfg.selection, cfg.ordering)) continue;
            std::vector<Literal> res;
            for (std::size_t k = 0; k < lits.size(); ++k)
              if (k != i && k != j) res.push_back(lits[k].apply(sg));
            res.push_back(Literal::neq(sg.apply(t1), sg.apply(s1)));
            res.push_back(Literal::eq(sg.apply(s), sg.apply(s1)));
            for (const auto& con : cu.constraints) res.push_back(con.apply(sg));
            out.push_back(conclusion(std::move(res), Rule::EqFact, {c.id}, sg));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Clause> arg_cong(const Clause& c, const CalculusConfig& cfg) {
  std::vector<Clause> out;
  const auto& lits = c.literals;
  if (!select(lits, cfg.selection).empty()) return out;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Literal& l = lits[i];
    if (!l.positive || l.lhs == l.rhs) continue;
    Substitution sg;
    Type ty = l.lhs.type();
    std::size_t arity = ty.arity();
    if (ty.is_var()) {
      const std::uint32_t tv = c.max_type_var();
      sg.unify_types(ty, Type::arrow(Type::var(tv), Type::var(tv + 1)));
      ty = sg.apply(ty);
      arity = 1;
    }
    if (arity == 0) continue;
    if (!eligible(lits, i, sg, false, cfg.selection, cfg.ordering)) continue;
    const auto arg_types = ty.arg_types();
    FreshVars fresh(c.max_var());
    Term lhs = sg.apply(l.lhs), rhs = sg.apply(l.rhs);
    for (std::size_t k = 0; k < arity; ++k) {
      Term x = fresh.make(arg_types[k]);
      lhs = Term::app(lhs, x);
      rhs = Term::app(rhs, x);
      std::vector<Literal> res;
      append_instance(res, lits, i, sg);
      res.push_back(Literal::eq(lhs, rhs));
      out.push_back(conclusion(std::move(res), Rule::ArgCong, {c.id}, sg));
    }
  }
  return out;
}

std::optional<Clause> flex_flex_simp(const Clause& c) {
  if (c.literals.empty()) return std::nullopt;
  for (const auto& l : c.literals)
    if (!l.is_flex_flex()) return std::nullopt;
  return conclusion({}, Rule::FlexFlexSimp, {c.id}, Substitution{});
}

namespace {

template <class MakeBindings>
std::vector<Clause> head_binding_rule(const Clause& c, const CalculusConfig& cfg, Rule rule,
                                      MakeBindings make) {
  std::vector<Clause> out;
  if (!cfg.imitate_project()) return out;
  const auto& lits = c.literals;
  for (std::size_t i : candidates(lits, cfg.selection)) {
    const Literal& l = lits[i];
    if (l.positive) continue;
    Term flex = l.lhs, rigid = l.rhs;
    if (!flex.is_flex()) std::swap(flex, rigid);
    if (!flex.is_flex() || rigid.is_flex() || !rigid.head().is_sym()) continue;
    if (!eligible(lits, i, Substitution{}, false, cfg.selection, cfg.ordering)) continue;
    FreshVars fresh(c.max_var());
    for (const Substitution& sg : make(flex, rigid, fresh)) {
      std::vector<Literal> res;
      for (const auto& lit : lits) res.push_back(lit.apply(sg));
      out.push_back(conclusion(std::move(res), rule, {c.id}, sg));
    }
  }
  return out;
}

}  // namespace

std::vector<Clause> imitate_rule(const Clause& c, const CalculusConfig& cfg) {
  return head_binding_rule(c, cfg, Rule::Imitate,
                           [](const Term& f, const Term& r, FreshVars& fresh) {
                             std::vector<Substitution> v;
                             if (auto b = imitation_binding(f, r, fresh)) v.push_back(*b);
                             return v;
                           });
}

std::vector<Clause> project_rule(const Clause& c, const CalculusConfig& cfg) {
  return head_binding_rule(c, cfg, Rule::Project,
                           [](const Term& f, const Term& r, FreshVars& fresh) {
                             return projection_bindings(f, r, fresh);
                           });
}

std::vector<Clause> generate(const Clause& given, const std::vector<ClausePtr>& active,
                             const CalculusConfig& cfg) {
  std::vector<Clause> out;
  auto take = [&](std::vector<Clause> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  take(equality_resolution(given, cfg));
  take(equality_factoring(given, cfg));
  take(arg_cong(given, cfg));
  take(imitate_rule(given, cfg));
  take(project_rule(given, cfg));
  for (const auto& other : active) {
    take(superposition(given, *other, cfg));
    if (other->id != given.id) take(superposition(*other, given, cfg));
  }
  return out;
}

}  // namespace hosup
