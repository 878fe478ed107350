#include "hosup/clause.hpp"

#include <algorithm>
#include <map>

namespace hosup {

std::string Literal::to_string() const {
  return lhs.to_string() + (positive ? " = " : " != ") + rhs.to_string();
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Input: return "input";
    case Rule::Axiom: return "axiom";
    case Rule::Sup: return "sup";
    case Rule::EqRes: return "eqres";
    case Rule::EqFact: return "eqfact";
    case Rule::ArgCong: return "argcong";
    case Rule::FlexFlexSimp: return "flexflexsimp";
    case Rule::Imitate: return "imitate";
    case Rule::Project: return "project";
    case Rule::Demod: return "demod";
    case Rule::TrivialLiteral: return "trivial_literal";
    case Rule::DuplicateLiteral: return "duplicate_literal";
  }
  return "?";
}

std::uint32_t Clause::weight() const {
  std::uint32_t w = 0;
  for (const auto& l : literals) w += l.weight();
  return w;
}

VarId Clause::max_var() const {
  VarId m = 0;
  for (const auto& l : literals) m = std::max({m, hosup::max_var(l.lhs), hosup::max_var(l.rhs)});
  return m;
}

std::uint32_t Clause::max_type_var() const {
  std::uint32_t m = 0;
  for (const auto& l : literals)
    m = std::max({m, hosup::max_type_var(l.lhs), hosup::max_type_var(l.rhs)});
  return m;
}

std::string literals_to_string(const std::vector<Literal>& lits) {
  if (lits.empty()) return "$false";
  std::string s;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) s += " | ";
    s += lits[i].to_string();
  }
  return s;
}

std::string Clause::to_string() const { return literals_to_string(literals); }

std::string Inference::to_string() const {
  std::string s = std::to_string(conclusion->id) + ". " + conclusion->to_string() + " [" +
                  rule_name(rule);
  for (std::size_t i = 0; i < premises.size(); ++i)
    s += (i ? "," : " ") + std::to_string(premises[i]);
  if (!unifier.empty()) s += ", " + unifier;
  if (!conclusion->derivation.source.empty()) s += " " + conclusion->derivation.source;
  return s + "]";
}

namespace {

void type_vars_of(const Term& t, std::vector<std::uint32_t>& out) {
  collect_type_vars(t.type(), out);
  switch (t.kind()) {
    case Term::Kind::Sym:
      for (const auto& a : t.type_args()) collect_type_vars(a, out);
      break;
    case Term::Kind::App:
      type_vars_of(t.fun(), out);
      type_vars_of(t.arg(), out);
      break;
    case Term::Kind::Lam:
      collect_type_vars(t.binder_type(), out);
      type_vars_of(t.body(), out);
      break;
    default:
      break;
  }
}

std::vector<Literal> rename(const std::vector<Literal>& lits,
                            const std::map<std::uint32_t, Type>& tmap,
                            const std::map<VarId, VarId>& vmap) {
  TypeSubst ts(tmap.begin(), tmap.end());
  std::vector<Literal> out;
  out.reserve(lits.size());
  std::vector<std::pair<VarId, Type>> vars;
  for (const auto& l : lits) {
    collect_vars(l.lhs, vars);
    collect_vars(l.rhs, vars);
  }
  std::map<VarId, Term> repl;
  for (const auto& [v, ty] : vars) repl.emplace(v, Term::var(vmap.at(v), apply_types(ts, ty)));
  struct Renamer {
    const TypeSubst& ts;
    const std::map<VarId, Term>& repl;
    Term operator()(const Term& t) const {
      Term typed = map_types(t, ts);
      return go(typed);
    }
    Term go(const Term& t) const {
      if (!t.has_vars()) return t;
      switch (t.kind()) {
        case Term::Kind::Var:
          return repl.at(t.var_id());
        case Term::Kind::App:
          return Term::raw_app(go(t.fun()), go(t.arg()));
        case Term::Kind::Lam:
          return Term::lam(t.binder_type(), go(t.body()));
        default:
          return t;
      }
    }
  } renamer{ts, repl};
  for (const auto& l : lits) out.push_back(Literal{renamer(l.lhs), renamer(l.rhs), l.positive, l.constraint});
  return out;
}

}  // namespace

std::vector<Literal> normalize_variables(const std::vector<Literal>& lits) {
  std::vector<std::uint32_t> tvars;
  std::vector<std::pair<VarId, Type>> vars;
  for (const auto& l : lits) {
    type_vars_of(l.lhs, tvars);
    type_vars_of(l.rhs, tvars);
    collect_vars(l.lhs, vars);
    collect_vars(l.rhs, vars);
  }
  std::map<std::uint32_t, Type> tmap;
  for (std::uint32_t i = 0; i < tvars.size(); ++i) tmap.emplace(tvars[i], Type::var(i));
  std::map<VarId, VarId> vmap;
  for (VarId i = 0; i < vars.size(); ++i) vmap.emplace(vars[i].first, i);
  return rename(lits, tmap, vmap);
}

std::vector<Literal> offset_variables(const std::vector<Literal>& lits, VarId term_offset,
                                      std::uint32_t type_offset) {
  std::vector<std::uint32_t> tvars;
  std::vector<std::pair<VarId, Type>> vars;
  for (const auto& l : lits) {
    type_vars_of(l.lhs, tvars);
    type_vars_of(l.rhs, tvars);
    collect_vars(l.lhs, vars);
    collect_vars(l.rhs, vars);
  }
  std::map<std::uint32_t, Type> tmap;
  for (auto v : tvars) tmap.emplace(v, Type::var(v + type_offset));
  std::map<VarId, VarId> vmap;
  for (const auto& [v, ty] : vars) vmap.emplace(v, v + term_offset);
  return rename(lits, tmap, vmap);
}

}  // namespace hosup
