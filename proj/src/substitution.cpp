#include "hosup/substitution.hpp"

namespace hosup {

namespace {

Term replace_vars(const Term& t, const std::map<VarId, Term>& m) {
  if (!t.has_vars()) return t;
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = m.find(t.var_id());
      return it == m.end() ? t : it->second;
    }
    case Term::Kind::App:
      return Term::app(replace_vars(t.fun(), m), replace_vars(t.arg(), m));
    case Term::Kind::Lam:
      return Term::lam(t.binder_type(), replace_vars(t.body(), m));
    default:
      return t;
  }
}

}  // namespace

const Term* Substitution::lookup(VarId v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? nullptr : &it->second;
}

void Substitution::bind(const Term& var, const Term& t) {
  if (!var.is_var()) throw std::invalid_argument("Substitution::bind: not a variable");
  if (t.loose_bound() != 0) throw std::invalid_argument("Substitution::bind: open term");
  Term rhs = apply(t);
  Type vt = apply(var.type());
  if (!(vt == rhs.type()))
    throw TypeError("cannot bind X" + std::to_string(var.var_id()) + " of type " + vt.to_string() +
                    " to a term of type " + rhs.type().to_string());
  std::map<VarId, Term> single{{var.var_id(), rhs}};
  for (auto& [k, r] : terms_) r = replace_vars(r, single);
  terms_[var.var_id()] = rhs;
}

bool Substitution::unify_types(const Type& a, const Type& b) {
  TypeSubst s = types_;
  if (!hosup::unify_types(a, b, s)) return false;
  if (s.size() != types_.size() || !(s == types_)) {
    types_ = std::move(s);
    for (auto& [k, r] : terms_) r = beta_normalize(map_types(r, types_));
  }
  return true;
}

Term Substitution::apply(const Term& t) const {
  if (empty()) return t;
  Term typed = map_types(t, types_);
  return terms_.empty() ? typed : replace_vars(typed, terms_);
}

std::string Substitution::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, ty] : types_) {
    s += (first ? "" : ", ") + ("T" + std::to_string(v)) + " -> " + ty.to_string();
    first = false;
  }
  for (const auto& [v, t] : terms_) {
    s += (first ? "" : ", ") + ("X" + std::to_string(v)) + " -> " + t.to_string();
    first = false;
  }
  return s + "}";
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [v, ty] : first.types_) out.types_[v] = apply_types(second.types_, ty);
  for (const auto& [v, ty] : second.types_) out.types_.emplace(v, ty);
  for (const auto& [v, t] : first.terms_) out.terms_[v] = second.apply(t);
  for (const auto& [v, t] : second.terms_) out.terms_.emplace(v, t);
  return out;
}

}  // namespace hosup
