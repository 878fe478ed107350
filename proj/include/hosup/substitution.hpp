#pragma once

#include <map>
#include <string>

#include "hosup/term.hpp"
#include "hosup/type.hpp"

namespace hosup {

/// Simultaneous mapping of type variables and term variables.  Kept
/// idempotent: no range mentions a variable in the domain.  Term ranges are
/// closed, so applying under binders needs no index shifting.
class Substitution {
 public:
  bool empty() const { return types_.empty() && terms_.empty(); }
  const TypeSubst& types() const { return types_; }
  const std::map<VarId, Term>& terms() const { return terms_; }
  const Term* lookup(VarId v) const;

  /// Binds variable `var` (a Var term) to `t` after applying the current
  /// substitution to `t`.  Throws TypeError when the types disagree.
  void bind(const Term& var, const Term& t);
  /// Extends the type part with a unifier of `a` and `b`.
  bool unify_types(const Type& a, const Type& b);

  Term apply(const Term& t) const;
  Type apply(const Type& t) const { return apply_types(types_, t); }

  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  friend Substitution compose(const Substitution& first, const Substitution& second);
  TypeSubst types_;
  std::map<VarId, Term> terms_;
};

/// Applying the result equals applying `first` and then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

}  // namespace hosup
