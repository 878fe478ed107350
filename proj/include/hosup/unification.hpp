#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hosup/clause.hpp"
#include "hosup/substitution.hpp"
#include "hosup/term.hpp"

namespace hosup {

enum class PairKind { RigidRigid, FlexRigid, FlexFlex };

/// A pending unification problem `lhs =? rhs`, possibly below binders whose
/// argument types are listed in `context` (outermost first).
struct UnifPair {
  Term lhs;
  Term rhs;
  std::vector<Type> context;

  PairKind kind() const;
  /// The pair as a negative constraint literal, binders restored as lambdas.
  Literal to_constraint() const;
};

/// A depth-bounded unifier with its residual constraint literals.
struct ConstrainedUnifier {
  Substitution subst;
  std::vector<Literal> constraints;
  unsigned depth_used = 0;
};

struct UnifConfig {
  unsigned depth = 2;
  bool applicative = false;
};

/// Fresh variable supply, scoped to whoever owns it.
class FreshVars {
 public:
  explicit FreshVars(VarId next = 0) : next_(next) {}
  Term make(Type t) { return Term::var(next_++, std::move(t)); }
  VarId next() const { return next_; }

 private:
  VarId next_;
};

/// Human-readable record of the explored preunification tree.
using UnifTrace = std::vector<std::string>;

/// Enumerates the depth-n unifiers of `s` and `t`.  First-order steps
/// (deletion, decomposition, binding a bare variable) are free; each
/// imitation or projection uses one unit of the budget.  Spending the last
/// unit freezes the remaining pairs as constraints (identical pairs dropped,
/// head clashes pruned).  Flex-flex pairs are never solved and end up as
/// constraints.
std::vector<ConstrainedUnifier> depth_n_unifiers(const Term& s, const Term& t,
                                                 const UnifConfig& cfg, FreshVars& fresh,
                                                 UnifTrace* trace = nullptr);

/// x s1..sk =? f t1..tm  gives  x -> λy1..yk. f (z1 y1..yk) .. (zm y1..yk).
/// Empty when the rigid head is not a symbol or the types do not line up.
std::optional<Substitution> imitation_binding(const Term& flex, const Term& rigid,
                                              FreshVars& fresh);

/// One binding x -> λy1..yk. yi (z1 y1..yk) .. (zp y1..yk) per argument whose
/// type can produce the result type of the flex side.
std::vector<Substitution> projection_bindings(const Term& flex, const Term& rigid,
                                              FreshVars& fresh);

/// Syntactic most general unifier over the applicative encoding (lam and the
/// indices are plain symbols).  Never produces constraints.
std::optional<ConstrainedUnifier> applicative_unify(const Term& s, const Term& t);

}  // namespace hosup
