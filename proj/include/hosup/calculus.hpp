#pragma once

#include <optional>
#include <vector>

#include "hosup/clause.hpp"
#include "hosup/ordering.hpp"
#include "hosup/unification.hpp"

namespace hosup {

struct CalculusConfig {
  UnifConfig unif;
  SelectionMode selection = SelectionMode::Heaviest;
  OrderingConfig ordering;

  /// Imitate and Project replace in-unification bindings at depth 0.
  bool imitate_project() const { return unif.depth == 0 && !unif.applicative; }
};

/// Each rule returns its conclusions as clauses with `derivation` filled in
/// (rule, premise ids, printed unifier) and id/age left at 0.  Variables of
/// the conclusions are not normalized.

/// Rewrites with a strictly eligible positive literal t = t' of `left` at the
/// non-variable first-order subterms of an eligible literal of `right`.
/// Ordering checks: t'σ must not be >= tσ, and s'σ must not be >= sσ;
/// Incomparable lets the inference through.
std::vector<Clause> superposition(const Clause& left, const Clause& right,
                                  const CalculusConfig& cfg);

/// Resolves an eligible negative literal; the residual constraints take its
/// place in the clause.
std::vector<Clause> equality_resolution(const Clause& c, const CalculusConfig& cfg);
/// EqRes on literal `i` regardless of selection and eligibility.
std::vector<Clause> equality_resolution_at(const Clause& c, std::size_t i,
                                           const CalculusConfig& cfg);

std::vector<Clause> equality_factoring(const Clause& c, const CalculusConfig& cfg);

/// Applies both sides of an eligible positive functional literal to fresh
/// variables, once per arity up to the type's arity.  A literal whose type
/// is a type variable gets one application after instantiating the variable
/// with a fresh arrow type.
std::vector<Clause> arg_cong(const Clause& c, const CalculusConfig& cfg);

/// The empty clause when every literal is flex-flex.
std::optional<Clause> flex_flex_simp(const Clause& c);

/// Depth-0 rules acting on an eligible literal x s1..sn != f t1..tm.  The
/// literal is kept in the conclusion.
std::vector<Clause> imitate_rule(const Clause& c, const CalculusConfig& cfg);
std::vector<Clause> project_rule(const Clause& c, const CalculusConfig& cfg);

/// All generating inferences with `given` against itself and `active`.
std::vector<Clause> generate(const Clause& given, const std::vector<ClausePtr>& active,
                             const CalculusConfig& cfg);

}  // namespace hosup
