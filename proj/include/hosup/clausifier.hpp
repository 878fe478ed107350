#pragma once

#include <utility>
#include <vector>

#include "hosup/clause.hpp"
#include "hosup/tptp.hpp"

namespace hosup {

struct PreprocessOptions {
  bool equality_to_equiv = false;
  bool func_ext_axiom = true;
  bool choice_axiom = false;
};

/// Rewrites Boolean equalities into equivalences (when enabled) and appends
/// the requested extensionality and choice axioms as statements.
Problem preprocess(Problem p, const PreprocessOptions& opts);

struct ClausifyOptions {
  /// A subformula is named once its clause count estimate exceeds this.
  unsigned naming_threshold = 8;
  bool naming = true;
};

/// Negates the conjecture, lifts Boolean subterms into defined symbols,
/// names large subformulas, then NNF, Skolemization and CNF.  Skolem and
/// definition symbols are added to the problem's signature.  Clauses carry
/// the originating statement name; added axioms get Rule::Axiom.
std::vector<Clause> clausify(Problem& p, const ClausifyOptions& opts = {});

/// The two sides of `! [X..]: s = t` (or `!=`), with the universally bound
/// variables as free variables numbered from 0.
std::pair<Term, Term> equation_terms(const Expr& e);

}  // namespace hosup
