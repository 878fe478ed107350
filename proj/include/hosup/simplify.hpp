#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hosup/clause.hpp"
#include "hosup/ordering.hpp"

namespace hosup {

/// One-way syntactic matching over the encoding, extending `terms`/`types`.
/// Pattern variables only capture closed target subterms.
bool match_term(const Term& pattern, const Term& target, std::map<VarId, Term>& terms,
                TypeSubst& types);

/// A substitution θ with θ(pattern) == target, if any.  Pattern and target
/// must not share variables.
std::optional<Substitution> match(const Term& pattern, const Term& target);

/// Multiset subsumption: some θ maps the literals of `general` injectively
/// onto literals of `specific`.  Variables are renamed apart internally.
bool subsumes(const std::vector<Literal>& general, const std::vector<Literal>& specific);

/// Equal up to variable renaming (and literal order).
bool is_variant(const std::vector<Literal>& a, const std::vector<Literal>& b);

/// Drops literals t != t.
std::vector<Literal> remove_trivial_literals(const std::vector<Literal>& lits);
/// Keeps the first of each group of identical literals.
std::vector<Literal> remove_duplicate_literals(const std::vector<Literal>& lits);
/// Contains t = t, or both l = r and l != r.
bool is_tautology(const std::vector<Literal>& lits);

struct DemodResult {
  std::vector<Literal> literals;
  std::vector<ClauseId> used;  // unit clause ids, in order of first use
};

/// Rewrites first-order subterms with oriented instances of the positive unit
/// equations in `units` until none applies.  Empty when nothing changed.
std::optional<DemodResult> demodulate(const Clause& c, const std::vector<ClausePtr>& units,
                                      const OrderingConfig& cfg);

}  // namespace hosup
