#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hosup/substitution.hpp"
#include "hosup/term.hpp"

namespace hosup {

/// An equation or disequation.  Boolean atoms are encoded as `p = $true`.
struct Literal {
  Term lhs;
  Term rhs;
  bool positive = true;
  /// Provenance only: the literal is a residue of bounded unification.
  bool constraint = false;

  static Literal eq(Term l, Term r) { return Literal{std::move(l), std::move(r), true, false}; }
  static Literal neq(Term l, Term r) { return Literal{std::move(l), std::move(r), false, false}; }

  /// Negative literal whose both sides have variable heads.
  bool is_flex_flex() const { return !positive && lhs.is_flex() && rhs.is_flex(); }
  bool is_trivially_false() const { return !positive && lhs == rhs; }
  bool is_tautology() const { return positive && lhs == rhs; }
  std::uint32_t weight() const { return lhs.weight() + rhs.weight(); }

  Literal apply(const Substitution& s) const {
    return Literal{s.apply(lhs), s.apply(rhs), positive, constraint};
  }
  /// Same polarity and same sides, in either orientation.
  bool same_as(const Literal& o) const {
    return positive == o.positive &&
           ((lhs == o.lhs && rhs == o.rhs) || (lhs == o.rhs && rhs == o.lhs));
  }
  std::string to_string() const;
};

enum class Rule : std::uint8_t {
  Input,
  Axiom,
  Sup,
  EqRes,
  EqFact,
  ArgCong,
  FlexFlexSimp,
  Imitate,
  Project,
  Demod,
  TrivialLiteral,
  DuplicateLiteral,
};

const char* rule_name(Rule r);

using ClauseId = std::uint32_t;

struct Derivation {
  Rule rule = Rule::Input;
  std::vector<ClauseId> premises;
  std::string unifier;  // printed substitution, empty for non-unifying steps
  std::string source;   // input formula name
};

struct Clause {
  std::vector<Literal> literals;
  ClauseId id = 0;
  std::uint32_t age = 0;
  Derivation derivation;

  bool is_empty() const { return literals.empty(); }
  std::uint32_t weight() const;
  VarId max_var() const;
  std::uint32_t max_type_var() const;
  std::string to_string() const;
};

using ClausePtr = std::shared_ptr<const Clause>;

/// One proof step: conclusion derived by `rule` from the premise ids.
struct Inference {
  Rule rule;
  std::vector<ClauseId> premises;
  std::string unifier;
  ClausePtr conclusion;

  /// `id. <clause> [<rule> ids, σ]`
  std::string to_string() const;
};

/// Renames term and type variables to 0, 1, ... in order of first occurrence.
std::vector<Literal> normalize_variables(const std::vector<Literal>& lits);

/// Shifts every term and type variable id by the given offsets.
std::vector<Literal> offset_variables(const std::vector<Literal>& lits, VarId term_offset,
                                      std::uint32_t type_offset);

std::string literals_to_string(const std::vector<Literal>& lits);

}  // namespace hosup
