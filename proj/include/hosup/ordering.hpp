#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hosup/clause.hpp"
#include "hosup/term.hpp"

namespace hosup {

enum class OrderingResult { Greater, Less, Equal, Incomparable };

OrderingResult reverse(OrderingResult r);
const char* to_string(OrderingResult r);

enum class PrecedenceMode { Frequency, Occurrence };
enum class SelectionMode { Heaviest, None };

/// Knuth-Bendix ordering parameters over the applicative encoding.  All
/// symbols weigh 1, including `app`, `lam` and the indices `d_i`.
struct OrderingConfig {
  /// Larger rank means larger in the precedence.  Symbols missing from the
  /// map rank above all listed ones, ordered by name.
  std::map<std::string, int, std::less<>> precedence;

  /// Frequency: rarer symbols are bigger, ties by name.  Occurrence: later
  /// first occurrence is bigger.
  static OrderingConfig from_clauses(std::span<const std::vector<Literal>> clauses,
                                     PrecedenceMode mode = PrecedenceMode::Frequency);
};

/// KBO on the encoded first-order view.  Pairs where a free variable sits
/// below a lambda are reported Incomparable: substitution followed by
/// beta-reduction can change their relative size.
OrderingResult compare(const Term& s, const Term& t, const OrderingConfig& cfg);

/// Multiset extension: `s = t` as {s, t}, `s != t` as {s, s, t, t}.
OrderingResult compare(const Literal& a, const Literal& b, const OrderingConfig& cfg);

/// Indices of selected literals: empty, or exactly one negative literal that
/// is not flex-flex (the heaviest such literal, leftmost on ties).
std::vector<std::size_t> select(const std::vector<Literal>& lits, SelectionMode mode);

bool is_maximal(const std::vector<Literal>& lits, std::size_t i, bool strict,
                const OrderingConfig& cfg);

/// (Strict) eligibility of literal `i` with respect to `sigma`.  Negative
/// flex-flex literals are never eligible.
bool eligible(const std::vector<Literal>& lits, std::size_t i, const Substitution& sigma,
              bool strict, SelectionMode mode, const OrderingConfig& cfg);

}  // namespace hosup
