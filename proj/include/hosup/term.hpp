#pragma once

#include <functional>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hosup/type.hpp"

namespace hosup {

using VarId = std::uint32_t;

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lambda terms over the applicative encoding.  Application is binary (the
/// `app` symbol), abstractions are `lam` nodes, and bound variables are De
/// Bruijn indices `d_i`.  Free variables carry an id and a type.
///
/// Terms are immutable and shared.  Every term built through `app`, `lam` and
/// the substitution functions is beta-normal; `raw_app` is the one way to
/// build a redex on purpose.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Sym, App, Lam, Index };

  Term() = default;

  static Term var(VarId id, Type type);
  static Term sym(std::string_view name, Type type, std::vector<Type> type_args = {});
  static Term index(std::uint32_t i, Type type);
  static Term lam(Type arg_type, Term body);
  /// Typed application; reduces the redex when `fun` is an abstraction.
  static Term app(Term fun, Term arg);
  static Term apps(Term head, std::span<const Term> args);
  /// Application without reduction.
  static Term raw_app(Term fun, Term arg);

  static Term true_const();
  static Term false_const();

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_sym() const { return kind() == Kind::Sym; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_index() const { return kind() == Kind::Index; }

  const Type& type() const;
  VarId var_id() const;
  std::uint32_t db_index() const;
  const std::string& name() const;
  const std::vector<Type>& type_args() const;
  const Term& fun() const;
  const Term& arg() const;
  const Term& body() const;
  const Type& binder_type() const;

  /// Head of the application spine (the term itself when not an application).
  const Term& head() const;
  std::size_t num_args() const;
  std::vector<Term> args() const;
  /// Head is a free variable.
  bool is_flex() const;
  /// Head is a symbol or a bound index.
  bool is_rigid() const;

  /// Symbol count of the encoded first-order term (app and lam count as symbols).
  std::uint32_t weight() const;
  /// One more than the largest dangling De Bruijn index; 0 for closed terms.
  std::uint32_t loose_bound() const;
  bool has_vars() const;
  bool has_lambda() const;
  bool var_below_lambda() const;
  bool is_ground() const { return !has_vars(); }
  std::size_t hash() const;

  std::string to_string() const;

  explicit operator bool() const { return node_ != nullptr; }
  bool same_node(const Term& o) const { return node_ == o.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend int compare(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make_app(Term fun, Term arg);
  std::shared_ptr<const Node> node_;
};

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Adjust dangling indices >= cutoff by `amount`.  Throws std::range_error
/// when an index would become negative.
Term shift(const Term& t, int amount, std::uint32_t cutoff = 0);

/// body[d0 := arg] with the usual index bookkeeping; the result is normal.
Term instantiate(const Term& body, const Term& arg);

Term beta_normalize(const Term& t);

enum class HeadKind { Symbol, Variable, Index, Lambda };
HeadKind head_of(const Term& t);

/// Path through the binary encoding: for an application 0 is the function
/// part and 1 the argument; for an abstraction 0 is the body.
struct Position {
  std::vector<std::uint8_t> path;
  bool is_prefix = false;
  bool is_below_lambda = false;

  bool first_order() const { return !is_prefix && !is_below_lambda; }
  friend bool operator==(const Position&, const Position&) = default;
};

/// Non-prefix subterms not below a lambda, root first, left to right.
std::vector<std::pair<Position, Term>> first_order_subterms(const Term& t);
/// Visits the same subterms as first_order_subterms with the raw path.
void for_each_first_order_subterm(
    const Term& t, const std::function<void(const std::vector<std::uint8_t>&, const Term&)>& fn);
/// Every subterm with its position flags, pre-order.
std::vector<std::pair<Position, Term>> all_subterms(const Term& t);
Term subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);

/// Free variables in order of first occurrence.
void collect_vars(const Term& t, std::vector<std::pair<VarId, Type>>& out);
bool occurs(VarId v, const Term& t);
VarId max_var(const Term& t);  // 0 when none, else id+1
std::uint32_t max_type_var(const Term& t);

Term map_types(const Term& t, const TypeSubst& s);

/// Checks application/abstraction/index typing and closedness.
bool is_well_typed(const Term& t);
bool is_beta_normal(const Term& t);

struct PrintOptions {
  bool show_types = false;
};
/// Named-binder display: `λY0. f Y0`, or `λY0:τ. f Y0` with types.
std::string to_display(const Term& t, PrintOptions opts = {});
/// Raw encoding: `lam(app(f, lam(d1)))`, with types `lam(τ, τ, d0(τ))`.
std::string to_raw(const Term& t, bool with_types = false);
/// THF concrete syntax, re-readable by the TPTP parser.
std::string to_thf(const Term& t);

}  // namespace hosup
