#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hosup {

/// Simple types with rank-1 type variables.  Arrow is right-associative:
/// `arrow(a, arrow(b, c))` is printed as `a > b > c`.
class Type {
 public:
  enum class Kind : std::uint8_t { Base, Var, Arrow, Ctor };

  Type() = default;

  static Type base(std::string_view name);
  static Type var(std::uint32_t id);
  static Type arrow(Type from, Type to);
  static Type arrows(std::span<const Type> args, Type result);
  static Type ctor(std::string_view name, std::vector<Type> args);

  static Type individual();  // $i
  static Type boolean();     // $o

  Kind kind() const;
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_var() const { return kind() == Kind::Var; }

  const std::string& name() const;
  std::uint32_t var_id() const;
  const Type& from() const;
  const Type& to() const;
  const std::vector<Type>& ctor_args() const;

  /// Number of leading arrows.
  std::size_t arity() const;
  /// Argument types of the leading arrows, in order.
  std::vector<Type> arg_types() const;
  /// The type left after stripping `n` leading arrows.
  Type result_after(std::size_t n) const;

  bool has_vars() const;
  std::size_t hash() const;
  std::string to_string() const;

  explicit operator bool() const { return node_ != nullptr; }

  friend bool operator==(const Type& a, const Type& b);
  /// Total structural order, used for deterministic containers.
  friend int compare(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeLess {
  bool operator()(const Type& a, const Type& b) const { return compare(a, b) < 0; }
};

using TypeSubst = std::map<std::uint32_t, Type>;

Type apply_types(const TypeSubst& s, const Type& t);

/// Most general unifier of two types, composed into `s` (kept idempotent).
bool unify_types(const Type& a, const Type& b, TypeSubst& s);

/// One-way matching: extends `s` so that apply(s, pattern) == target.
bool match_types(const Type& pattern, const Type& target, TypeSubst& s);

void collect_type_vars(const Type& t, std::vector<std::uint32_t>& out);
std::uint32_t max_type_var(const Type& t);  // 0 when none, else id+1

}  // namespace hosup
