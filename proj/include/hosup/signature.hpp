#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hosup/term.hpp"
#include "hosup/type.hpp"

namespace hosup {

/// A symbol's type, universally quantified over type variables 0..type_vars-1.
struct TypeScheme {
  std::uint32_t type_vars = 0;
  Type type;
};

struct SignatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Declared type constructors and term symbols.  `app`, `lam`, the index
/// family `d<i>` and the Boolean constants are reserved.
class Signature {
 public:
  Signature();

  static bool is_reserved(std::string_view name);

  void declare_type(std::string_view name);
  bool has_type(std::string_view name) const;

  void declare(std::string_view name, TypeScheme scheme);
  const TypeScheme* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  /// A symbol occurrence with its scheme instantiated at `type_args`.
  Term constant(std::string_view name, std::vector<Type> type_args = {}) const;

  /// Declares and returns a fresh symbol name `<prefix><n>`.
  std::string fresh_symbol(std::string_view prefix, TypeScheme scheme);

  const std::map<std::string, TypeScheme, std::less<>>& symbols() const { return symbols_; }

 private:
  std::map<std::string, TypeScheme, std::less<>> symbols_;
  std::set<std::string, std::less<>> types_;
  std::uint32_t fresh_counter_ = 0;
};

}  // namespace hosup
