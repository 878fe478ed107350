#include "hosup/signature.hpp"

#include <cctype>

namespace hosup {

Signature::Signature() {
  types_.insert("$i");
  types_.insert("$o");
  symbols_.emplace("$true", TypeScheme{0, Type::boolean()});
  symbols_.emplace("$false", TypeScheme{0, Type::boolean()});
}

bool Signature::is_reserved(std::string_view name) {
  if (name == "app" || name == "lam" || name == "$true" || name == "$false") return true;
  if (name.size() >= 2 && name[0] == 'd') {
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
  }
  return false;
}

void Signature::declare_type(std::string_view name) {
  if (is_reserved(name)) throw SignatureError("reserved name used as a type: " + std::string(name));
  types_.insert(std::string(name));
}

bool Signature::has_type(std::string_view name) const { return types_.count(name) > 0; }

void Signature::declare(std::string_view name, TypeScheme scheme) {
  if (is_reserved(name)) throw SignatureError("cannot redefine reserved symbol " + std::string(name));
  auto it = symbols_.find(name);
  if (it != symbols_.end()) {
    if (it->second.type_vars == scheme.type_vars && it->second.type == scheme.type) return;
    throw SignatureError("conflicting declaration for " + std::string(name));
  }
  symbols_.emplace(std::string(name), std::move(scheme));
}

const TypeScheme* Signature::find(std::string_view name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

Term Signature::constant(std::string_view name, std::vector<Type> type_args) const {
  const TypeScheme* s = find(name);
  if (!s) throw SignatureError("undeclared symbol " + std::string(name));
  if (type_args.size() != s->type_vars)
    throw SignatureError("wrong number of type arguments for " + std::string(name));
  TypeSubst inst;
  for (std::uint32_t i = 0; i < s->type_vars; ++i) inst[i] = type_args[i];
  return Term::sym(name, apply_types(inst, s->type), std::move(type_args));
}

std::string Signature::fresh_symbol(std::string_view prefix, TypeScheme scheme) {
  std::string name;
  do {
    name = std::string(prefix) + std::to_string(fresh_counter_++);
  } while (symbols_.count(name) || is_reserved(name));
  symbols_.emplace(name, std::move(scheme));
  return name;
}

}  // namespace hosup
