#include "hosup/type.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hosup {

struct Type::Node {
  Kind kind;
  std::string name;
  std::uint32_t var_id = 0;
  Type from, to;
  std::vector<Type> args;
  std::size_t hash = 0;
  bool has_vars = false;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Type Type::base(std::string_view name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Base;
  n->name = std::string(name);
  n->hash = mix(1, std::hash<std::string>{}(n->name));
  return Type(std::move(n));
}

Type Type::var(std::uint32_t id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var_id = id;
  n->hash = mix(2, id);
  n->has_vars = true;
  return Type(std::move(n));
}

Type Type::arrow(Type from, Type to) {
  if (!from || !to) throw std::invalid_argument("arrow type with null component");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->hash = mix(mix(3, from.hash()), to.hash());
  n->has_vars = from.has_vars() || to.has_vars();
  n->from = std::move(from);
  n->to = std::move(to);
  return Type(std::move(n));
}

Type Type::arrows(std::span<const Type> args, Type result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, std::move(result));
  return result;
}

Type Type::ctor(std::string_view name, std::vector<Type> args) {
  if (args.empty()) return base(name);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ctor;
  n->name = std::string(name);
  std::size_t h = mix(4, std::hash<std::string>{}(n->name));
  for (const auto& a : args) {
    h = mix(h, a.hash());
    n->has_vars = n->has_vars || a.has_vars();
  }
  n->hash = h;
  n->args = std::move(args);
  return Type(std::move(n));
}

Type Type::individual() {
  static const Type t = base("$i");
  return t;
}

Type Type::boolean() {
  static const Type t = base("$o");
  return t;
}

Type::Kind Type::kind() const { return node_->kind; }
const std::string& Type::name() const { return node_->name; }
std::uint32_t Type::var_id() const { return node_->var_id; }
const Type& Type::from() const { return node_->from; }
const Type& Type::to() const { return node_->to; }
const std::vector<Type>& Type::ctor_args() const { return node_->args; }

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Type* t = this; t->is_arrow(); t = &t->to()) ++n;
  return n;
}

std::vector<Type> Type::arg_types() const {
  std::vector<Type> out;
  for (const Type* t = this; t->is_arrow(); t = &t->to()) out.push_back(t->from());
  return out;
}

Type Type::result_after(std::size_t n) const {
  Type t = *this;
  for (std::size_t i = 0; i < n; ++i) {
    if (!t.is_arrow()) throw std::logic_error("result_after: type has too few arguments");
    t = t.to();
  }
  return t;
}

bool Type::has_vars() const { return node_->has_vars; }
std::size_t Type::hash() const { return node_ ? node_->hash : 0; }

std::string Type::to_string() const {
  if (!node_) return "<null>";
  switch (kind()) {
    case Kind::Base:
      return name();
    case Kind::Var:
      return "T" + std::to_string(var_id());
    case Kind::Arrow: {
      std::string lhs = from().to_string();
      if (from().is_arrow()) lhs = "(" + lhs + ")";
      return lhs + " > " + to().to_string();
    }
    case Kind::Ctor: {
      std::string s = name() + "(";
      for (std::size_t i = 0; i < ctor_args().size(); ++i) {
        if (i) s += ",";
        s += ctor_args()[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return compare(a, b) == 0;
}

int compare(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_) return -1;
  if (!b.node_) return 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Type::Kind::Base:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case Type::Kind::Var:
      return a.var_id() < b.var_id() ? -1 : (a.var_id() == b.var_id() ? 0 : 1);
    case Type::Kind::Arrow: {
      if (int c = compare(a.from(), b.from())) return c;
      return compare(a.to(), b.to());
    }
    case Type::Kind::Ctor: {
      if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
      if (a.ctor_args().size() != b.ctor_args().size())
        return a.ctor_args().size() < b.ctor_args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.ctor_args().size(); ++i)
        if (int c = compare(a.ctor_args()[i], b.ctor_args()[i])) return c;
      return 0;
    }
  }
  return 0;
}

Type apply_types(const TypeSubst& s, const Type& t) {
  if (s.empty() || !t.has_vars()) return t;
  switch (t.kind()) {
    case Type::Kind::Base:
      return t;
    case Type::Kind::Var: {
      auto it = s.find(t.var_id());
      return it == s.end() ? t : it->second;
    }
    case Type::Kind::Arrow:
      return Type::arrow(apply_types(s, t.from()), apply_types(s, t.to()));
    case Type::Kind::Ctor: {
      std::vector<Type> args;
      for (const auto& a : t.ctor_args()) args.push_back(apply_types(s, a));
      return Type::ctor(t.name(), std::move(args));
    }
  }
  return t;
}

namespace {

bool occurs(std::uint32_t v, const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Base:
      return false;
    case Type::Kind::Var:
      return t.var_id() == v;
    case Type::Kind::Arrow:
      return occurs(v, t.from()) || occurs(v, t.to());
    case Type::Kind::Ctor:
      return std::any_of(t.ctor_args().begin(), t.ctor_args().end(),
                         [&](const Type& a) { return occurs(v, a); });
  }
  return false;
}

void bind_type(TypeSubst& s, std::uint32_t v, const Type& t) {
  TypeSubst single{{v, t}};
  for (auto& [k, val] : s) val = apply_types(single, val);
  s[v] = t;
}

}  // namespace

bool unify_types(const Type& a0, const Type& b0, TypeSubst& s) {
  Type a = apply_types(s, a0);
  Type b = apply_types(s, b0);
  if (a == b) return true;
  if (a.is_var()) {
    if (occurs(a.var_id(), b)) return false;
    bind_type(s, a.var_id(), b);
    return true;
  }
  if (b.is_var()) return unify_types(b, a, s);
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::Base:
      return a.name() == b.name();
    case Type::Kind::Arrow:
      return unify_types(a.from(), b.from(), s) && unify_types(a.to(), b.to(), s);
    case Type::Kind::Ctor:
      if (a.name() != b.name() || a.ctor_args().size() != b.ctor_args().size()) return false;
      for (std::size_t i = 0; i < a.ctor_args().size(); ++i)
        if (!unify_types(a.ctor_args()[i], b.ctor_args()[i], s)) return false;
      return true;
    case Type::Kind::Var:
      break;
  }
  return false;
}

bool match_types(const Type& p, const Type& t, TypeSubst& s) {
  switch (p.kind()) {
    case Type::Kind::Var: {
      auto it = s.find(p.var_id());
      if (it != s.end()) return it->second == t;
      s.emplace(p.var_id(), t);
      return true;
    }
    case Type::Kind::Base:
      return p == t;
    case Type::Kind::Arrow:
      return t.is_arrow() && match_types(p.from(), t.from(), s) && match_types(p.to(), t.to(), s);
    case Type::Kind::Ctor:
      if (t.kind() != Type::Kind::Ctor || t.name() != p.name() ||
          t.ctor_args().size() != p.ctor_args().size())
        return false;
      for (std::size_t i = 0; i < p.ctor_args().size(); ++i)
        if (!match_types(p.ctor_args()[i], t.ctor_args()[i], s)) return false;
      return true;
  }
  return false;
}

void collect_type_vars(const Type& t, std::vector<std::uint32_t>& out) {
  if (!t.has_vars()) return;
  switch (t.kind()) {
    case Type::Kind::Var:
      if (std::find(out.begin(), out.end(), t.var_id()) == out.end()) out.push_back(t.var_id());
      break;
    case Type::Kind::Arrow:
      collect_type_vars(t.from(), out);
      collect_type_vars(t.to(), out);
      break;
    case Type::Kind::Ctor:
      for (const auto& a : t.ctor_args()) collect_type_vars(a, out);
      break;
    case Type::Kind::Base:
      break;
  }
}

std::uint32_t max_type_var(const Type& t) {
  std::vector<std::uint32_t> vs;
  collect_type_vars(t, vs);
  std::uint32_t m = 0;
  for (auto v : vs) m = std::max(m, v + 1);
  return m;
}

}  // namespace hosup
