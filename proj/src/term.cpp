#include "hosup/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hosup {

struct Term::Node {
  Kind kind;
  Type type;
  std::uint32_t id = 0;  // variable id or De Bruijn index
  std::string name;
  std::vector<Type> type_args;
  Term a, b;    // App: fun, arg.  Lam: body in a.
  Type binder;  // Lam argument type
  Term head;    // App only
  std::uint32_t nargs = 0;
  std::uint32_t weight = 1;
  std::uint32_t loose = 0;
  bool has_vars = false;
  bool has_lambda = false;
  bool var_below_lambda = false;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::var(VarId id, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->id = id;
  n->hash = mix(mix(11, id), type.hash());
  n->type = std::move(type);
  n->has_vars = true;
  return Term(std::move(n));
}

Term Term::sym(std::string_view name, Type type, std::vector<Type> type_args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sym;
  n->name = std::string(name);
  std::size_t h = mix(mix(12, std::hash<std::string>{}(n->name)), type.hash());
  for (const auto& t : type_args) h = mix(h, t.hash());
  n->hash = h;
  n->type = std::move(type);
  n->type_args = std::move(type_args);
  return Term(std::move(n));
}

Term Term::index(std::uint32_t i, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Index;
  n->id = i;
  n->hash = mix(mix(13, i), type.hash());
  n->type = std::move(type);
  n->loose = i + 1;
  return Term(std::move(n));
}

Term Term::lam(Type arg_type, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->type = Type::arrow(arg_type, body.type());
  n->hash = mix(mix(14, arg_type.hash()), body.hash());
  n->weight = 1 + body.weight();
  n->loose = body.loose_bound() > 0 ? body.loose_bound() - 1 : 0;
  n->has_vars = body.has_vars();
  n->has_lambda = true;
  n->var_below_lambda = body.has_vars();
  n->binder = std::move(arg_type);
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::make_app(Term fun, Term arg) {
  const Type& ft = fun.type();
  if (!ft.is_arrow() || !(ft.from() == arg.type()))
    throw TypeError("type mismatch in application: function of type " + ft.to_string() +
                    " applied to argument of type " + arg.type().to_string());
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->type = ft.to();
  n->hash = mix(mix(15, fun.hash()), arg.hash());
  n->weight = 1 + fun.weight() + arg.weight();
  n->loose = std::max(fun.loose_bound(), arg.loose_bound());
  n->has_vars = fun.has_vars() || arg.has_vars();
  n->has_lambda = fun.has_lambda() || arg.has_lambda();
  n->var_below_lambda = fun.var_below_lambda() || arg.var_below_lambda();
  n->head = fun.head();
  n->nargs = static_cast<std::uint32_t>(fun.num_args() + 1);
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::raw_app(Term fun, Term arg) { return make_app(std::move(fun), std::move(arg)); }

Term Term::app(Term fun, Term arg) {
  if (fun.is_lam()) {
    if (!(fun.binder_type() == arg.type()))
      throw TypeError("type mismatch in application: abstraction over " +
                      fun.binder_type().to_string() + " applied to argument of type " +
                      arg.type().to_string());
    return instantiate(fun.body(), arg);
  }
  return make_app(std::move(fun), std::move(arg));
}

Term Term::apps(Term head, std::span<const Term> args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}

Term Term::true_const() {
  static const Term t = sym("$true", Type::boolean());
  return t;
}

Term Term::false_const() {
  static const Term t = sym("$false", Type::boolean());
  return t;
}

Term::Kind Term::kind() const { return node_->kind; }
const Type& Term::type() const { return node_->type; }
VarId Term::var_id() const { return node_->id; }
std::uint32_t Term::db_index() const { return node_->id; }
const std::string& Term::name() const { return node_->name; }
const std::vector<Type>& Term::type_args() const { return node_->type_args; }
const Term& Term::fun() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
const Term& Term::body() const { return node_->a; }
const Type& Term::binder_type() const { return node_->binder; }

const Term& Term::head() const { return is_app() ? node_->head : *this; }
std::size_t Term::num_args() const { return is_app() ? node_->nargs : 0; }

std::vector<Term> Term::args() const {
  std::vector<Term> out(num_args());
  const Term* t = this;
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = t->arg();
    t = &t->fun();
  }
  return out;
}

bool Term::is_flex() const { return head().is_var(); }
bool Term::is_rigid() const { return head().is_sym() || head().is_index(); }

std::uint32_t Term::weight() const { return node_->weight; }
std::uint32_t Term::loose_bound() const { return node_->loose; }
bool Term::has_vars() const { return node_->has_vars; }
bool Term::has_lambda() const { return node_->has_lambda; }
bool Term::var_below_lambda() const { return node_->var_below_lambda; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }

std::string Term::to_string() const { return to_display(*this); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_) return -1;
  if (!b.node_) return 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  auto cmp_u = [](auto x, auto y) { return x < y ? -1 : (x == y ? 0 : 1); };
  switch (a.kind()) {
    case Term::Kind::Var:
      if (int c = cmp_u(a.var_id(), b.var_id())) return c;
      return compare(a.type(), b.type());
    case Term::Kind::Index:
      if (int c = cmp_u(a.db_index(), b.db_index())) return c;
      return compare(a.type(), b.type());
    case Term::Kind::Sym: {
      if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
      if (int c = compare(a.type(), b.type())) return c;
      if (int c = cmp_u(a.type_args().size(), b.type_args().size())) return c;
      for (std::size_t i = 0; i < a.type_args().size(); ++i)
        if (int c = compare(a.type_args()[i], b.type_args()[i])) return c;
      return 0;
    }
    case Term::Kind::App:
      if (int c = compare(a.fun(), b.fun())) return c;
      return compare(a.arg(), b.arg());
    case Term::Kind::Lam:
      if (int c = compare(a.binder_type(), b.binder_type())) return c;
      return compare(a.body(), b.body());
  }
  return 0;
}

Term shift(const Term& t, int amount, std::uint32_t cutoff) {
  if (amount == 0 || t.loose_bound() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Index: {
      long long ni = static_cast<long long>(t.db_index()) + amount;
      if (ni < 0) throw std::range_error("De Bruijn index shifted below zero");
      return Term::index(static_cast<std::uint32_t>(ni), t.type());
    }
    case Term::Kind::App:
      return Term::raw_app(shift(t.fun(), amount, cutoff), shift(t.arg(), amount, cutoff));
    case Term::Kind::Lam:
      return Term::lam(t.binder_type(), shift(t.body(), amount, cutoff + 1));
    default:
      return t;
  }
}

namespace {

Term subst_index(const Term& t, std::uint32_t depth, const Term& arg) {
  if (t.loose_bound() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Index:
      if (t.db_index() == depth) return shift(arg, static_cast<int>(depth), 0);
      return Term::index(t.db_index() - 1, t.type());
    case Term::Kind::App:
      return Term::app(subst_index(t.fun(), depth, arg), subst_index(t.arg(), depth, arg));
    case Term::Kind::Lam:
      return Term::lam(t.binder_type(), subst_index(t.body(), depth + 1, arg));
    default:
      return t;
  }
}

}  // namespace

Term instantiate(const Term& body, const Term& arg) { return subst_index(body, 0, arg); }

Term beta_normalize(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::App:
      return Term::app(beta_normalize(t.fun()), beta_normalize(t.arg()));
    case Term::Kind::Lam:
      return Term::lam(t.binder_type(), beta_normalize(t.body()));
    default:
      return t;
  }
}

HeadKind head_of(const Term& t) {
  const Term& h = t.head();
  switch (h.kind()) {
    case Term::Kind::Var:
      return HeadKind::Variable;
    case Term::Kind::Index:
      return HeadKind::Index;
    case Term::Kind::Lam:
      return HeadKind::Lambda;
    default:
      return HeadKind::Symbol;
  }
}

namespace {

void fo_subterms(const Term& t, std::vector<std::uint8_t>& path,
                 std::vector<std::pair<Position, Term>>& out) {
  out.push_back({Position{path, false, false}, t});
  if (!t.is_app()) return;
  auto args = t.args();
  const std::size_t n = args.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = path.size();
    path.insert(path.end(), n - 1 - i, 0);
    path.push_back(1);
    fo_subterms(args[i], path, out);
    path.resize(base);
  }
}

void visit_fo(const Term& t, std::vector<std::uint8_t>& path,
              const std::function<void(const std::vector<std::uint8_t>&, const Term&)>& fn) {
  fn(path, t);
  if (!t.is_app()) return;
  auto args = t.args();
  const std::size_t n = args.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = path.size();
    path.insert(path.end(), n - 1 - i, 0);
    path.push_back(1);
    visit_fo(args[i], path, fn);
    path.resize(base);
  }
}

void every_subterm(const Term& t, Position& pos, std::vector<std::pair<Position, Term>>& out) {
  out.push_back({pos, t});
  const Position saved = pos;
  if (t.is_app()) {
    pos.path.push_back(0);
    pos.is_prefix = true;
    every_subterm(t.fun(), pos, out);
    pos = saved;
    pos.path.push_back(1);
    pos.is_prefix = false;
    every_subterm(t.arg(), pos, out);
    pos = saved;
  } else if (t.is_lam()) {
    pos.path.push_back(0);
    pos.is_prefix = false;
    pos.is_below_lambda = true;
    every_subterm(t.body(), pos, out);
    pos = saved;
  }
}

Term replace_rec(const Term& t, const std::vector<std::uint8_t>& path, std::size_t i,
                 const Term& r) {
  if (i == path.size()) {
    if (!(r.type() == t.type()))
      throw TypeError("replacement of type " + r.type().to_string() + " at position of type " +
                      t.type().to_string());
    return r;
  }
  if (t.is_app()) {
    if (path[i] == 0) return Term::app(replace_rec(t.fun(), path, i + 1, r), t.arg());
    return Term::app(t.fun(), replace_rec(t.arg(), path, i + 1, r));
  }
  if (t.is_lam()) return Term::lam(t.binder_type(), replace_rec(t.body(), path, i + 1, r));
  throw std::out_of_range("position does not exist in term");
}

}  // namespace

std::vector<std::pair<Position, Term>> first_order_subterms(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  std::vector<std::uint8_t> path;
  fo_subterms(t, path, out);
  return out;
}

void for_each_first_order_subterm(
    const Term& t, const std::function<void(const std::vector<std::uint8_t>&, const Term&)>& fn) {
  std::vector<std::uint8_t> path;
  visit_fo(t, path, fn);
}

std::vector<std::pair<Position, Term>> all_subterms(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  Position p;
  every_subterm(t, p, out);
  return out;
}

Term subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (auto step : p.path) {
    if (cur->is_app())
      cur = step == 0 ? &cur->fun() : &cur->arg();
    else if (cur->is_lam())
      cur = &cur->body();
    else
      throw std::out_of_range("position does not exist in term");
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
  return replace_rec(t, p.path, 0, replacement);
}

void collect_vars(const Term& t, std::vector<std::pair<VarId, Type>>& out) {
  if (!t.has_vars()) return;
  switch (t.kind()) {
    case Term::Kind::Var:
      if (std::none_of(out.begin(), out.end(), [&](const auto& p) { return p.first == t.var_id(); }))
        out.emplace_back(t.var_id(), t.type());
      break;
    case Term::Kind::App:
      collect_vars(t.fun(), out);
      collect_vars(t.arg(), out);
      break;
    case Term::Kind::Lam:
      collect_vars(t.body(), out);
      break;
    default:
      break;
  }
}

bool occurs(VarId v, const Term& t) {
  if (!t.has_vars()) return false;
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_id() == v;
    case Term::Kind::App:
      return occurs(v, t.fun()) || occurs(v, t.arg());
    case Term::Kind::Lam:
      return occurs(v, t.body());
    default:
      return false;
  }
}

VarId max_var(const Term& t) {
  if (!t.has_vars()) return 0;
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_id() + 1;
    case Term::Kind::App:
      return std::max(max_var(t.fun()), max_var(t.arg()));
    case Term::Kind::Lam:
      return max_var(t.body());
    default:
      return 0;
  }
}

std::uint32_t max_type_var(const Term& t) {
  std::uint32_t m = max_type_var(t.type());
  switch (t.kind()) {
    case Term::Kind::Sym:
      for (const auto& a : t.type_args()) m = std::max(m, max_type_var(a));
      break;
    case Term::Kind::App:
      m = std::max({m, max_type_var(t.fun()), max_type_var(t.arg())});
      break;
    case Term::Kind::Lam:
      m = std::max({m, max_type_var(t.binder_type()), max_type_var(t.body())});
      break;
    default:
      break;
  }
  return m;
}

Term map_types(const Term& t, const TypeSubst& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.type().has_vars() ? Term::var(t.var_id(), apply_types(s, t.type())) : t;
    case Term::Kind::Index:
      return t.type().has_vars() ? Term::index(t.db_index(), apply_types(s, t.type())) : t;
    case Term::Kind::Sym: {
      bool poly = t.type().has_vars();
      for (const auto& a : t.type_args()) poly = poly || a.has_vars();
      if (!poly) return t;
      std::vector<Type> targs;
      for (const auto& a : t.type_args()) targs.push_back(apply_types(s, a));
      return Term::sym(t.name(), apply_types(s, t.type()), std::move(targs));
    }
    case Term::Kind::App:
      return Term::raw_app(map_types(t.fun(), s), map_types(t.arg(), s));
    case Term::Kind::Lam:
      return Term::lam(apply_types(s, t.binder_type()), map_types(t.body(), s));
  }
  return t;
}

namespace {

bool typed_in(const Term& t, std::vector<Type>& ctx) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return t.db_index() < ctx.size() && ctx[ctx.size() - 1 - t.db_index()] == t.type();
    case Term::Kind::App:
      return t.fun().type().is_arrow() && t.fun().type().from() == t.arg().type() &&
             t.fun().type().to() == t.type() && typed_in(t.fun(), ctx) &&
             typed_in(t.arg(), ctx);
    case Term::Kind::Lam: {
      if (!(t.type() == Type::arrow(t.binder_type(), t.body().type()))) return false;
      ctx.push_back(t.binder_type());
      bool ok = typed_in(t.body(), ctx);
      ctx.pop_back();
      return ok;
    }
    default:
      return true;
  }
}

void display(const Term& t, std::uint32_t depth, const PrintOptions& opts, bool atomic,
             std::ostringstream& os) {
  switch (t.kind()) {
    case Term::Kind::Var:
      os << "X" << t.var_id();
      return;
    case Term::Kind::Sym:
      os << t.name();
      return;
    case Term::Kind::Index:
      if (t.db_index() < depth)
        os << "Y" << (depth - 1 - t.db_index());
      else
        os << "d" << t.db_index();
      return;
    case Term::Kind::Lam: {
      if (atomic) os << "(";
      os << "λY" << depth;
      if (opts.show_types) os << ":" << t.binder_type().to_string();
      os << ". ";
      display(t.body(), depth + 1, opts, false, os);
      if (atomic) os << ")";
      return;
    }
    case Term::Kind::App: {
      if (atomic) os << "(";
      display(t.head(), depth, opts, true, os);
      for (const auto& a : t.args()) {
        os << " ";
        display(a, depth, opts, true, os);
      }
      if (atomic) os << ")";
      return;
    }
  }
}

void raw(const Term& t, bool types, std::ostringstream& os) {
  switch (t.kind()) {
    case Term::Kind::Var:
      os << "X" << t.var_id();
      return;
    case Term::Kind::Sym:
      os << t.name();
      if (types && !t.type_args().empty()) {
        os << "(";
        for (std::size_t i = 0; i < t.type_args().size(); ++i)
          os << (i ? ", " : "") << t.type_args()[i].to_string();
        os << ")";
      }
      return;
    case Term::Kind::Index:
      os << "d" << t.db_index();
      if (types) os << "(" << t.type().to_string() << ")";
      return;
    case Term::Kind::Lam:
      os << "lam(";
      if (types) os << t.binder_type().to_string() << ", " << t.body().type().to_string() << ", ";
      raw(t.body(), types, os);
      os << ")";
      return;
    case Term::Kind::App:
      os << "app(";
      if (types)
        os << t.fun().type().from().to_string() << ", " << t.fun().type().to().to_string() << ", ";
      raw(t.fun(), types, os);
      os << ", ";
      raw(t.arg(), types, os);
      os << ")";
      return;
  }
}

std::string thf_type(const Type& t) {
  if (t.is_arrow()) {
    std::string lhs = thf_type(t.from());
    if (t.from().is_arrow()) lhs = "(" + lhs + ")";
    return lhs + " > " + thf_type(t.to());
  }
  return t.to_string();
}

void thf(const Term& t, std::uint32_t depth, std::ostringstream& os) {
  switch (t.kind()) {
    case Term::Kind::Var:
      os << "X" << t.var_id();
      return;
    case Term::Kind::Sym:
      os << t.name();
      return;
    case Term::Kind::Index:
      if (t.db_index() >= depth) throw std::logic_error("to_thf: dangling De Bruijn index");
      os << "Y" << (depth - 1 - t.db_index());
      return;
    case Term::Kind::Lam:
      os << "(^[Y" << depth << ": " << thf_type(t.binder_type()) << "]: ";
      thf(t.body(), depth + 1, os);
      os << ")";
      return;
    case Term::Kind::App:
      os << "(";
      thf(t.head(), depth, os);
      for (const auto& a : t.args()) {
        os << " @ ";
        thf(a, depth, os);
      }
      os << ")";
      return;
  }
}

}  // namespace

bool is_beta_normal(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::App:
      return !t.fun().is_lam() && is_beta_normal(t.fun()) && is_beta_normal(t.arg());
    case Term::Kind::Lam:
      return is_beta_normal(t.body());
    default:
      return true;
  }
}

bool is_well_typed(const Term& t) {
  std::vector<Type> ctx;
  return t.loose_bound() == 0 && typed_in(t, ctx);
}

std::string to_display(const Term& t, PrintOptions opts) {
  std::ostringstream os;
  display(t, 0, opts, false, os);
  return os.str();
}

std::string to_raw(const Term& t, bool with_types) {
  std::ostringstream os;
  raw(t, with_types, os);
  return os.str();
}

std::string to_thf(const Term& t) {
  std::ostringstream os;
  thf(t, 0, os);
  return os.str();
}

}  // namespace hosup
