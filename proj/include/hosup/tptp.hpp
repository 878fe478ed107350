#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hosup/signature.hpp"
#include "hosup/type.hpp"

namespace hosup {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Typed higher-order formula.  Binders carry one variable each; `var` is a
/// per-problem unique id for that variable, `name` its source spelling.
struct Expr {
  enum class Kind {
    Var, Const, App, Lambda, Forall, Exists,
    Not, And, Or, Implies, Iff, Xor, Eq, Neq, True, False
  };

  Kind kind = Kind::True;
  std::string name;
  std::uint32_t var = 0;
  Type type;  // Var/Const: own type; binders: bound variable type
  std::vector<Type> type_args;
  std::vector<ExprPtr> args;
  int line = 0;
  int col = 0;

  bool is_binder() const {
    return kind == Kind::Lambda || kind == Kind::Forall || kind == Kind::Exists;
  }
};

ExprPtr make_expr(Expr::Kind k, std::vector<ExprPtr> args);
ExprPtr make_var(std::string name, std::uint32_t id, Type type);
ExprPtr make_const(std::string name, Type type, std::vector<Type> type_args = {});
ExprPtr make_binder(Expr::Kind k, std::string name, std::uint32_t id, Type type, ExprPtr body);

Type type_of(const Expr& e);
/// Structural equality ignoring source positions and variable ids.
bool same_expr(const Expr& a, const Expr& b);
/// Fully parenthesized THF text that parses back to the same tree.
std::string to_thf(const Expr& e);

enum class Role { Axiom, Hypothesis, Definition, Lemma, Theorem, Conjecture, NegatedConjecture };

struct Statement {
  std::string name;
  Role role = Role::Axiom;
  ExprPtr formula;
};

struct Problem {
  Signature signature;
  /// Symbol declarations in source order (for printing).
  std::vector<std::pair<std::string, Type>> declarations;
  std::vector<std::string> type_declarations;
  std::vector<Statement> statements;
  std::uint32_t next_var = 0;

  bool has_conjecture() const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col);
  int line;
  int col;
};

struct ParseOptions {
  /// Directory that `include('...')` paths are resolved against.
  std::filesystem::path include_root;
};

Problem parse_problem(std::string_view text, const ParseOptions& opts = {});
Problem parse_file(const std::filesystem::path& path);
/// Continues parsing into an existing problem (shared signature).
void parse_into(Problem& p, std::string_view text, const ParseOptions& opts);

/// THF text for a whole problem: type declarations, then statements.
std::string to_thf(const Problem& p);

}  // namespace hosup
