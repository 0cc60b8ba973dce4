#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kucheck/operators.hpp"

namespace kuc::formula {

// Grammar (ASCII only):
//   pred    := expr ( ('=' | '<=' | '<') expr )?
//   expr    := term ( '|' term )*
//   term    := factor ( ('&' | '\') factor )*
//   factor  := '~' factor | app | atom
//   app     := ('K' | "K'" | 'U' | "U'" | 'A' | 'Uiter') '(' expr ')'
//   atom    := 'omega' | 'empty' | setlit | '(' expr ')'
//   setlit  := '{' ( label ( (',' | ' ') label )* )? '}'

enum class AppOp { K, KPrime, U, UPrime, A, UIter };
enum class SetOp { Intersect, Union, Difference };
enum class PredOp { Equal, SubsetEq, ProperSubset };

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct SetLit {
  std::vector<std::string> labels;
};
struct OmegaLit {};
struct EmptyLit {};
struct VarRef {  // reserved for future bindings; no surface syntax yet
  std::string name;
};
struct Apply {
  AppOp op;
  AstPtr child;
};
struct Complement {
  AstPtr child;
};
struct Binary {
  SetOp op;
  AstPtr lhs;
  AstPtr rhs;
};
struct Predicate {  // root only
  PredOp op;
  AstPtr lhs;
  AstPtr rhs;
};

struct Ast {
  std::variant<SetLit, OmegaLit, EmptyLit, VarRef, Apply, Complement, Binary, Predicate> node;
};

bool is_predicate(const Ast& ast);
bool ast_equal(const Ast& a, const Ast& b);

// Throws ParseError with a 1-based line:column on bad input.
AstPtr parse_formula(std::string_view text);

// Canonical form: minimal parentheses, single spaces around binary operators.
// parse(print(ast)) is structurally equal to ast.
std::string print_formula(const Ast& ast);

// Set-valued formulas yield an Event, predicates a bool. U applied to an
// argument that evaluates to the full space resolves to the union form of
// U(omega); Uiter applies the iterated definition verbatim.
std::variant<Event, bool> eval_formula(const Model& m, const Ast& ast, const Caps& caps = {});

}  // namespace kuc::formula
