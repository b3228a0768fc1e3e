#pragma once

// Simply typed lambda terms over the semantic signature: entity, degree and
// truth-value sorts, function types, first-order connectives and quantifiers,
// and degree arithmetic (literals, addition, comparisons).

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "anota/rational.hpp"

namespace anota {

// ---------------------------------------------------------------- types

struct SemType;
using TypePtr = std::shared_ptr<const SemType>;

struct SemType {
  enum class Kind { E, D, T, Fun };
  Kind kind;
  TypePtr arg, res;  // Fun only
};

TypePtr ty_e();
TypePtr ty_d();
TypePtr ty_t();
TypePtr ty_fun(TypePtr arg, TypePtr res);

bool type_equal(const TypePtr& a, const TypePtr& b);
std::string type_to_string(const TypePtr& t);
TypePtr parse_type(const std::string& text);

// ---------------------------------------------------------------- terms

enum class TermKind {
  Var, Const, Abs, App,
  Not, And, Or, Implies, Forall, Exists,
  DegLit, DegAdd, Cmp,
};

enum class CmpOp { Gt, Ge, Lt, Le, Eq };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  CmpOp cmp = CmpOp::Gt;    // Cmp
  std::string name;         // Var/Const; binder name for Abs/Forall/Exists
  TypePtr type;             // Var/Const type; binder type for Abs/Forall/Exists
  TermPtr child0, child1;   // body / operands
  Rational value;           // DegLit
  std::string dim;          // DegLit dimension
};

TermPtr mk_var(std::string name, TypePtr type);
TermPtr mk_const(std::string name, TypePtr type);
TermPtr mk_abs(std::string var, TypePtr var_type, TermPtr body);
TermPtr mk_app(TermPtr fun, TermPtr arg);
TermPtr mk_app(TermPtr fun, TermPtr a1, TermPtr a2);
TermPtr mk_not(TermPtr a);
TermPtr mk_and(TermPtr a, TermPtr b);
TermPtr mk_or(TermPtr a, TermPtr b);
TermPtr mk_implies(TermPtr a, TermPtr b);
TermPtr mk_forall(std::string var, TypePtr sort, TermPtr body);
TermPtr mk_exists(std::string var, TypePtr sort, TermPtr body);
TermPtr mk_deglit(Rational value, std::string dim);
TermPtr mk_degadd(TermPtr a, TermPtr b);
TermPtr mk_cmp(CmpOp op, TermPtr lhs, TermPtr rhs);

struct TypeError : std::runtime_error {
  explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

// Free variable names (types play no role in binding).
std::set<std::string> free_vars(const TermPtr& t);

// Capture-avoiding substitution of `value` for free occurrences of `name`.
TermPtr substitute(const TermPtr& t, const std::string& name, const TermPtr& value);

// Principal type; throws TypeError naming the offending subterm.
TypePtr type_of(const TermPtr& t);

bool alpha_equal(const TermPtr& a, const TermPtr& b);

// Beta-normal form; also folds degree addition of two literals of one
// dimension. Defined on well-typed terms, hence terminating.
TermPtr beta_normalize(const TermPtr& t);

// Structural identity including binder names (stricter than alpha_equal).
bool term_identical(const TermPtr& a, const TermPtr& b);

// Fresh name based on `base` avoiding `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

}  // namespace anota
