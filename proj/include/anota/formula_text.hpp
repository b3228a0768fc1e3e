#pragma once

// Canonical text form for semantic representations.
//
//   exists d:D. (tall(m, d) & ~tall(h, d))
//   forall y:E. (person(y) -> exists d:D. (tall(m, d) & ~tall(y, d)))
//   small(m, th(small, animal)) & animal(m)
//   exists d:D. (tall(m, d) & d > lit(48, length))
//
// Thresholds print as th(adj, class), the choice function as the(noun),
// privative modifiers as former(noun)(x), measure functions as mu_dim(x).
// The same syntax extended with \x:TY. lambdas serves as the template
// language for lexicon entries.

#include <map>
#include <string>

#include "anota/term.hpp"

namespace anota {

struct SymbolTable {
  std::map<std::string, TypePtr> consts;
};

// Canonical rendering; handles non-normal terms (lambdas print as \x:TY. body).
std::string term_to_string(const TermPtr& t);

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parses canonical text. Unknown constants are added to `syms` with inferred
// types (bare identifiers default to entities; applied heads to predicates).
TermPtr parse_term_text(const std::string& text, SymbolTable& syms);
TermPtr parse_term_text(const std::string& text);

// As above but requires the result to be a formula (type T).
TermPtr parse_formula_text(const std::string& text, SymbolTable& syms);
TermPtr parse_formula_text(const std::string& text);

// Internal constant-name encodings shared by printer, parser and signature
// extraction. A threshold for adjective a relative to class c is the constant
// "th.a.c"; the choice individual for noun n is "the.n"; the privative
// modifier applied to noun n is "former.n"; the measure function for
// dimension k is "mu.k".
std::string theta_const_name(const std::string& adj, const std::string& cls);
std::string choice_const_name(const std::string& noun);
std::string privative_const_name(const std::string& noun);
std::string measure_const_name(const std::string& dim);
bool split_theta_const(const std::string& name, std::string& adj, std::string& cls);
bool split_choice_const(const std::string& name, std::string& noun);
bool split_privative_const(const std::string& name, std::string& noun);
bool split_measure_const(const std::string& name, std::string& dim);

}  // namespace anota
