#pragma once

// CCG categories over atoms S, NP, N, D with forward and backward slashes.
// AP abbreviates ((S\NP)\D) and NP^ abbreviates (S/(S\NP)); both expand at
// parse time and always print expanded.

#include <memory>
#include <string>

#include "anota/term.hpp"

namespace anota {

struct Category;
using CatPtr = std::shared_ptr<const Category>;

struct Category {
  enum class Kind { Atom, Forward, Backward };
  Kind kind;
  std::string atom;  // Atom
  CatPtr res, arg;   // res/arg of X/Y or X\Y
};

CatPtr cat_atom(std::string name);
CatPtr cat_forward(CatPtr res, CatPtr arg);   // X/Y
CatPtr cat_backward(CatPtr res, CatPtr arg);  // X\Y

bool cat_equal(const CatPtr& a, const CatPtr& b);
std::string cat_to_string(const CatPtr& c);

struct CategoryError : std::runtime_error {
  explicit CategoryError(const std::string& what) : std::runtime_error(what) {}
};

CatPtr parse_category(const std::string& text);

// S -> T, NP -> E, N -> E->T, D -> D; slashes become function types from the
// argument category's type to the result category's type.
TypePtr cat_to_semtype(const CatPtr& c);

// Common categories.
CatPtr cat_s();
CatPtr cat_np();
CatPtr cat_n();
CatPtr cat_d();
CatPtr cat_ap();      // (S\NP)\D
CatPtr cat_np_lift(); // S/(S\NP)

}  // namespace anota
