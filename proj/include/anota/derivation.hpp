#pragma once

// Gold derivation trees read from an s-expression format:
//
//   (lex "Mary" mary NP)
//   (u tr NP^ <tree>)
//   (b fa S <tree> <tree>)
//
// Binary rules: fa (forward application), ba (backward application),
// fc (forward composition), bc (backward composition). Unary rule: tr
// (forward type raising).

#include <memory>
#include <string>
#include <vector>

#include "anota/category.hpp"

namespace anota {

enum class RuleName { Lex, ForwardApp, BackwardApp, ForwardComp, BackwardComp, TypeRaise };

std::string rule_to_string(RuleName r);

struct DerivationTree;
using DerivPtr = std::shared_ptr<const DerivationTree>;

struct DerivationTree {
  RuleName rule;
  CatPtr cat;
  // Lex
  std::string token;
  std::string entry_key;
  // TypeRaise: child in left; binary rules: left/right
  DerivPtr left, right;
  // source position for messages
  int line = 0, col = 0;
};

struct DerivationError : std::runtime_error {
  DerivationError(const std::string& what, int line, int col)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line), col(col) {}
  int line, col;
};

DerivPtr parse_derivation(const std::string& text);
DerivPtr parse_derivation_file(const std::string& path);
std::string serialize_derivation(const DerivPtr& t);

struct Violation {
  std::string where;  // path like root.left.right
  std::string message;
};

// Checks every internal node against its combinator's category contract.
std::vector<Violation> validate_derivation(const DerivPtr& t);

// Leaf tokens in surface order.
std::vector<std::string> derivation_tokens(const DerivPtr& t);

}  // namespace anota
