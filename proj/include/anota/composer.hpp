#pragma once

// Bottom-up semantic composition over validated derivation trees. Combinator
// semantics: fa(f,a) = f a; ba(a,f) = f a; fc(f,g) = \z. f (g z);
// bc(g,f) = \z. f (g z); tr(a) = \P. P a. Every node's representation is
// checked against its category's semantic type; the root is beta-normalized
// and threshold/choice/privative operator applications are folded into
// atomic constants.

#include "anota/derivation.hpp"
#include "anota/lexicon.hpp"

namespace anota {

struct ComposeError : std::runtime_error {
  explicit ComposeError(const std::string& what) : std::runtime_error(what) {}
};

// Raw composed term for one node (no normalization).
TermPtr compose_node(const DerivPtr& t, const Lexicon& lex);

// Folds theta(adjective)(class), the(class) and former(class) applications
// into their atomic constants wherever the operands are concrete.
TermPtr fold_operator_constants(const TermPtr& t);

// Validates, composes, normalizes and folds; throws ComposeError on invalid
// derivations, unknown entries or type mismatches.
TermPtr compose_semantics(const DerivPtr& t, const Lexicon& lex);

}  // namespace anota
