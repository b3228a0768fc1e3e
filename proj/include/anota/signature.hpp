#pragma once

// Signature extraction from semantic representations and instantiation of the
// comparison axiom schemas for that signature: consequence preservation (CP),
// polarity monotonicity (Ax1 upward for negative adjectives, Ax2 downward for
// positive ones), antonym exclusion and coverage (Ax3..Ax6), witness axioms
// tying the polarities together (Ax7, Ax8), threshold separation (TH),
// privative modifiers and choice individuals. Also compiles representations
// into the measure-function fragment that interprets F+(x,d) as mu(x) >= d
// and F-(x,d) as mu(x) <= d.

#include <set>
#include <string>
#include <vector>

#include "anota/lexicon.hpp"
#include "anota/term.hpp"

namespace anota {

struct LabeledFormula {
  std::string label;
  TermPtr formula;
};

struct Signature {
  std::set<std::string> gradables;                          // adjective lexemes
  std::set<std::pair<std::string, std::string>> thresholds; // (adjective, class)
  std::set<std::string> entities;                           // entity constants
  std::set<std::string> classes;                            // unary predicates
  std::set<std::string> relations;                          // binary entity predicates
  std::set<std::string> privatives;                         // nouns under the privative
  std::set<std::string> choices;                            // nouns under the choice fn
  std::set<std::string> dimensions;                         // dimensions in play
};

Signature signature_of(const std::vector<TermPtr>& formulas, const Lexicon& lex);

// Deterministically ordered axiom instances for the signature.
std::vector<LabeledFormula> instantiate_axioms(const Signature& sig, const Lexicon& lex);

// Replaces gradable atoms by measure comparisons; other structure unchanged.
TermPtr compile_to_measures(const TermPtr& formula, const Lexicon& lex);

}  // namespace anota
